#include "nphk/classify.hpp"

#include "nphk/error.hpp"

#include <algorithm>

namespace nphk {

namespace {

// Dense univariate polynomials over Q, coefficients low to high.
using Dense = std::vector<Rational>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Dense& a) { return static_cast<int>(a.size()) - 1; }

Dense derivative(const Dense& a) {
  Dense r;
  for (std::size_t k = 1; k < a.size(); ++k) r.push_back(a[k] * static_cast<int>(k));
  trim(r);
  return r;
}

Dense sub(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  Dense q(std::max(0, deg(a) - deg(b) + 1));
  while (deg(a) >= deg(b) && !a.empty()) {
    int shift = deg(a) - deg(b);
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= c * b[k];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Dense monic(Dense a) {
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

Dense gcd(Dense a, Dense b) {
  while (!b.empty()) {
    Dense r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Number of distinct real roots of a squarefree polynomial (Sturm).
int real_root_count(const Dense& f) {
  if (deg(f) <= 0) return 0;
  std::vector<Dense> seq{f, derivative(f)};
  while (!seq.back().empty() && deg(seq.back()) > 0) {
    Dense r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(r);
  }
  auto changes = [&](bool at_plus) {
    int count = 0, prev = 0;
    for (const auto& p : seq) {
      int s = p.back() > 0 ? 1 : -1;
      if (!at_plus && deg(p) % 2 == 1) s = -s;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return changes(false) - changes(true);
}

// Yun's squarefree factorization: result[i] has the roots of multiplicity i+1.
std::vector<Dense> squarefree(const Dense& f) {
  std::vector<Dense> out;
  Dense fp = derivative(f);
  Dense a = gcd(f, fp);
  Dense b = divmod(f, a).first;
  Dense c = divmod(fp, a).first;
  Dense d = sub(c, derivative(b));
  while (deg(b) > 0) {
    Dense g = gcd(b, d);
    out.push_back(g);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = sub(c, derivative(b));
  }
  return out;
}

// f(t) = hom(1, t) for a homogeneous form of degree k.
Dense dehomogenize(const BivariatePolynomial& hom, int k) {
  Dense f(static_cast<std::size_t>(k + 1));
  for (const auto& [e, c] : hom.terms()) f[e.j] = c;
  trim(f);
  return f;
}

void require_homogeneous(const BivariatePolynomial& hom) {
  if (hom.is_zero()) throw Error(ErrorKind::Domain, "zero form has no circle vanishing order");
  if (!hom.is_homogeneous()) throw Error(ErrorKind::Domain, "polynomial is not homogeneous");
}

// Real linear factor of a binary form with multiplicity >= mult, as (alpha, beta)
// for alpha x + beta y. Such a factor of a cubic is always rational.
std::pair<Rational, Rational> multiple_factor(const BivariatePolynomial& hom, int mult) {
  int k = hom.total_degree();
  Dense f = dehomogenize(hom, k);
  if (k - deg(f) >= mult) return {1, 0};
  auto parts = squarefree(f);
  for (int i = static_cast<int>(parts.size()); i >= mult; --i) {
    const Dense& g = parts[i - 1];
    if (deg(g) == 1) return {g[0] / g[1], 1};  // y - r x with r = -g0/g1 the root
    if (deg(g) > 1)
      throw Error(ErrorKind::NormalizationFailed,
                  "repeated factor of degree " + std::to_string(deg(g)) + " is not split over Q");
  }
  throw Error(ErrorKind::NormalizationFailed, "no repeated real linear factor");
}

// M with (M^-1 x)_2 = alpha x + beta y, so the factor becomes the second coordinate.
LinearMap2 factor_to_second(const Rational& alpha, const Rational& beta) {
  LinearMap2 inv = beta != 0 ? LinearMap2{1, 0, alpha, beta} : LinearMap2{0, 1, alpha, beta};
  return inv.inverse();
}

UnivariatePolynomial series_inverse(const UnivariatePolynomial& u, int n) {
  Rational u0 = u.coefficient(0);
  std::vector<Rational> uc(static_cast<std::size_t>(n + 1));
  for (const auto& [k, c] : u.terms())
    if (k <= n) uc[k] = c;
  std::vector<Rational> inv(static_cast<std::size_t>(n + 1));
  inv[0] = 1 / u0;
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j)
      if (uc[j] != 0) s += uc[j] * inv[k - j];
    inv[k] = -s / u0;
  }
  return UnivariatePolynomial::from_coefficients(inv);
}

UnivariatePolynomial shift_down(const UnivariatePolynomial& q, int e) {
  UnivariatePolynomial r;
  for (const auto& [k, c] : q.terms()) r.set(k - e, c);
  return r;
}

struct Branch {
  UnivariatePolynomial psi;  // exact polynomial, holding the jet to degree n
  bool exact = false;
};

// Power-series Newton for F(x, psi(x)) = 0, psi(0) = 0, to degree n. The
// y-derivative along the branch has order e (0 regular, 1 for the D fold).
Branch solve_branch(const BivariatePolynomial& F, int n) {
  BivariatePolynomial Fy = F.partial_y();
  UnivariatePolynomial psi;
  Order e = univariate_order(substitute_branch(Fy, psi, n));
  if (e.is_infinite() || e.value() > 1)
    throw Error(ErrorKind::NormalizationFailed, "branch equation is degenerate along the solution");
  int ev = e.value();
  bool converged = false;
  // Work to degree t and double it, so coefficients above the correct jet
  // never get a chance to grow.
  int t = std::min(n, 1);
  for (int iter = 0; iter < 64; ++iter) {
    UnivariatePolynomial R = substitute_branch(F, psi, t + ev).exact();
    if (R.is_zero()) {
      if (t == n) {
        converged = true;
        break;
      }
      t = std::min(n, 2 * t);
      continue;
    }
    UnivariatePolynomial D = substitute_branch(Fy, psi, t + ev).exact();
    if (univariate_order(D) != Order(ev) || univariate_order(R) < Order(ev))
      throw Error(ErrorKind::NormalizationFailed, "branch equation has no smooth solution through the origin");
    UnivariatePolynomial delta = (shift_down(R, ev) * series_inverse(shift_down(D, ev), t)).truncated(t).exact();
    psi = (psi - delta).truncated(t).exact();
    t = std::min(n, 2 * t);
  }
  if (!converged) throw Error(ErrorKind::NormalizationFailed, "branch iteration did not converge");
  if (psi.coefficient(0) != 0) throw Error(ErrorKind::NormalizationFailed, "branch does not pass through the origin");
  Branch b{psi, false};
  b.exact = substitute_branch_exact(F, psi).is_zero();
  return b;
}

// Order of the y^j coefficient of q as a series in x; nullopt if it vanishes
// to the working truncation.
std::optional<int> y_coefficient_order(const BivariatePolynomial& q, int j) {
  std::optional<int> best;
  for (const auto& [e, c] : q.terms())
    if (e.j == j && (!best || e.i < *best)) best = e.i;
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------

const char* to_string(KindTag tag) {
  switch (tag) {
    case KindTag::D4: return "D4";
    case KindTag::D: return "D";
    case KindTag::E6: return "E6";
    case KindTag::E7: return "E7";
    case KindTag::E8: return "E8";
    case KindTag::CaseBIV: return "CaseBIV";
    case KindTag::CaseC: return "CaseC";
    case KindTag::NondegenerateOrRankPositive: return "NondegenerateOrRankPositive";
    case KindTag::UnsupportedHeightAbove2: return "UnsupportedHeightAbove2";
  }
  return "?";
}

SingularityKind SingularityKind::d(Order m, Order n) {
  SingularityKind k;
  k.tag = KindTag::D;
  k.m = m;
  k.n = n;
  return k;
}

SingularityKind SingularityKind::of(KindTag tag) {
  SingularityKind k;
  k.tag = tag;
  return k;
}

bool SingularityKind::supported() const {
  return tag != KindTag::NondegenerateOrRankPositive && tag != KindTag::UnsupportedHeightAbove2;
}

bool SingularityKind::non_linearly_adapted() const {
  if (tag != KindTag::D || !m || !n || m->is_infinite()) return false;
  return n->is_infinite() || 2 * m->value() + 1 < n->value();
}

std::string SingularityKind::name() const {
  switch (tag) {
    case KindTag::D:
      if (n && n->is_infinite()) return "D_inf";
      return n ? "D" + std::to_string(n->value() + 1) : "D";
    case KindTag::NondegenerateOrRankPositive:
      if (rank == 2) return "A1";
      if (n) return n->is_infinite() ? "A_inf" : "A" + std::to_string(n->value() - 1);
      return "A";
    default:
      return to_string(tag);
  }
}

int circle_vanishing_order(const BivariatePolynomial& hom) {
  require_homogeneous(hom);
  int k = hom.total_degree();
  Dense f = dehomogenize(hom, k);
  int best = k - deg(f);  // multiplicity of the factor x
  auto parts = squarefree(f);
  for (int i = static_cast<int>(parts.size()); i > best; --i)
    if (real_root_count(parts[i - 1]) > 0) {
      best = i;
      break;
    }
  return best;
}

int rank_at_origin(const BivariatePolynomial& p) {
  taylor_support(p);
  Rational a = p.coefficient(2, 0), b = p.coefficient(1, 1), c = p.coefficient(0, 2);
  if (a == 0 && b == 0 && c == 0) return 0;
  return 4 * a * c - b * b != 0 ? 2 : 1;
}

int default_truncation(const BivariatePolynomial& p) { return 2 * std::max(p.total_degree(), 0) + 16; }

namespace {

// For an exact polynomial of degree d, a finite n is an intersection number of
// p = 0 with a branch of dp/dy = 0, so n <= d (d - 1) by Bezout. Working past
// that degree either finds n or proves that b0 vanishes identically.
int bezout_truncation(const BivariatePolynomial& p) {
  int d = p.total_degree();
  return d * (d - 1) + 1;
}

DNormalForm d_normal_form_at(const BivariatePolynomial& p, int N, bool escalate);

}  // namespace

DNormalForm d_normal_form(const BivariatePolynomial& p, std::optional<int> trunc) {
  int N = trunc.value_or(default_truncation(p));
  if (p.truncation()) N = std::min(N, *p.truncation());
  return d_normal_form_at(p, N, !trunc);
}

namespace {

DNormalForm d_normal_form_at(const BivariatePolynomial& p, int N, bool escalate) {
  int rank = rank_at_origin(p);
  LinearMap2 M;
  if (rank == 2) throw Error(ErrorKind::Domain, "nondegenerate critical point has no fold branch");
  if (rank == 1) {
    BivariatePolynomial q2 = homogeneous_part(p, 2);
    auto [alpha, beta] = multiple_factor(q2, 2);
    M = factor_to_second(alpha, beta);
  } else {
    BivariatePolynomial q3 = homogeneous_part(p, 3);
    if (q3.is_zero() || circle_vanishing_order(q3) != 2)
      throw Error(ErrorKind::NormalizationFailed, "cubic part does not have exactly a double real factor");
    auto [alpha, beta] = multiple_factor(q3, 2);
    M = factor_to_second(alpha, beta);
    // Cubic is now u2^2 (A u1 + B u2); make the simple factor the first coordinate.
    BivariatePolynomial c3 = homogeneous_part(apply_linear(p, M), 3);
    Rational A = c3.coefficient(1, 2), B = c3.coefficient(0, 3);
    M = M * LinearMap2{A, B, 0, 1}.inverse();
  }
  BivariatePolynomial pm = apply_linear(p, M);
  Branch br = solve_branch(pm.partial_y(), N);

  DNormalForm out;
  out.rank = rank;
  out.normalization = M;
  out.exact = br.exact && pm.is_exact();
  if (out.exact) {
    out.psi = br.psi;
    out.b0 = substitute_branch_exact(pm, br.psi);
    out.adapted = apply_shear(pm, br.psi);
  } else {
    out.psi = br.psi.truncated(N);
    out.b0 = substitute_branch(pm, br.psi, N);
    out.adapted = apply_shear(pm.truncated(N), out.psi);
  }
  out.m = univariate_order(out.psi);
  if (out.m.is_infinite() && !out.exact)
    throw Error(ErrorKind::TruncationTooSmall, "m unresolved >= " + std::to_string(N + 1));
  out.omega0 = out.m.is_infinite() ? Rational(0) : out.psi.coefficient(out.m.value());
  out.n = univariate_order(out.b0);
  if (out.n.is_infinite() && !out.exact && pm.is_exact()) {
    int B = bezout_truncation(pm);
    if (N < B && escalate) return d_normal_form_at(p, B, false);
  }
  bool proven_flat = pm.is_exact() && N >= bezout_truncation(pm);
  if (out.n.is_infinite() && !out.exact && !proven_flat)
    throw Error(ErrorKind::TruncationTooSmall, "n unresolved >= " + std::to_string(N + 1));
  if (!out.n.is_infinite()) out.beta0 = out.b0.coefficient(out.n.value());
  if (rank == 0) {
    // b(0,0) = 0, d1 b(0,0) != 0, d2 b(0,0) = 0 in the adapted form.
    if (out.adapted.coefficient(0, 2) != 0 || out.adapted.coefficient(1, 2) == 0 ||
        out.adapted.coefficient(0, 3) != 0)
      throw Error(ErrorKind::NormalizationFailed, "adapted form violates the D-type side conditions");
  }
  return out;
}

Classification classify_impl(const BivariatePolynomial& p, std::optional<int> trunc) {
  taylor_support(p);
  if (p.is_zero()) throw Error(ErrorKind::Unsupported, "zero phase");
  int N = trunc.value_or(default_truncation(p));
  if (p.truncation()) N = std::min(N, *p.truncation());

  Classification out;
  out.adapted = p;
  int rank = rank_at_origin(p);
  if (rank >= 1) {
    out.kind = SingularityKind::of(KindTag::NondegenerateOrRankPositive);
    out.kind.rank = rank;
    out.warnings.push_back("rank >= 1: out of scope");
    if (rank == 1) {
      try {
        DNormalForm f = d_normal_form_at(p, N, !trunc);
        out.kind.n = f.n;
        out.d_form = f;
        out.normalization = f.normalization;
        out.shear = f.psi;
        out.adapted = f.adapted;
      } catch (const Error& e) {
        out.warnings.push_back(std::string("branch data unavailable: ") + e.what());
      }
    }
    return out;
  }

  BivariatePolynomial q3 = homogeneous_part(p, 3);
  if (!q3.is_zero()) {
    int n3 = circle_vanishing_order(q3);
    if (n3 == 1) {
      out.kind = SingularityKind::of(KindTag::D4);
      return out;
    }
    if (n3 == 2) {
      DNormalForm f = d_normal_form_at(p, N, !trunc);
      out.kind = SingularityKind::d(f.m, f.n);
      out.normalization = f.normalization;
      out.shear = f.psi;
      out.adapted = f.adapted;
      out.d_form = f;
      return out;
    }
    auto [alpha, beta] = multiple_factor(q3, 3);
    LinearMap2 M = factor_to_second(alpha, beta);
    BivariatePolynomial pm = apply_linear(p, M);
    Branch br = solve_branch(pm.partial_y().partial_y(), N);
    bool exact = br.exact && pm.is_exact();
    out.normalization = M;
    out.shear = exact ? br.psi : br.psi.truncated(N);
    out.adapted = exact ? apply_shear(pm, br.psi) : apply_shear(pm.truncated(N), out.shear);
    auto k0 = y_coefficient_order(out.adapted, 0);
    auto k1 = y_coefficient_order(out.adapted, 1);
    // Unresolved orders exceed every threshold below.
    int K0 = k0.value_or(N + 1), K1 = k1.value_or(N + 1);
    KindTag tag;
    if (K0 == 4)
      tag = KindTag::E6;
    else if (K1 == 3)
      tag = KindTag::E7;
    else if (K0 == 5)
      tag = KindTag::E8;
    else if (K0 == 6 || K1 == 4)
      tag = KindTag::CaseBIV;
    else
      tag = KindTag::UnsupportedHeightAbove2;
    out.kind = SingularityKind::of(tag);
    out.kind.k0 = k0;
    out.kind.k1 = k1;
    if (tag == KindTag::UnsupportedHeightAbove2) out.warnings.push_back("h > 2: unsupported");
    return out;
  }

  BivariatePolynomial q4 = homogeneous_part(p, 4);
  if (!q4.is_zero() && circle_vanishing_order(q4) <= 2) {
    out.kind = SingularityKind::of(KindTag::CaseC);
    return out;
  }
  out.kind = SingularityKind::of(KindTag::UnsupportedHeightAbove2);
  out.warnings.push_back("h > 2: unsupported");
  return out;
}

}  // namespace

Classification classify(const BivariatePolynomial& p, std::optional<int> trunc) {
  Classification c = classify_impl(p, trunc);
  if (c.kind.supported()) {
    // The height formula must agree with the distance in the constructed coordinates.
    Rational d = newton_distance(build_polygon(taylor_support(c.adapted))).d;
    if (d != height(c.kind))
      c.warnings.push_back("adapted Newton distance " + to_string(d) + " differs from h = " + to_string(height(c.kind)));
  }
  return c;
}

SingularityKind classify_singularity(const BivariatePolynomial& p) { return classify(p).kind; }

Rational height(const SingularityKind& kind) {
  switch (kind.tag) {
    case KindTag::D4: return Rational(3, 2);
    case KindTag::D:
      if (kind.n->is_infinite()) return 2;
      return Rational(2 * kind.n->value(), kind.n->value() + 1);
    case KindTag::E6: return Rational(12, 7);
    case KindTag::E7: return Rational(9, 5);
    case KindTag::E8: return Rational(15, 8);
    case KindTag::CaseBIV:
    case KindTag::CaseC: return 2;
    default:
      throw Error(ErrorKind::Unsupported, std::string("height is not available for ") + kind.name());
  }
}

Rational linear_height(const SingularityKind& kind) {
  Rational h = height(kind);
  if (kind.tag != KindTag::D || kind.m->is_infinite()) return h;
  int m = kind.m->value();
  return std::min(h, Rational(2 * m + 1, m + 1));
}

int multiplicity_mfrak(const Classification& c) {
  if (!c.kind.supported())
    throw Error(ErrorKind::Unsupported, std::string("multiplicity is not available for ") + c.kind.name());
  Rational h = height(c.kind);
  NewtonDistance nd = newton_distance(build_polygon(taylor_support(c.adapted)));
  return nd.principal.kind == FaceKind::Vertex && nd.d == h ? 1 : 0;
}

int multiplicity_mfrak(const BivariatePolynomial& p, const SingularityKind& kind) {
  Classification c = classify(p);
  // k0 and k1 are chart data; only the type and (m, n) identify the kind.
  if (c.kind.tag != kind.tag || c.kind.m != kind.m || c.kind.n != kind.n)
    throw Error(ErrorKind::Domain, "phase classifies as " + c.kind.name() + ", not " + kind.name());
  return multiplicity_mfrak(c);
}

HeightReport height_report(const Classification& c) {
  HeightReport r;
  r.h = height(c.kind);
  r.h_lin = linear_height(c.kind);
  r.multiplicity = multiplicity_mfrak(c);
  r.linearly_adapted = r.h == r.h_lin;
  return r;
}

}  // namespace nphk
