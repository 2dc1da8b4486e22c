#include "nphk/polynomial.hpp"

#include "nphk/error.hpp"

#include <algorithm>
#include <sstream>

namespace nphk {

namespace {

std::optional<int> meet(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Appends "c*mono" to the output with sign handling; mono may be empty.
void append_term(std::ostringstream& out, bool first, const Rational& c, const std::string& mono) {
  Rational mag = c < 0 ? Rational(-c) : c;
  if (first) {
    if (c < 0) out << "-";
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  if (mono.empty()) {
    out << to_string(mag);
  } else if (mag == 1) {
    out << mono;
  } else {
    out << to_string(mag) << "*" << mono;
  }
}

std::string power(char var, int k) {
  if (k == 0) return "";
  if (k == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(k);
}

}  // namespace

// ---------------------------------------------------------------------------
// UnivariatePolynomial

UnivariatePolynomial UnivariatePolynomial::monomial(int k, const Rational& c) {
  UnivariatePolynomial p;
  p.set(k, c);
  return p;
}

UnivariatePolynomial UnivariatePolynomial::from_coefficients(const std::vector<Rational>& c) {
  UnivariatePolynomial p;
  for (std::size_t k = 0; k < c.size(); ++k) p.set(static_cast<int>(k), c[k]);
  return p;
}

int UnivariatePolynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

Rational UnivariatePolynomial::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UnivariatePolynomial::set(int k, const Rational& c) {
  if (k < 0) throw Error(ErrorKind::Domain, "negative exponent");
  if (truncation_ && k > *truncation_) return;
  if (c == 0)
    terms_.erase(k);
  else
    terms_[k] = c;
}

void UnivariatePolynomial::clip() {
  if (!truncation_) return;
  terms_.erase(terms_.upper_bound(*truncation_), terms_.end());
}

UnivariatePolynomial UnivariatePolynomial::truncated(int n) const {
  UnivariatePolynomial r = *this;
  r.truncation_ = meet(truncation_, n);
  r.clip();
  return r;
}

UnivariatePolynomial UnivariatePolynomial::exact() const {
  UnivariatePolynomial r = *this;
  r.truncation_.reset();
  return r;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  UnivariatePolynomial r(truncation_ ? std::optional<int>(*truncation_ - 1) : std::nullopt);
  for (const auto& [k, c] : terms_)
    if (k > 0) r.terms_[k - 1] = c * k;
  return r;
}

Rational UnivariatePolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  int prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int k = prev; k > it->first; --k) acc *= t;
    acc += it->second;
    prev = it->first;
  }
  for (int k = prev; k > 0; --k) acc *= t;
  return acc;
}

double UnivariatePolynomial::evaluate(double t) const {
  double acc = 0;
  int prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int k = prev; k > it->first; --k) acc *= t;
    acc += to_double(it->second);
    prev = it->first;
  }
  for (int k = prev; k > 0; --k) acc *= t;
  return acc;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o) {
  truncation_ = meet(truncation_, o.truncation_);
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  clip();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& o) { return *this += -o; }

UnivariatePolynomial UnivariatePolynomial::operator-() const {
  UnivariatePolynomial r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  UnivariatePolynomial r(meet(a.truncation_, b.truncation_));
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      int k = ka + kb;
      if (r.truncation_ && k > *r.truncation_) break;
      r.terms_[k] += ca * cb;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

UnivariatePolynomial operator*(const Rational& c, const UnivariatePolynomial& a) {
  if (c == 0) return UnivariatePolynomial(a.truncation_);
  UnivariatePolynomial r = a;
  for (auto& [k, v] : r.terms_) v *= c;
  return r;
}

std::string UnivariatePolynomial::to_string(char var) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    append_term(out, first, c, power(var, k));
    first = false;
  }
  if (first) out << "0";
  if (truncation_) out << " + O(" << var << "^" << (*truncation_ + 1) << ")";
  return out.str();
}

Order univariate_order(const UnivariatePolynomial& q) {
  if (q.is_zero()) return Order::infinite();
  return Order(q.terms().begin()->first);
}

// ---------------------------------------------------------------------------
// BivariatePolynomial

BivariatePolynomial BivariatePolynomial::constant(const Rational& c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(int i, int j, const Rational& c) {
  BivariatePolynomial p;
  p.set(i, j, c);
  return p;
}

int BivariatePolynomial::total_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.total();
}

int BivariatePolynomial::degree_in_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.j);
  return d;
}

Rational BivariatePolynomial::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePolynomial::set(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw Error(ErrorKind::Domain, "negative exponent");
  if (truncation_ && i + j > *truncation_) return;
  if (c == 0)
    terms_.erase({i, j});
  else
    terms_[{i, j}] = c;
}

void BivariatePolynomial::clip() {
  if (!truncation_) return;
  std::erase_if(terms_, [n = *truncation_](const auto& kv) { return kv.first.total() > n; });
}

BivariatePolynomial BivariatePolynomial::truncated(int n) const {
  BivariatePolynomial r = *this;
  r.truncation_ = meet(truncation_, n);
  r.clip();
  return r;
}

BivariatePolynomial BivariatePolynomial::exact() const {
  BivariatePolynomial r = *this;
  r.truncation_.reset();
  return r;
}

BivariatePolynomial BivariatePolynomial::partial_x() const {
  BivariatePolynomial r(truncation_ ? std::optional<int>(*truncation_ - 1) : std::nullopt);
  for (const auto& [e, c] : terms_)
    if (e.i > 0) r.terms_[{e.i - 1, e.j}] = c * e.i;
  return r;
}

BivariatePolynomial BivariatePolynomial::partial_y() const {
  BivariatePolynomial r(truncation_ ? std::optional<int>(*truncation_ - 1) : std::nullopt);
  for (const auto& [e, c] : terms_)
    if (e.j > 0) r.terms_[{e.i, e.j - 1}] = c * e.j;
  return r;
}

std::vector<UnivariatePolynomial> BivariatePolynomial::y_coefficients() const {
  std::vector<UnivariatePolynomial> out(static_cast<std::size_t>(degree_in_y() + 1));
  for (const auto& [e, c] : terms_) out[e.j].set(e.i, c);
  return out;
}

Rational BivariatePolynomial::evaluate(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  auto rows = y_coefficients();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) acc = acc * y + it->evaluate(x);
  return acc;
}

double BivariatePolynomial::evaluate(double x, double y) const {
  double acc = 0;
  auto rows = y_coefficients();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) acc = acc * y + it->evaluate(x);
  return acc;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned k) const {
  BivariatePolynomial result = constant(1);
  result.truncation_ = truncation_;
  BivariatePolynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool BivariatePolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.total();
  return terms_.rbegin()->first.total() == d;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  truncation_ = meet(truncation_, o.truncation_);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  clip();
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) { return *this += -o; }

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial r(meet(a.truncation_, b.truncation_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{ea.i + eb.i, ea.j + eb.j};
      if (r.truncation_ && e.total() > *r.truncation_) continue;
      r.terms_[e] += ca * cb;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

BivariatePolynomial operator*(const Rational& c, const BivariatePolynomial& a) {
  if (c == 0) return BivariatePolynomial(a.truncation_);
  BivariatePolynomial r = a;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

std::string BivariatePolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono = power('x', e.i);
    std::string py = power('y', e.j);
    if (!mono.empty() && !py.empty()) mono += "*";
    mono += py;
    append_term(out, first, c, mono);
    first = false;
  }
  if (first) out << "0";
  if (truncation_) out << " + O(deg " << (*truncation_ + 1) << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// LinearMap2 and substitutions

LinearMap2 LinearMap2::inverse() const {
  Rational det = determinant();
  if (det == 0) throw Error(ErrorKind::SingularMap, "linear map is singular");
  return {d / det, -b / det, -c / det, a / det};
}

LinearMap2 operator*(const LinearMap2& A, const LinearMap2& B) {
  return {A.a * B.a + A.b * B.c, A.a * B.b + A.b * B.d,
          A.c * B.a + A.d * B.c, A.c * B.b + A.d * B.d};
}

std::string LinearMap2::to_string() const {
  return "[[" + nphk::to_string(a) + ", " + nphk::to_string(b) + "], [" +
         nphk::to_string(c) + ", " + nphk::to_string(d) + "]]";
}

BivariatePolynomial apply_linear(const BivariatePolynomial& p, const LinearMap2& M) {
  if (M.determinant() == 0) throw Error(ErrorKind::SingularMap, "linear map is singular");
  std::optional<int> trunc = p.truncation();
  BivariatePolynomial u = BivariatePolynomial::monomial(1, 0, M.a) + BivariatePolynomial::monomial(0, 1, M.b);
  BivariatePolynomial v = BivariatePolynomial::monomial(1, 0, M.c) + BivariatePolynomial::monomial(0, 1, M.d);
  int maxi = 0, maxj = 0;
  for (const auto& [e, c] : p.terms()) {
    maxi = std::max(maxi, e.i);
    maxj = std::max(maxj, e.j);
  }
  std::vector<BivariatePolynomial> upow{BivariatePolynomial::constant(1)}, vpow{BivariatePolynomial::constant(1)};
  for (int k = 1; k <= maxi; ++k) upow.push_back(upow.back() * u);
  for (int k = 1; k <= maxj; ++k) vpow.push_back(vpow.back() * v);
  BivariatePolynomial r(trunc);
  for (const auto& [e, c] : p.terms()) r += c * (upow[e.i] * vpow[e.j]);
  return r;
}

BivariatePolynomial apply_shear(const BivariatePolynomial& p, const UnivariatePolynomial& psi) {
  std::optional<int> trunc = meet(p.truncation(), psi.truncation());
  if (trunc && psi.coefficient(0) != 0)
    throw Error(ErrorKind::Domain, "shear of a jet requires psi(0) = 0");
  BivariatePolynomial s(trunc);
  s += BivariatePolynomial::y();
  for (const auto& [k, c] : psi.terms()) s += BivariatePolynomial::monomial(k, 0, c);
  auto rows = p.y_coefficients();
  BivariatePolynomial r(trunc);
  // Horner in y with the shifted variable.
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    r = r * s;
    for (const auto& [k, c] : it->terms()) r += BivariatePolynomial::monomial(k, 0, c);
  }
  if (trunc) r = r.truncated(*trunc);
  return r;
}

BivariatePolynomial homogeneous_part(const BivariatePolynomial& p, int k) {
  if (p.truncation() && k > *p.truncation())
    throw Error(ErrorKind::Domain, "degree " + std::to_string(k) + " lies beyond the jet truncation");
  BivariatePolynomial r;
  for (const auto& [e, c] : p.terms())
    if (e.total() == k) r.set(e.i, e.j, c);
  return r;
}

UnivariatePolynomial substitute_branch(const BivariatePolynomial& p, const UnivariatePolynomial& s, int n) {
  auto rows = p.y_coefficients();
  UnivariatePolynomial acc(n);
  UnivariatePolynomial st = s.truncated(n);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) acc = acc * st + it->truncated(n);
  return acc;
}

UnivariatePolynomial substitute_branch_exact(const BivariatePolynomial& p, const UnivariatePolynomial& s) {
  auto rows = p.y_coefficients();
  UnivariatePolynomial acc;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) acc = acc * s + *it;
  return acc;
}

}  // namespace nphk
