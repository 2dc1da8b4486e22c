#include "nphk/corpus.hpp"

#include "nphk/classify.hpp"
#include "nphk/error.hpp"
#include "nphk/exponent.hpp"
#include "nphk/parse.hpp"

#include <algorithm>

namespace nphk {

int CorpusResult::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

std::vector<CorpusRow> reference_corpus() {
  return {
      {"x^2*y + y^3", "D4", std::nullopt, std::nullopt, "3/2", "3/2", true, "7/3"},
      {"(y - x^2)^2 + x^5", "D6", "2", "5", "5/3", "5/3", true, "12/5"},
      {"(y - x^2)^2 + x^7", "D8", "2", "7", "7/4", "5/3", false, "17/7"},
      {"(y - x^3)^2 + x^9", "D10", "3", "9", "9/5", "7/4", false, "22/9"},
      {"(y - x^2)^2", "D_inf", "2", "inf", "2", "5/3", false, "5/2"},
      {"y^3 + x^4", "E6", std::nullopt, std::nullopt, "12/7", "12/7", true, "29/12"},
      {"y^3 + y*x^3", "E7", std::nullopt, std::nullopt, "9/5", "9/5", true, "22/9"},
      {"y^3 + x^5", "E8", std::nullopt, std::nullopt, "15/8", "15/8", true, "37/15"},
      {"y^3 + x^6", "CaseBIV", std::nullopt, std::nullopt, "2", "2", true, "5/2"},
      {"x^4 + y^4", "CaseC", std::nullopt, std::nullopt, "2", "2", true, "5/2"},
  };
}

// Rank-zero D phases with the same branch data: the factor x supplies the
// x*y^2 cubic term that the D normal form requires.
std::vector<CorpusRow> supplementary_corpus() {
  return {
      {"x*(y - x^2)^2 + x^5", "D6", "2", "5", "5/3", "5/3", true, "12/5", true},
      {"x*(y - x^2)^2 + x^7", "D8", "2", "7", "7/4", "5/3", false, "17/7", true},
      {"x*(y - x^3)^2 + x^9", "D10", "3", "9", "9/5", "7/4", false, "22/9", true},
      {"x*(y - x^2)^2", "D_inf", "2", "inf", "2", "5/3", false, "5/2", true},
  };
}

std::vector<CorpusRow> builtin_corpus() {
  auto rows = reference_corpus();
  auto extra = supplementary_corpus();
  rows.insert(rows.end(), extra.begin(), extra.end());
  return rows;
}

CorpusResult run_corpus(const std::vector<CorpusRow>& rows, const std::string& filter) {
  CorpusResult out;
  auto check = [&](const std::string& row, const std::string& field, const std::string& expected,
                   const std::string& actual) {
    out.checks.push_back({row, field, expected, actual, expected == actual});
  };
  for (const auto& row : rows) {
    if (!filter.empty() && row.kind.rfind(filter, 0) != 0) continue;
    out.rows_run.push_back(row.phase);
    try {
      Classification c = classify(parse_polynomial(row.phase));
      const SingularityKind& k = c.kind;
      check(row.phase, "kind", row.kind, k.name());
      if (row.m) check(row.phase, "m", *row.m, k.m ? k.m->to_string() : "-");
      if (row.n) check(row.phase, "n", *row.n, k.n ? k.n->to_string() : "-");
      if (!k.supported()) {
        const std::pair<const char*, std::string> fields[] = {
            {"h", row.h}, {"h_lin", row.h_lin}, {"LA", row.linearly_adapted ? "yes" : "no"}, {"k_p(1)", row.kp1}};
        for (const auto& [f, want] : fields) check(row.phase, f, want, "unsupported kind");
        continue;
      }
      HeightReport hr = height_report(c);
      check(row.phase, "h", row.h, to_string(hr.h));
      check(row.phase, "h_lin", row.h_lin, to_string(hr.h_lin));
      check(row.phase, "LA", row.linearly_adapted ? "yes" : "no", hr.linearly_adapted ? "yes" : "no");
      check(row.phase, "k_p(1)", row.kp1, to_string(kp_point(k, 1)));
    } catch (const Error& e) {
      check(row.phase, "kind", row.kind, std::string("error: ") + e.what());
    }
  }
  if (filter.empty() || filter == "identity") {
    for (int m = 2; m <= 6; ++m) {
      std::vector<Order> ns;
      for (int n = 2 * m + 2; n <= 24; ++n) ns.emplace_back(n);
      ns.push_back(Order::infinite());
      for (Order n : ns) {
        std::string label = "nla_identity(m=" + std::to_string(m) + ", n=" + n.to_string() + ")";
        check(label, "identity", "true", verify_nla_identity(m, n) ? "true" : "false");
      }
    }
    out.rows_run.push_back("nla identity suite");
  }
  return out;
}

LinearMap2 random_invertible_map(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  for (;;) {
    LinearMap2 M{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                 Rational(num(rng), den(rng))};
    if (M.determinant() != 0) return M;
  }
}

void run_affine_checks(const std::vector<CorpusRow>& rows, const std::string& filter, std::uint64_t seed,
                       int maps_per_row, CorpusResult& out) {
  std::mt19937_64 rng(seed);
  for (const auto& row : rows) {
    if (!filter.empty() && row.kind.rfind(filter, 0) != 0) continue;
    BivariatePolynomial p = parse_polynomial(row.phase);
    SingularityKind base = classify(p).kind;
    for (int t = 0; t < maps_per_row; ++t) {
      LinearMap2 M = random_invertible_map(rng);
      std::string label = row.phase + " under " + M.to_string();
      try {
        SingularityKind k = classify(apply_linear(p, M)).kind;
        auto mn = [](const SingularityKind& s) {
          return s.name() + " m=" + (s.m ? s.m->to_string() : "-") + " n=" + (s.n ? s.n->to_string() : "-");
        };
        out.checks.push_back({label, "affine", mn(base), mn(k), k.tag == base.tag && k.m == base.m && k.n == base.n});
      } catch (const Error& e) {
        out.checks.push_back({label, "affine", base.name(), std::string("error: ") + e.what(), false});
      }
    }
  }
}

}  // namespace nphk
