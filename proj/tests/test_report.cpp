#include "nphk/corpus.hpp"
#include "nphk/error.hpp"
#include "nphk/parse.hpp"
#include "nphk/report.hpp"

#include <doctest.h>

#include <regex>
#include <set>

using namespace nphk;

namespace {

const std::set<std::string> kRationalKeys{"h",     "h_lin",  "d",   "slope",      "intercept", "u_from",
                                          "u_to",  "p",      "k_p", "weight",     "normalization"};

// Collects every string reachable below a rational-valued key.
void rational_strings(const Json& j, bool under_key, std::vector<std::string>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) rational_strings(v, kRationalKeys.count(k) > 0, out);
  } else if (j.is_array()) {
    for (const auto& v : j) rational_strings(v, under_key, out);
  } else if (under_key) {
    CHECK(j.is_string());
    if (j.is_string()) out.push_back(j.get<std::string>());
  }
}

std::vector<Rational> default_p() { return {1, Rational(6, 5), Rational(4, 3), Rational(3, 2), 2}; }

}  // namespace

TEST_CASE("analyze pipeline examples") {
  auto d8 = to_json(analyze("x*(y - x^2)^2 + x^7", {1, Rational(4, 3), 2}));
  CHECK(d8["kind"] == "D8");
  CHECK(d8["m"] == "2");
  CHECK(d8["n"] == "7");
  CHECK(d8["h"] == "7/4");
  CHECK(d8["h_lin"] == "5/3");
  CHECK(d8["linearly_adapted"] == false);
  CHECK(d8["kp_table"][0]["k_p"] == "17/7");
  CHECK(d8["kp_table"][2]["k_p"] == "0");
  CHECK(d8["adapted"]["phase"] == "x*y^2 + x^7");
  CHECK(d8["adapted"]["polygon"]["d"] == "7/4");

  auto e6 = to_json(analyze("y^3 + x^4", {1}));
  CHECK(e6["kind"] == "E6");
  CHECK(e6["h"] == "12/7");
  CHECK(e6["kp_table"][0]["k_p"] == "29/12");

  auto rank1 = to_json(analyze("x^2 + y^3", default_p()));
  REQUIRE(rank1["warnings"].size() >= 1);
  CHECK(rank1["warnings"][0] == "rank >= 1: out of scope");
  CHECK(rank1["polygon"]["d"] == "6/5");
}

TEST_CASE("rational fields serialize as exact strings") {
  const std::regex rational("^-?\\d+(/\\d+)?$");
  for (const char* phi : {"x^2*y + y^3", "x*(y - x^3)^2 + x^9", "y^3 + y*x^3", "x^4 + y^4", "(y - x^2)^2 + x^5"}) {
    std::vector<std::string> values;
    rational_strings(to_json(analyze(phi, default_p())), false, values);
    CHECK(!values.empty());
    for (const auto& v : values) CHECK_MESSAGE(std::regex_match(v, rational), phi << ": " << v);
  }
}

TEST_CASE("reports are deterministic") {
  auto a = to_json(analyze("x*(y - x^2)^2 + x^5", default_p())).dump();
  auto b = to_json(analyze("x*(y - x^2)^2 + x^5", default_p())).dump();
  CHECK(a == b);

  DecayFit f1 = fit_decay(parse_polynomial("x^2 + y^2"), AmplitudeSpec{}, geometric_grid(64, 256, 2));
  DecayFit f2 = fit_decay(parse_polynomial("x^2 + y^2"), AmplitudeSpec{}, geometric_grid(64, 256, 2));
  CHECK(decay_csv(f1) == decay_csv(f2));
  CHECK(to_json(f1).dump() == to_json(f2).dump());
  CHECK(decay_csv(f1).rfind("lambda,re_I,im_I,abs_I,quad_err\n", 0) == 0);
}

TEST_CASE("errors, svg and summary") {
  CHECK_THROWS_AS(analyze("x^2 +", default_p()), ParseError);
  CHECK_THROWS_AS(analyze("x + y^2", default_p()), Error);
  try {
    analyze("x^2 + y^2", {3});
    FAIL("no throw");
  } catch (const Error& e) {
    auto j = error_json(e);
    CHECK(j["error"]["kind"] == "DomainError");
  }

  auto r = analyze("y^3 + x^5", default_p());
  auto svg = polygon_svg(r);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(human_summary(r).find("E8") != std::string::npos);
}

TEST_CASE("supplementary corpus passes and a poisoned value fails once") {
  auto rows = supplementary_corpus();
  CHECK(run_corpus(rows, "D").failures() == 0);

  auto poisoned = rows;
  poisoned[1].h = "0";
  auto res = run_corpus(poisoned, "D");
  CHECK(res.failures() == 1);
  for (const auto& c : res.checks)
    if (!c.pass) {
      CHECK(c.field == "h");
      CHECK(c.expected == "0");
      CHECK(c.actual == "7/4");
    }
}

TEST_CASE("corpus filter") {
  auto res = run_corpus(builtin_corpus(), "E");
  CHECK(res.rows_run.size() == 3);
  CHECK(res.failures() == 0);

  auto d = run_corpus(builtin_corpus(), "D");
  for (const auto& row : d.rows_run) {
    bool is_d = false;
    for (const auto& r : builtin_corpus())
      if (r.phase == row) is_d = r.kind.rfind("D", 0) == 0;
    CHECK_MESSAGE(is_d, row);
  }
  CHECK(d.rows_run.size() == 9);

  auto id = run_corpus({}, "identity");
  CHECK(!id.checks.empty());
  CHECK(id.failures() == 0);
}

TEST_CASE("affine checks on rank-zero rows") {
  CorpusResult out;
  run_affine_checks(supplementary_corpus(), "", 7, 5, out);
  CHECK(!out.checks.empty());
  CHECK(out.failures() == 0);
}
