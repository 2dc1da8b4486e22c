#pragma once

#include "nphk/classify.hpp"
#include "nphk/exponent.hpp"
#include "nphk/newton.hpp"
#include "nphk/oscint.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace nphk {

using Json = nlohmann::ordered_json;

struct AnalysisReport {
  std::string input_text;
  BivariatePolynomial phase;
  LatticeSet taylor_support;
  NewtonPolygon polygon;
  NewtonDistance distance;
  Classification classification;
  std::optional<HeightReport> heights;
  std::optional<ExponentProfile> profile;
  std::vector<std::pair<Rational, Rational>> kp_table;  // (p, k_p)
  std::vector<std::string> warnings;
};

AnalysisReport analyze(const std::string& text, const std::vector<Rational>& p_list);

Json to_json(const Rational& r);
Json to_json(const NewtonPolygon& poly, const NewtonDistance& d);
Json to_json(const AnalysisReport& report);
Json to_json(const DecayFit& fit);
Json to_json(const RandolScan& scan);
Json error_json(const std::exception& e);

// Columns lambda, re_I, im_I, abs_I, quad_err.
std::string decay_csv(const DecayFit& fit);
// Columns s1, s2, M_value, for the finest scan level.
std::string scan_csv(const RandolScan& scan);
std::string polygon_svg(const AnalysisReport& report);

std::string human_summary(const AnalysisReport& report);

}  // namespace nphk
