#include "nphk/report.hpp"

#include "nphk/error.hpp"
#include "nphk/parse.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace nphk {

namespace {

Json point_json(const Exponent& e) { return Json::array({e.i, e.j}); }

const char* face_kind_name(const Face& f) {
  switch (f.kind) {
    case FaceKind::Vertex: return "vertex";
    case FaceKind::Edge: return "compact-edge";
    case FaceKind::Ray: return f.direction == RayDirection::Up ? "vertical-ray" : "horizontal-ray";
  }
  return "?";
}

Json face_json(const Face& f) {
  Json j;
  j["kind"] = face_kind_name(f);
  j["start"] = point_json(f.start);
  if (f.kind == FaceKind::Edge) j["end"] = point_json(f.end);
  if (f.weight) j["weight"] = Json::array({to_json(f.weight->k1), to_json(f.weight->k2)});
  return j;
}

Json order_json(const std::optional<Order>& o) {
  if (!o) return nullptr;
  return o->to_string();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

AnalysisReport analyze(const std::string& text, const std::vector<Rational>& p_list) {
  AnalysisReport r;
  r.input_text = text;
  r.phase = parse_polynomial(text);
  if (r.phase.is_zero()) throw Error(ErrorKind::Unsupported, "phase is identically zero");
  r.taylor_support = taylor_support(r.phase);
  r.polygon = build_polygon(r.taylor_support);
  r.distance = newton_distance(r.polygon);
  r.classification = classify(r.phase);
  r.warnings = r.classification.warnings;
  for (const auto& p : p_list) inverse_p_offset(p);
  if (r.classification.kind.supported()) {
    r.heights = height_report(r.classification);
    r.profile = kp_profile(r.classification.kind);
    for (const auto& p : p_list) r.kp_table.emplace_back(p, kp_point(r.classification.kind, p));
  }
  return r;
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const NewtonPolygon& poly, const NewtonDistance& d) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : poly.vertices) j["vertices"].push_back(point_json(v));
  j["faces"] = Json::array();
  for (const auto& f : poly.faces) j["faces"].push_back(face_json(f));
  j["d"] = to_json(d.d);
  j["principal_face"] = face_json(d.principal);
  return j;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["input_text"] = r.input_text;
  j["phase"] = r.phase.to_string();
  j["taylor_support"] = Json::array();
  for (const auto& e : r.taylor_support) j["taylor_support"].push_back(point_json(e));
  j["polygon"] = to_json(r.polygon, r.distance);
  const Classification& c = r.classification;
  j["kind"] = c.kind.name();
  j["kind_tag"] = to_string(c.kind.tag);
  j["rank"] = c.kind.rank;
  j["m"] = order_json(c.kind.m);
  j["n"] = order_json(c.kind.n);
  if (c.kind.k0 || c.kind.k1) {
    j["k0"] = c.kind.k0 ? Json(*c.kind.k0) : Json(nullptr);
    j["k1"] = c.kind.k1 ? Json(*c.kind.k1) : Json(nullptr);
  }
  Json adapted;
  adapted["normalization"] = Json::array({Json::array({to_json(c.normalization.a), to_json(c.normalization.b)}),
                                          Json::array({to_json(c.normalization.c), to_json(c.normalization.d)})});
  adapted["shear"] = c.shear.to_string();
  adapted["phase"] = c.adapted.to_string();
  NewtonPolygon ap = build_polygon(taylor_support(c.adapted));
  adapted["polygon"] = to_json(ap, newton_distance(ap));
  j["adapted"] = adapted;
  if (r.heights) {
    j["h"] = to_json(r.heights->h);
    j["h_lin"] = to_json(r.heights->h_lin);
    j["linearly_adapted"] = r.heights->linearly_adapted;
    j["multiplicity"] = r.heights->multiplicity;
  }
  if (r.profile) {
    Json segs = Json::array();
    for (const auto& s : r.profile->segments)
      segs.push_back({{"slope", to_json(s.slope)}, {"intercept", to_json(s.intercept)},
                      {"u_from", to_json(s.u_from)}, {"u_to", to_json(s.u_to)}});
    j["profile"] = segs;
  }
  j["kp_table"] = Json::array();
  for (const auto& [p, k] : r.kp_table) j["kp_table"].push_back({{"p", to_json(p)}, {"k_p", to_json(k)}});
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const DecayFit& fit) {
  Json j;
  j["gamma_hat"] = fit.gamma_hat;
  j["log_correction"] = fit.log_correction;
  if (fit.log_correction) j["log_coefficient"] = fit.log_coefficient;
  j["residual"] = fit.residual;
  j["points"] = Json::array();
  for (std::size_t k = 0; k < fit.lambdas.size(); ++k)
    j["points"].push_back({{"lambda", fit.lambdas[k]},
                           {"re_I", fit.values[k].real()},
                           {"im_I", fit.values[k].imag()},
                           {"abs_I", fit.magnitudes[k]},
                           {"quad_err", fit.quadrature_error[k]}});
  j["failures"] = Json::array();
  for (const auto& [l, why] : fit.failures) j["failures"].push_back({{"lambda", l}, {"reason", why}});
  return j;
}

Json to_json(const RandolScan& scan) {
  Json j;
  j["m"] = scan.m;
  j["levels"] = Json::array();
  for (const auto& L : scan.levels) {
    double mmax = *std::max_element(L.M.begin(), L.M.end());
    j["levels"].push_back({{"points", L.points},
                           {"spacing", L.spacing},
                           {"lambda_min", L.lambdas.front()},
                           {"lambda_max", L.lambdas.back()},
                           {"lambda_count", L.lambdas.size()},
                           {"M_max", mmax},
                           {"max_quadrature_error", L.max_quadrature_error}});
  }
  j["q_report"] = Json::array();
  for (const auto& q : scan.q_report) j["q_report"].push_back({{"q", q.q}, {"sums", q.sums}, {"ratio", q.ratio}});
  return j;
}

Json error_json(const std::exception& e) {
  Json j;
  j["error"]["message"] = e.what();
  if (auto* err = dynamic_cast<const Error*>(&e)) {
    j["error"]["kind"] = to_string(err->kind());
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) j["error"]["position"] = pe->position();
  } else {
    j["error"]["kind"] = "Internal";
  }
  return j;
}

std::string decay_csv(const DecayFit& fit) {
  std::ostringstream out;
  out << "lambda,re_I,im_I,abs_I,quad_err\n";
  for (std::size_t k = 0; k < fit.lambdas.size(); ++k)
    out << fmt(fit.lambdas[k]) << "," << fmt(fit.values[k].real()) << "," << fmt(fit.values[k].imag()) << ","
        << fmt(fit.magnitudes[k]) << "," << fmt(fit.quadrature_error[k]) << "\n";
  return out.str();
}

std::string scan_csv(const RandolScan& scan) {
  std::ostringstream out;
  out << "s1,s2,M_value\n";
  if (scan.levels.empty()) return out.str();
  const RandolLevel& L = scan.levels.back();
  for (int a = 0; a < L.points; ++a)
    for (int b = 0; b < L.points; ++b)
      out << fmt(L.s_axis[a]) << "," << fmt(L.s_axis[b]) << "," << fmt(L.M[static_cast<std::size_t>(a) * L.points + b]) << "\n";
  return out.str();
}

std::string polygon_svg(const AnalysisReport& r) {
  const double size = 400, pad = 40;
  int extent = 2;
  for (const auto& e : r.taylor_support) extent = std::max({extent, e.i + 1, e.j + 1});
  double d = to_double(r.distance.d);
  extent = std::max(extent, static_cast<int>(d) + 2);
  const double scale = (size - 2 * pad) / extent;
  auto X = [&](double t) { return pad + t * scale; };
  auto Y = [&](double t) { return size - pad - t * scale; };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(extent) << "\" y2=\"" << Y(0)
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(extent)
      << "\" stroke=\"black\"/>\n";
  // Boundary: up the vertical ray, along the compact edges, out the horizontal ray.
  const auto& v = r.polygon.vertices;
  svg << "<polyline fill=\"#dde8f5\" stroke=\"#1f4e8c\" stroke-width=\"2\" points=\"";
  svg << X(v.front().i) << "," << Y(extent) << " ";
  for (const auto& p : v) svg << X(p.i) << "," << Y(p.j) << " ";
  svg << X(extent) << "," << Y(v.back().j) << " " << X(extent) << "," << Y(extent) << "\"/>\n";
  svg << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(extent) << "\" y2=\"" << Y(extent)
      << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  for (const auto& e : r.taylor_support)
    svg << "<circle cx=\"" << X(e.i) << "\" cy=\"" << Y(e.j) << "\" r=\"3\" fill=\"black\"/>\n";
  svg << "<circle cx=\"" << X(d) << "\" cy=\"" << Y(d) << "\" r=\"5\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n";
  svg << "<text x=\"" << pad << "\" y=\"" << pad / 2 << "\" font-family=\"sans-serif\" font-size=\"13\">"
      << r.classification.kind.name() << ", d = " << to_string(r.distance.d) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string human_summary(const AnalysisReport& r) {
  std::ostringstream out;
  const auto& k = r.classification.kind;
  out << "phase      " << r.phase.to_string() << "\n";
  out << "kind       " << k.name();
  if (k.m && k.n)
    out << " (m=" << k.m->to_string() << ", n=" << k.n->to_string() << ")";
  else if (k.n)
    out << " (n=" << k.n->to_string() << ")";
  out << "\n";
  out << "d          " << to_string(r.distance.d) << " (input coordinates)\n";
  if (r.heights) {
    out << "h          " << to_string(r.heights->h) << "\n";
    out << "h_lin      " << to_string(r.heights->h_lin) << (r.heights->linearly_adapted ? " (LA)" : " (NLA)") << "\n";
    out << "mult       " << r.heights->multiplicity << "\n";
  }
  for (const auto& [p, kp] : r.kp_table) out << "k_p(" << to_string(p) << ") = " << to_string(kp) << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

}  // namespace nphk
