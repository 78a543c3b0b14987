#include "report_json.hpp"

namespace diffu::cli {

using nlohmann::ordered_json;

ordered_json field_json(const Field& field) {
  return {{"m", field.degree()}, {"modulus", field.modulus_hex()}};
}

ordered_json ddt_json(const DdtReport& r, const Field& field) {
  ordered_json spectrum = ordered_json::array();
  for (const auto& [count, cells] : r.spectrum) spectrum.push_back({{"count", count}, {"cells", cells}});
  return {
      {"delta", r.delta},
      {"exact", r.is_exact()},
      {"witness", {{"alpha", to_hex(r.witness_alpha)}, {"beta", to_hex(r.witness_beta)}}},
      {"spectrum", spectrum},
      {"mode", mode_name(r.mode)},
      {"rows_examined", r.rows_examined},
      {"field", field_json(field)},
  };
}

ordered_json geometry_json(const GeometryReport& r, const Field& field) {
  ordered_json violation = nullptr;
  if (r.violation) {
    const auto [x, y, z, t] = *r.violation;
    violation = ordered_json::array({to_hex(x), to_hex(y), to_hex(z), to_hex(t)});
  }
  ordered_json out = {
      {"contained", r.contained},
      {"violation", violation},
      {"points_scanned", r.points_scanned},
      {"field", field_json(field)},
  };
  if (r.x_point_count) out["x_point_count"] = *r.x_point_count;
  return out;
}

ordered_json structural_json(const StructuralChecks& s) {
  return {
      {"vertex", s.vertex},
      {"intercurve", s.intercurve},
      {"projection", s.projection},
      {"component_plane", s.component_plane},
      {"c7_points", s.c7_points},
  };
}

namespace {

template <class T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

ordered_json bound_json(const BoundReport& r) {
  ordered_json weil = nullptr;
  if (r.weil) weil = ordered_json::array({r.weil->first, r.weil->second});
  return {
      {"d", r.d},
      {"m", r.m},
      {"q", r.q},
      {"hypotheses_met", r.hypotheses_met},
      {"hypotheses", r.hypotheses_met ? "d = 2^r - 1 with r >= 3" : "theorem hypotheses unmet: d is not 2^r - 1 with r >= 3"},
      {"genus", opt(r.genus)},
      {"weil_interval", weil},
      {"hyperplane_cap", opt(r.hyperplane_cap)},
      {"surface_degree", opt(r.surface_degree)},
      {"serre_cap", opt(r.serre_cap)},
      {"monomial",
       {{"inequality_holds", r.monomial.inequality_holds},
        {"quartic_condition", r.monomial.quartic_condition},
        {"root_condition", r.monomial.root_condition},
        {"applies", r.monomial.applies}}},
      {"polynomial",
       {{"inequality_holds", r.polynomial.inequality_holds},
        {"basis", "proof-inequality, not statement"},
        {"sqrt_condition", r.polynomial.sqrt_condition},
        {"root_condition", r.polynomial.root_condition},
        {"statement_claims", r.polynomial.statement_claims},
        {"applies", r.polynomial.applies}}},
      {"monomial_inequality_holds", r.monomial.inequality_holds},
      {"polynomial_inequality_holds", r.polynomial.inequality_holds},
      {"predicted_delta_gt_4_monomial", r.predicted_delta_gt_4_monomial},
      {"predicted_delta_gt_4_polynomial", r.predicted_delta_gt_4_polynomial},
  };
}

ordered_json suite_json(const SuiteResult& r) {
  ordered_json cases = ordered_json::array();
  for (const auto& c : r.cases) cases.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  return {
      {"suite", r.suite},
      {"description", r.description},
      {"passed", r.passed()},
      {"cases", cases},
  };
}

}  // namespace diffu::cli
