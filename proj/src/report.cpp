#include "brouwer1d/report.hpp"

namespace brouwer1d {

Json to_json(const Rational& x) { return x.to_string(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidInput("rational must be a JSON string literal");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const FixPointResult& result, const std::optional<Rational>& lipschitz) {
  Json j;
  j["mode"] = to_string(result.mode);
  if (result.is_exact()) {
    const auto& hit = result.exact();
    j["result"] = "exact_vertex";
    j["converged"] = result.converged;
    j["rounds_used"] = hit.rounds_used;
    j["x"] = to_json(hit.x);
    j["x_decimal"] = hit.x.to_decimal(kDecimalDigits);
    return j;
  }
  const auto& br = result.bracket();
  j["result"] = "bracket";
  j["converged"] = result.converged;
  j["rounds_used"] = br.rounds_used;
  j["lo"] = to_json(br.lo);
  j["hi"] = to_json(br.hi);
  j["g_lo"] = to_json(br.g_lo);
  j["g_hi"] = to_json(br.g_hi);
  j["width"] = to_json(br.width());
  if (lipschitz) j["residual_bound"] = to_json(residual_bound(br, *lipschitz));
  j["lo_decimal"] = br.lo.to_decimal(kDecimalDigits);
  j["hi_decimal"] = br.hi.to_decimal(kDecimalDigits);
  return j;
}

Json to_json(const CounterexampleReport& r) {
  Json j;
  j["depth"] = r.depth;
  j["lo"] = to_json(r.bracket.lo);
  j["hi"] = to_json(r.bracket.hi);
  j["g_lo"] = to_json(r.bracket.g_lo);
  j["g_hi"] = to_json(r.bracket.g_hi);
  j["width"] = to_json(r.bracket.width());
  j["midpoint"] = to_json(r.midpoint);
  j["midpoint_residual"] = to_json(r.midpoint_residual);
  j["residual_floor_check"] = r.residual_floor_check;
  j["contains_sqrt2"] = r.contains_sqrt2;
  j["sperner_transition"] = r.all_labelings_sperner;
  j["lo_decimal"] = r.bracket.lo.to_decimal(kDecimalDigits);
  j["hi_decimal"] = r.bracket.hi.to_decimal(kDecimalDigits);
  j["midpoint_residual_decimal"] = r.midpoint_residual.to_decimal(kDecimalDigits);
  return j;
}

std::string counterexample_csv(const std::vector<CounterexampleReport>& reports) {
  std::string out = "depth,width,abs_residual,width_decimal,abs_residual_decimal\n";
  for (const auto& r : reports) {
    const Rational width = r.bracket.width();
    const Rational res = abs(r.midpoint_residual);
    out += std::to_string(r.depth) + ',' + width.to_string() + ',' + res.to_string() + ',' +
           width.to_decimal(kDecimalDigits) + ',' + res.to_decimal(kDecimalDigits) + '\n';
  }
  return out;
}

}  // namespace brouwer1d
