#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "brouwer1d/counterexample.hpp"
#include "brouwer1d/solver.hpp"

namespace brouwer1d {

using Json = nlohmann::ordered_json;

// Rationals are always written as literal strings ("-3/7"), never as JSON
// numbers. Decimal companions carry 12 truncated digits.
inline constexpr int kDecimalDigits = 12;

/// Literal string for a rational; rational_from_json is its inverse.
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

/// Report record: mode, result kind, converged, rounds_used, then either x or
/// lo/hi/g_lo/g_hi/width, then decimals. `lipschitz` adds residual_bound.
Json to_json(const FixPointResult& result, const std::optional<Rational>& lipschitz = std::nullopt);

Json to_json(const CounterexampleReport& report);

/// Header `depth,width,abs_residual,width_decimal,abs_residual_decimal`.
std::string counterexample_csv(const std::vector<CounterexampleReport>& reports);

}  // namespace brouwer1d
