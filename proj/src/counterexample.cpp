#include "brouwer1d/counterexample.hpp"

#include "brouwer1d/sperner.hpp"

namespace brouwer1d {

Expr counterexample_expr() {
  const Expr x = Expr::var();
  return Expr::ifneg(x * x - Expr::constant(2), Expr::constant(2), Expr::constant(1));
}

Rational residual_floor() { return Rational(2, 5); }

NoFixedPointVerdict assert_no_fixed_point(const Rational& x) {
  if (x < Rational(1) || Rational(2) < x) {
    throw InvalidInput("counterexample domain is [1, 2], got " + x.to_string());
  }
  Rational fx = eval(counterexample_expr(), x);
  if (fx != Rational(1) && fx != Rational(2)) {
    throw std::logic_error("counterexample left its value set {1, 2}");
  }
  const bool fixed = fx == x;
  return {x, std::move(fx), fixed};
}

namespace {

bool straddles_sqrt2(const CertifiedBracket& br) {
  return cmp_sqrt2(br.lo) == Sqrt2Side::below && cmp_sqrt2(br.hi) == Sqrt2Side::above;
}

}  // namespace

std::vector<CounterexampleReport> run_demo(std::size_t depth) {
  if (depth == 0) throw InvalidInput("demo depth must be at least 1");

  const Expr f = counterexample_expr();
  const ScalarMap map = as_map(f);
  SolverConfig config;
  config.branching = 2;
  config.max_rounds = depth;
  // Never reached before max_rounds: the width after `depth` halvings is 2^-depth.
  config.epsilon = Rational(BigInt(1), BigInt(1) << static_cast<mp_bitcnt_t>(depth + 1));

  std::vector<CounterexampleReport> reports;
  reports.reserve(depth);
  Rational prev_lo(1);
  Rational prev_hi(2);
  auto observe = [&](const CertifiedBracket& br) {
    CounterexampleReport r;
    r.depth = br.rounds_used;
    r.bracket = br;
    r.midpoint = br.midpoint();
    r.midpoint_residual = residual(map, r.midpoint);
    r.residual_floor_check = residual_floor() <= abs(r.midpoint_residual);
    r.contains_sqrt2 = straddles_sqrt2(br);

    // Relabel the grid this round searched and re-check it over the rationals.
    const LabelOutcome labeled = label_by_sign(make_uniform_grid(prev_lo, prev_hi, 2), map);
    const auto* labeling = std::get_if<Labeling>(&labeled);
    r.all_labelings_sperner =
        labeling != nullptr && verify_sperner(labeling->labels()) == SpernerVerdict::holds;

    prev_lo = br.lo;
    prev_hi = br.hi;
    reports.push_back(std::move(r));
  };

  const FixPointResult result = solve(map, Rational(1), Rational(2), config, observe);
  if (result.is_exact()) {
    throw std::logic_error("counterexample reported an exact fixed point at " +
                           result.exact().x.to_string());
  }
  return reports;
}

bool demo_passed(const std::vector<CounterexampleReport>& reports) {
  if (reports.empty()) return false;
  for (const auto& r : reports) {
    if (!r.residual_floor_check || !r.contains_sqrt2 || !r.all_labelings_sperner) return false;
  }
  return true;
}

}  // namespace brouwer1d
