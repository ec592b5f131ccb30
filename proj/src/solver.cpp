#include "brouwer1d/solver.hpp"

namespace brouwer1d {

const char* to_string(SolverMode mode) {
  return mode == SolverMode::refine ? "refine" : "single_grid";
}

void SolverConfig::validate() const {
  if (epsilon.sign() <= 0) throw InvalidInput("epsilon must be positive");
  if (branching < 2) throw InvalidInput("branching must be at least 2");
  if (max_rounds < 1) throw InvalidInput("max_rounds must be at least 1");
  if (lipschitz && lipschitz->sign() <= 0) throw InvalidInput("lipschitz constant must be positive");
  if (mode == SolverMode::single_grid && !lipschitz) {
    throw InvalidInput("single_grid mode needs a lipschitz constant");
  }
}

std::size_t FixPointResult::rounds_used() const {
  return is_exact() ? exact().rounds_used : bracket().rounds_used;
}

Rational residual(const ScalarMap& f, const Rational& x) { return f(x) - x; }
Rational residual(const Expr& f, const Rational& x) { return eval(f, x) - x; }

BigInt archimedean_n(const Rational& delta, const Rational& a, const Rational& b) {
  if (delta.sign() <= 0) throw InvalidInput("delta must be positive");
  if (!(a < b)) throw InvalidInput("archimedean_n requires a < b");
  // (b - a) < n delta  <=>  n > (b - a) / delta; the least such n is floor + 1.
  return ((b - a) / delta).floor() + 1;
}

Rational residual_bound(const CertifiedBracket& bracket, const Rational& lipschitz) {
  if (lipschitz.sign() <= 0) throw InvalidInput("lipschitz constant must be positive");
  return (lipschitz + 1) * bracket.width() / Rational(2);
}

Rational single_grid_delta(const SolverConfig& config) {
  const Rational by_modulus = config.epsilon / *config.lipschitz;
  const Rational branching(static_cast<long>(config.branching));
  const Rational below_eps = config.epsilon * (Rational(1) - Rational(1) / branching);
  return min(by_modulus, below_eps);
}

namespace {

bool width_criterion(const CertifiedBracket& br, const SolverConfig& config) {
  if (config.lipschitz) return residual_bound(br, *config.lipschitz) <= config.epsilon;
  return br.width() <= config.epsilon;
}

CertifiedBracket make_bracket(const ScalarMap& f, const Rational& lo, const Rational& hi,
                              std::size_t rounds) {
  return CertifiedBracket{lo, hi, residual(f, lo), residual(f, hi), rounds};
}

FixPointResult solve_single_grid(const ScalarMap& f, const Rational& a, const Rational& b,
                                 const SolverConfig& config, const RoundObserver& observer) {
  const Rational delta = single_grid_delta(config);
  const BigInt n = archimedean_n(delta, a, b);
  if (n > config.max_grid_edges) {
    throw InvalidInput("single grid would need " + n.get_str() + " edges (limit " +
                       std::to_string(config.max_grid_edges) + ")");
  }
  const Grid grid = make_uniform_grid(a, b, n.get_ui());
  LabelOutcome outcome = label_by_sign(grid, f);
  if (auto* hit = std::get_if<ExactFixedPoint>(&outcome)) {
    return {ExactVertex{hit->vertex, 1}, SolverMode::single_grid, true};
  }
  const std::size_t i = find_transition_scan(std::get<Labeling>(outcome));
  CertifiedBracket br = make_bracket(f, grid[i - 1], grid[i], 1);
  if (observer) observer(br);
  const bool converged = width_criterion(br, config);
  return {std::move(br), SolverMode::single_grid, converged};
}

}  // namespace

FixPointResult solve(const ScalarMap& f, const Rational& a, const Rational& b,
                     const SolverConfig& config, const RoundObserver& observer) {
  config.validate();
  if (!(a < b)) throw InvalidInput("solve requires a < b");

  const Rational ga = residual(f, a);
  const Rational gb = residual(f, b);
  if (ga.sign() < 0 || gb.sign() > 0) {
    throw SelfMapError("map does not self-map the interval [" + a.to_string() + ", " +
                       b.to_string() + "]");
  }
  if (ga.is_zero()) return {ExactVertex{a, 0}, config.mode, true};
  if (gb.is_zero()) return {ExactVertex{b, 0}, config.mode, true};

  if (config.mode == SolverMode::single_grid) return solve_single_grid(f, a, b, config, observer);

  CertifiedBracket br{a, b, ga, gb, 0};
  if (width_criterion(br, config)) return {std::move(br), SolverMode::refine, true};

  for (std::size_t round = 1; round <= config.max_rounds; ++round) {
    const Grid grid = make_uniform_grid(br.lo, br.hi, config.branching);
    LabelOutcome outcome = label_by_sign(grid, f);
    if (auto* hit = std::get_if<ExactFixedPoint>(&outcome)) {
      return {ExactVertex{hit->vertex, round}, SolverMode::refine, true};
    }
    const std::size_t i = find_transition_bisect(std::get<Labeling>(outcome)).edge;
    br = make_bracket(f, grid[i - 1], grid[i], round);
    if (observer) observer(br);
    if (width_criterion(br, config)) return {std::move(br), SolverMode::refine, true};
  }
  return {std::move(br), SolverMode::refine, false};
}

FixPointResult solve(const Expr& f, const Rational& a, const Rational& b,
                     const SolverConfig& config, const RoundObserver& observer) {
  return solve(as_map(f), a, b, config, observer);
}

}  // namespace brouwer1d
