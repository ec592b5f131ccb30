#pragma once

#include <cstddef>
#include <vector>

#include "brouwer1d/expr.hpp"
#include "brouwer1d/rational.hpp"
#include "brouwer1d/solver.hpp"

namespace brouwer1d {

// f(x) = 2 for 1 <= x < sqrt(2), f(x) = 1 for sqrt(2) < x <= 2, taken over
// the rationals in [1, 2]. It maps the interval into itself, is continuous at
// every rational point, and has no fixed point.

/// ifneg(x*x - 2, 2, 1).
Expr counterexample_expr();

/// 2/5, a rational lower bound for sqrt(2) - 1 (since (7/5)^2 < 2).
Rational residual_floor();

struct NoFixedPointVerdict {
  Rational x;
  Rational fx;
  bool fixed = false;
};

/// Evaluates f at x in [1, 2] and checks f(x) != x exactly. Throws
/// InvalidInput outside [1, 2].
NoFixedPointVerdict assert_no_fixed_point(const Rational& x);

struct CounterexampleReport {
  std::size_t depth = 0;
  CertifiedBracket bracket;
  Rational midpoint;
  Rational midpoint_residual;
  bool residual_floor_check = false;  // |g(midpoint)| >= 2/5
  bool contains_sqrt2 = false;        // lo^2 < 2 < hi^2
  bool all_labelings_sperner = false;  // this round's grid had a transition edge
};

/// Bisection of the counterexample on [1, 2] for `depth` rounds, one report
/// per round. Throws std::logic_error if a grid vertex is ever exactly fixed,
/// InvalidInput if depth == 0.
std::vector<CounterexampleReport> run_demo(std::size_t depth);

/// True iff every per-round check in `reports` holds.
bool demo_passed(const std::vector<CounterexampleReport>& reports);

}  // namespace brouwer1d
