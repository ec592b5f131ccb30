#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>

#include "brouwer1d/expr.hpp"
#include "brouwer1d/rational.hpp"
#include "brouwer1d/sperner.hpp"

namespace brouwer1d {

enum class SolverMode { refine, single_grid };

const char* to_string(SolverMode mode);

struct SolverConfig {
  Rational epsilon{Rational(1, 1000000)};
  /// Declared bound L with |f(x) - f(x')| <= L |x - x'|.
  std::optional<Rational> lipschitz;
  std::size_t branching = 2;
  std::size_t max_rounds = 64;
  SolverMode mode = SolverMode::refine;
  /// single_grid refuses grids with more edges than this.
  std::size_t max_grid_edges = 10'000'000;

  /// Throws InvalidInput unless epsilon > 0, branching >= 2, max_rounds >= 1
  /// and lipschitz (if set) > 0.
  void validate() const;
};

/// Sign-change witness: g(lo) > 0 > g(hi), g(x) = f(x) - x, both exact.
struct CertifiedBracket {
  Rational lo;
  Rational hi;
  Rational g_lo;
  Rational g_hi;
  std::size_t rounds_used = 0;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
};

struct ExactVertex {
  Rational x;
  std::size_t rounds_used = 0;
};

struct FixPointResult {
  std::variant<ExactVertex, CertifiedBracket> value;
  SolverMode mode = SolverMode::refine;
  /// False only when max_rounds ran out before the width criterion was met.
  bool converged = true;

  bool is_exact() const { return std::holds_alternative<ExactVertex>(value); }
  const ExactVertex& exact() const { return std::get<ExactVertex>(value); }
  const CertifiedBracket& bracket() const { return std::get<CertifiedBracket>(value); }
  std::size_t rounds_used() const;
};

/// g(x) = f(x) - x.
Rational residual(const ScalarMap& f, const Rational& x);
Rational residual(const Expr& f, const Rational& x);

/// Smallest positive integer n with (b - a) < n * delta.
BigInt archimedean_n(const Rational& delta, const Rational& a, const Rational& b);

/// (L + 1) (hi - lo) / 2: bound on |g(midpoint)| valid whenever f really is
/// L-Lipschitz on the real interval.
Rational residual_bound(const CertifiedBracket& bracket, const Rational& lipschitz);

/// Grid spacing used by single_grid mode: min(eps / L, eps (1 - 1/branching)).
Rational single_grid_delta(const SolverConfig& config);

/// Called after every refinement round with the bracket it produced.
using RoundObserver = std::function<void(const CertifiedBracket&)>;

/// Brackets a fixed point of f on [a, b]. Throws SelfMapError if g(a) < 0 or
/// g(b) > 0, InvalidInput on a bad config or a >= b.
FixPointResult solve(const ScalarMap& f, const Rational& a, const Rational& b,
                     const SolverConfig& config, const RoundObserver& observer = {});
FixPointResult solve(const Expr& f, const Rational& a, const Rational& b,
                     const SolverConfig& config, const RoundObserver& observer = {});

}  // namespace brouwer1d
