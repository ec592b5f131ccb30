#include <doctest.h>

#include "brouwer1d/solver.hpp"
#include "test_support.hpp"

using namespace brouwer1d;
using brouwer1d::testing::Rng;

namespace {

SolverConfig config_with(Rational eps, std::optional<Rational> lipschitz, SolverMode mode = SolverMode::refine) {
  SolverConfig c;
  c.epsilon = std::move(eps);
  c.lipschitz = std::move(lipschitz);
  c.mode = mode;
  return c;
}

// Brute-force oracle: count up from 1.
long smallest_n(const Rational& delta, const Rational& a, const Rational& b) {
  long n = 1;
  while (!(b - a < Rational(n) * delta)) ++n;
  return n;
}

void check_sound(const Expr& f, const CertifiedBracket& br) {
  CHECK(br.lo < br.hi);
  CHECK(br.g_lo == eval(f, br.lo) - br.lo);
  CHECK(br.g_hi == eval(f, br.hi) - br.hi);
  CHECK(br.g_lo.sign() > 0);
  CHECK(br.g_hi.sign() < 0);
}

struct Case {
  const char* f;
  Rational a, b, lipschitz;
};

// Self-maps with a unique fixed point and a hand-derived Lipschitz bound.
std::vector<Case> lipschitz_corpus() {
  return {
      {"1 - x", 0, 1, 1},
      {"(x + 1)/2", 0, 2, Rational(1, 2)},
      {"(x*x + 2)/4", 0, 1, Rational(1, 2)},
      {"1 - x*x/2", 0, 1, 1},
      {"3/7 - 2/9*x", -1, 1, Rational(2, 9)},
      {"(x*x*x + 1)/3", 0, 1, 1},
      {"1/3 + x/5", 0, 1, Rational(1, 5)},
      {"2 - x", Rational(1, 3), Rational(5, 3), 1},
  };
}

}  // namespace

TEST_CASE("residual") {
  CHECK(residual(parse("1 - x"), 0) == Rational(1));
  CHECK(residual(parse("1 - x"), Rational(1, 2)) == Rational(0));
  CHECK(residual(parse("ifneg(x*x - 2, 2, 1)"), Rational(3, 2)) == Rational(-1, 2));
}

TEST_CASE("archimedean_n") {
  CHECK(archimedean_n(Rational(1, 3), 0, 1) == 4);
  CHECK(archimedean_n(2, 0, 1) == 1);
  CHECK(archimedean_n(Rational(1, 10), 1, 2) == 11);
  CHECK(archimedean_n(Rational(1, 2), 0, 1) == 3);  // 1 < 2 * 1/2 fails, strict
  CHECK_THROWS_AS(archimedean_n(0, 0, 1), InvalidInput);
  CHECK_THROWS_AS(archimedean_n(1, 1, 1), InvalidInput);

  Rng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational delta = brouwer1d::testing::random_positive(rng, 50, 60);
    const Rational a = brouwer1d::testing::random_rational(rng, 100, 30);
    const Rational b = a + brouwer1d::testing::random_positive(rng, 100, 30);
    const BigInt n = archimedean_n(delta, a, b);
    CHECK(n == smallest_n(delta, a, b));
    CHECK(b - a < Rational(n) * delta);
    CHECK(b - a >= Rational(BigInt(n - 1)) * delta);
  }
}

TEST_CASE("residual_bound") {
  CertifiedBracket br{0, Rational(1, 100), 1, -1, 0};
  CHECK(residual_bound(br, 1) == Rational(1, 100));
  br.hi = Rational(1, 8);
  CHECK(residual_bound(br, 3) == Rational(1, 4));
  CHECK_THROWS_AS(residual_bound(br, 0), InvalidInput);
}

TEST_CASE("solve: exact hit on the first midpoint") {
  const auto r = solve(parse("1 - x"), 0, 1, config_with(Rational(1, 1000), std::nullopt));
  REQUIRE(r.is_exact());
  CHECK(r.exact().x == Rational(1, 2));
  CHECK(r.exact().rounds_used == 1);
  CHECK(r.converged);
}

TEST_CASE("solve: affine contraction") {
  const Expr f = parse("(x + 1)/2");
  const Rational L(1, 2);
  const auto r = solve(f, 0, 2, config_with(Rational(1, 1000), L));
  if (r.is_exact()) {
    CHECK(r.exact().x == Rational(1));
  } else {
    check_sound(f, r.bracket());
    CHECK(r.bracket().lo < Rational(1));
    CHECK(Rational(1) < r.bracket().hi);
    CHECK(residual_bound(r.bracket(), L) <= Rational(1, 1000));
  }
}

TEST_CASE("solve: quadratic with an irrational fixed point") {
  const Expr f = parse("(x*x + 2)/4");
  const Rational L(1, 2);
  const Rational eps(1, 1000000);
  const auto r = solve(f, 0, 1, config_with(eps, L));
  REQUIRE_FALSE(r.is_exact());
  const auto& br = r.bracket();
  check_sound(f, br);
  CHECK(r.converged);
  // lo < 2 - sqrt(2) < hi, checked by squaring 2 - lo and 2 - hi.
  CHECK((2 - br.lo) * (2 - br.lo) > Rational(2));
  CHECK((2 - br.hi) * (2 - br.hi) < Rational(2));
  CHECK(residual_bound(br, L) <= eps);
  CHECK(abs(residual(f, br.midpoint())) <= residual_bound(br, L));
  CHECK(br.rounds_used == 20);  // 3/4 * 2^-r <= 10^-6 first at r = 20
}

TEST_CASE("solve: width-only criterion without a Lipschitz constant") {
  const Expr f = parse("(x*x + 2)/4");
  const auto r = solve(f, 0, 1, config_with(Rational(1, 1024), std::nullopt));
  REQUIRE_FALSE(r.is_exact());
  CHECK(r.bracket().width() == Rational(1, 1024));
  CHECK(r.bracket().rounds_used == 10);
}

TEST_CASE("solve: refinement widths shrink geometrically") {
  const Expr f = parse("1 - x*x/2");
  for (std::size_t branching : {2u, 3u, 5u, 10u}) {
    CAPTURE(branching);
    SolverConfig c = config_with(Rational(1, 1000000000), std::nullopt);
    c.branching = branching;
    std::vector<CertifiedBracket> rounds;
    const auto r = solve(f, 0, 1, c, [&](const CertifiedBracket& br) { rounds.push_back(br); });
    REQUIRE_FALSE(r.is_exact());
    Rational expected(1);
    for (std::size_t i = 0; i < rounds.size(); ++i) {
      expected /= Rational(static_cast<long>(branching));
      CHECK(rounds[i].rounds_used == i + 1);
      CHECK(rounds[i].width() == expected);
      check_sound(f, rounds[i]);
      if (i > 0) {
        CHECK(rounds[i - 1].lo <= rounds[i].lo);
        CHECK(rounds[i].hi <= rounds[i - 1].hi);
      }
    }
  }
}

TEST_CASE("solve: conditional residual claim and mode agreement on the Lipschitz corpus") {
  for (const auto& c : lipschitz_corpus()) {
    CAPTURE(c.f);
    const Expr f = parse(c.f);
    const Rational eps(1, 10000);
    const auto refined = solve(f, c.a, c.b, config_with(eps, c.lipschitz));
    const auto single = solve(f, c.a, c.b, config_with(eps, c.lipschitz, SolverMode::single_grid));
    CHECK(refined.converged);
    CHECK(single.converged);
    CHECK(single.mode == SolverMode::single_grid);

    auto interval = [](const FixPointResult& r) {
      return r.is_exact() ? std::pair{r.exact().x, r.exact().x} : std::pair{r.bracket().lo, r.bracket().hi};
    };
    for (const auto* r : {&refined, &single}) {
      if (r->is_exact()) {
        CHECK(eval(f, r->exact().x) == r->exact().x);
      } else {
        check_sound(f, r->bracket());
        CHECK(abs(residual(f, r->bracket().midpoint())) <= residual_bound(r->bracket(), c.lipschitz));
        CHECK(residual_bound(r->bracket(), c.lipschitz) <= eps);
      }
    }
    const auto [lo1, hi1] = interval(refined);
    const auto [lo2, hi2] = interval(single);
    if (refined.is_exact() || single.is_exact()) {
      CHECK(max(lo1, lo2) <= min(hi1, hi2));
    } else {
      CHECK(max(lo1, lo2) < min(hi1, hi2));
    }
  }
}

TEST_CASE("single_grid follows the literal construction") {
  SolverConfig c = config_with(Rational(1, 100), Rational(1, 2), SolverMode::single_grid);
  // delta = min(eps / L, eps / 2) = 1/200, so n = 201 edges on [0, 1].
  CHECK(single_grid_delta(c) == Rational(1, 200));
  const auto r = solve(parse("(x*x + 2)/4"), 0, 1, c);
  REQUIRE_FALSE(r.is_exact());
  CHECK(r.bracket().width() == Rational(1, 201));
  CHECK(r.bracket().rounds_used == 1);

  c.lipschitz = Rational(4);
  CHECK(single_grid_delta(c) == Rational(1, 400));
  c.branching = 5;
  c.lipschitz = Rational(1, 10);
  CHECK(single_grid_delta(c) == Rational(4, 500));

  c.max_grid_edges = 100;
  CHECK_THROWS_AS(solve(parse("(x*x + 2)/4"), 0, 1, c), InvalidInput);
}

TEST_CASE("solve: endpoint fixed points") {
  const auto r = solve(parse("x*x"), 0, Rational(1, 2), config_with(Rational(1, 100), std::nullopt));
  REQUIRE(r.is_exact());
  CHECK(r.exact().x == Rational(0));
  CHECK(r.exact().rounds_used == 0);
}

TEST_CASE("solve: unconverged results stay sound") {
  const Expr f = parse("(x*x + 2)/4");
  SolverConfig c = config_with(Rational(1, 1000000), Rational(1, 2));
  c.max_rounds = 3;
  const auto r = solve(f, 0, 1, c);
  CHECK_FALSE(r.converged);
  REQUIRE_FALSE(r.is_exact());
  check_sound(f, r.bracket());
  CHECK(r.bracket().rounds_used == 3);
  CHECK(r.bracket().width() == Rational(1, 8));
}

TEST_CASE("solve: errors") {
  const SolverConfig ok = config_with(Rational(1, 100), std::nullopt);
  CHECK_THROWS_AS(solve(parse("x + 1"), 0, 1, ok), SelfMapError);
  CHECK_THROWS_AS(solve(parse("x - 1"), 0, 1, ok), SelfMapError);
  CHECK_THROWS_AS(solve(parse("1 - x"), 1, 0, ok), InvalidInput);
  CHECK_THROWS_AS(solve(parse("1 - x"), 0, 1, config_with(0, std::nullopt)), InvalidInput);
  CHECK_THROWS_AS(solve(parse("1 - x"), 0, 1, config_with(1, Rational(-1))), InvalidInput);
  CHECK_THROWS_AS(solve(parse("1 - x"), 0, 1, config_with(1, std::nullopt, SolverMode::single_grid)),
                  InvalidInput);
  SolverConfig bad_branching = ok;
  bad_branching.branching = 1;
  CHECK_THROWS_AS(solve(parse("1 - x"), 0, 1, bad_branching), InvalidInput);
  CHECK_THROWS_AS(solve(parse("ifneg(x - 1/2, 1, 0) + 0 * (1 / (x - 1/2))"), 0, 1, ok), ArithmeticError);
}
