#include "brouwer1d/pl_map.hpp"

#include <algorithm>
#include <map>

namespace brouwer1d {

PLMap::PLMap(Grid g, std::vector<Rational> values)
    : grid(std::move(g)), value_at_vertex(std::move(values)) {
  if (value_at_vertex.size() != grid.size()) {
    throw InvalidInput("PL map needs one value per grid vertex");
  }
  const auto vs = grid.vertices();
  for (const auto& value : value_at_vertex) {
    if (!std::binary_search(vs.begin(), vs.end(), value)) {
      throw InvalidInput("PL map value " + value.to_string() + " is not a grid vertex");
    }
  }
}

PLMap::PLMap(const DiscreteMap& map) : grid(map.grid) {
  value_at_vertex.reserve(map.target_index.size());
  for (std::size_t t : map.target_index) value_at_vertex.push_back(grid[t]);
}

DiscreteMap discrete_from_labeling(const Grid& grid, const Labeling& labeling) {
  if (grid.size() != labeling.size()) {
    throw InvalidInput("labeling has " + std::to_string(labeling.size()) + " labels for " +
                       std::to_string(grid.size()) + " vertices");
  }
  std::vector<std::size_t> targets(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) targets[j] = labeling[j] == 0 ? j + 1 : j - 1;
  return DiscreteMap{grid, std::move(targets)};
}

std::size_t locate_edge(const Grid& grid, const Rational& x) {
  if (x < grid.front() || grid.back() < x) {
    throw InvalidInput("x = " + x.to_string() + " outside [" + grid.front().to_string() + ", " +
                       grid.back().to_string() + "]");
  }
  const auto vs = grid.vertices();
  // First vertex >= x; that is v_k for the smallest admissible k.
  auto it = std::lower_bound(vs.begin() + 1, vs.end(), x);
  return static_cast<std::size_t>(it - vs.begin());
}

Rational pl_evaluate(const PLMap& map, const Rational& x) {
  const std::size_t k = locate_edge(map.grid, x);
  const Rational& left = map.grid[k - 1];
  const Rational& right = map.grid[k];
  const Rational lambda = (right - x) / (right - left);
  return lambda * map.value_at_vertex[k - 1] + (Rational(1) - lambda) * map.value_at_vertex[k];
}

ScalarMap as_map(PLMap map) {
  return [m = std::move(map)](const Rational& x) { return pl_evaluate(m, x); };
}

std::vector<Rational> pl_fixed_points(const PLMap& map) {
  std::vector<Rational> roots;
  for (std::size_t k = 1; k < map.grid.size(); ++k) {
    const Rational& u = map.grid[k - 1];
    const Rational& w = map.grid[k];
    // h(x) = f-hat(x) - x is linear on [u, w].
    const Rational hu = map.value_at_vertex[k - 1] - u;
    const Rational hw = map.value_at_vertex[k] - w;
    if (hu.is_zero() && hw.is_zero()) {
      throw std::logic_error("edge [" + u.to_string() + ", " + w.to_string() + "] is fixed pointwise");
    }
    if (hu.sign() * hw.sign() > 0) continue;
    roots.push_back(u + hu * (w - u) / (hu - hw));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

RoundtripReport theorem_roundtrip(const Grid& grid, const Labeling& labeling) {
  RoundtripReport report;
  const PLMap map(discrete_from_labeling(grid, labeling));

  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (labeling[k - 1] != labeling[k]) report.hetero_edges.push_back(k);
  }

  std::map<std::size_t, std::size_t> hits;
  auto fail = [&](std::string why) {
    if (report.failure.empty()) report.failure = std::move(why);
  };
  for (const auto& x : pl_fixed_points(map)) {
    if (pl_evaluate(map, x) != x) fail("f-hat(" + x.to_string() + ") != " + x.to_string());
    const std::size_t k = locate_edge(grid, x);
    const bool on_vertex = x == grid[k - 1] || x == grid[k];
    FixedPointOnEdge entry{x, on_vertex ? 0 : k, labeling[k - 1], labeling[k]};
    if (on_vertex) {
      fail("fixed point " + x.to_string() + " is a grid vertex");
    } else {
      ++hits[k];
      if (entry.label_lo == entry.label_hi) {
        fail("fixed point " + x.to_string() + " lies in monochromatic edge " + std::to_string(k));
      }
    }
    report.fixed_points.push_back(std::move(entry));
  }
  for (std::size_t k : report.hetero_edges) {
    if (hits[k] != 1) {
      fail("hetero edge " + std::to_string(k) + " holds " + std::to_string(hits[k]) + " fixed points");
    }
  }
  if (report.fixed_points.empty()) fail("no fixed point found");
  report.passed = report.failure.empty();
  return report;
}

std::vector<TracePoint> pl_trace(const PLMap& map, std::size_t steps) {
  if (steps == 0) throw InvalidInput("trace needs at least one step per edge");
  std::vector<TracePoint> out;
  out.push_back({map.grid.front(), map.value_at_vertex.front()});
  for (std::size_t k = 1; k < map.grid.size(); ++k) {
    const Rational& u = map.grid[k - 1];
    const Rational step = (map.grid[k] - u) / Rational(static_cast<long>(steps));
    for (std::size_t s = 1; s <= steps; ++s) {
      Rational x = u + Rational(static_cast<long>(s)) * step;
      Rational value = pl_evaluate(map, x);
      out.push_back({std::move(x), std::move(value)});
    }
  }
  return out;
}

}  // namespace brouwer1d
