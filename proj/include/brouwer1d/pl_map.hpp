#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "brouwer1d/expr.hpp"
#include "brouwer1d/rational.hpp"
#include "brouwer1d/sperner.hpp"

namespace brouwer1d {

/// Vertex-to-vertex map: label-0 vertices step right, label-1 vertices step
/// left. Targets always stay inside 0..n because label[0] = 0 and label[n] = 1.
struct DiscreteMap {
  Grid grid;
  std::vector<std::size_t> target_index;
};

/// Piecewise-linear interpolant through (v_j, value_at_vertex[j]).
struct PLMap {
  Grid grid;
  std::vector<Rational> value_at_vertex;

  PLMap(Grid grid, std::vector<Rational> values);
  explicit PLMap(const DiscreteMap& map);
};

DiscreteMap discrete_from_labeling(const Grid& grid, const Labeling& labeling);

/// Index k of the edge [v_{k-1}, v_k] holding x; a vertex belongs to the
/// edge on its left except v0. Throws InvalidInput outside [v0, vn].
std::size_t locate_edge(const Grid& grid, const Rational& x);

/// lambda f(v_{k-1}) + (1 - lambda) f(v_k) where x = lambda v_{k-1} + (1 - lambda) v_k.
Rational pl_evaluate(const PLMap& map, const Rational& x);

ScalarMap as_map(PLMap map);

/// Every x with pl_evaluate(map, x) == x, ascending and deduplicated, by an
/// exact linear solve on each edge.
std::vector<Rational> pl_fixed_points(const PLMap& map);

struct FixedPointOnEdge {
  Rational x;
  std::size_t edge;  // k with v_{k-1} < x < v_k, or 0 if x is a vertex
  std::uint8_t label_lo;
  std::uint8_t label_hi;
};

/// Result of building the PL extension of a labeling and checking that its
/// fixed points sit exactly on the hetero-labeled edges, one per edge,
/// strictly inside.
struct RoundtripReport {
  std::vector<FixedPointOnEdge> fixed_points;
  std::vector<std::size_t> hetero_edges;
  bool passed = false;
  std::string failure;
};

RoundtripReport theorem_roundtrip(const Grid& grid, const Labeling& labeling);

struct TracePoint {
  Rational x;
  Rational value;
};

/// Samples f-hat at `steps` equal subdivisions of every edge, vertices
/// included, in ascending x.
std::vector<TracePoint> pl_trace(const PLMap& map, std::size_t steps);

}  // namespace brouwer1d
