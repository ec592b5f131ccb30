#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "brouwer1d/expr.hpp"
#include "brouwer1d/rational.hpp"

namespace brouwer1d {

/// Labeling endpoints violate label(v0) = 0, label(vn) = 1.
class BoundaryViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f(v0) < v0 or f(vn) > vn: f does not map [v0, vn] into itself.
class SelfMapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strictly increasing list of at least two vertices v0 < ... < vn.
class Grid {
 public:
  explicit Grid(std::vector<Rational> vertices);

  std::size_t n() const { return vertices_.size() - 1; }
  std::size_t size() const { return vertices_.size(); }
  const Rational& operator[](std::size_t j) const { return vertices_[j]; }
  const Rational& front() const { return vertices_.front(); }
  const Rational& back() const { return vertices_.back(); }
  std::span<const Rational> vertices() const { return vertices_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::vector<Rational> vertices_;
};

/// {0,1} labels with label[0] = 0 and label[n] = 1.
class Labeling {
 public:
  /// Throws InvalidInput for fewer than two labels or a label outside {0,1},
  /// BoundaryViolation if the endpoint condition fails.
  explicit Labeling(std::vector<std::uint8_t> labels);

  std::size_t n() const { return labels_.size() - 1; }
  std::size_t size() const { return labels_.size(); }
  std::uint8_t operator[](std::size_t j) const { return labels_[j]; }
  std::span<const std::uint8_t> labels() const { return labels_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<std::uint8_t> labels_;
};

/// v_i = a + i (b - a) / n for i = 0..n.
Grid make_uniform_grid(const Rational& a, const Rational& b, std::size_t n);

struct ExactFixedPoint {
  std::size_t index;
  Rational vertex;
};

using LabelOutcome = std::variant<Labeling, ExactFixedPoint>;

/// Labels each vertex by the sign of g(v) = f(v) - v: 0 when positive, 1 when
/// negative. Returns the first vertex with g(v) = 0 instead, if any. Throws
/// SelfMapError when g(v0) < 0 or g(vn) > 0.
LabelOutcome label_by_sign(const Grid& grid, const ScalarMap& f);
LabelOutcome label_by_sign(const Grid& grid, const Expr& f);

/// Smallest i in 1..n with labels[i-1] != labels[i].
std::size_t find_transition_scan(const Labeling& labeling);

struct BisectResult {
  std::size_t edge;     // labels[edge-1] == 0, labels[edge] == 1
  std::size_t queries;  // labels read, endpoints excluded
};

/// Halving search for some 0->1 edge. Reads at most ceil(log2 n) labels.
BisectResult find_transition_bisect(const Labeling& labeling);

enum class SpernerVerdict { holds, boundary_violation, no_transition };

/// Checks an arbitrary label vector: boundary_violation when the endpoint
/// condition fails, otherwise holds iff some adjacent pair differs.
SpernerVerdict verify_sperner(std::span<const std::uint8_t> labels);

/// "0,0,1,1" <-> Labeling. Parsing accepts surrounding whitespace per item.
std::vector<std::uint8_t> parse_label_list(std::string_view text);
std::string format_labels(std::span<const std::uint8_t> labels);

/// Rational-literal CSV ("0,1/2,1") <-> vertex list.
std::vector<Rational> parse_rational_list(std::string_view text);
std::string format_rational_list(std::span<const Rational> values);

}  // namespace brouwer1d
