#include "brouwer1d/sperner.hpp"

#include <algorithm>
#include <cctype>

namespace brouwer1d {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> items;
  for (;;) {
    auto comma = text.find(',');
    items.push_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return items;
}

}  // namespace

Grid::Grid(std::vector<Rational> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw InvalidInput("grid needs at least two vertices");
  for (std::size_t j = 1; j < vertices_.size(); ++j) {
    if (!(vertices_[j - 1] < vertices_[j])) {
      throw InvalidInput("grid vertices must be strictly increasing (index " + std::to_string(j) + ")");
    }
  }
}

Labeling::Labeling(std::vector<std::uint8_t> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) throw InvalidInput("labeling needs at least two labels");
  for (auto l : labels_) {
    if (l > 1) throw InvalidInput("labels must be 0 or 1");
  }
  if (labels_.front() != 0 || labels_.back() != 1) {
    throw BoundaryViolation("labeling must start with 0 and end with 1");
  }
}

Grid make_uniform_grid(const Rational& a, const Rational& b, std::size_t n) {
  if (!(a < b)) throw InvalidInput("uniform grid requires a < b");
  if (n == 0) throw InvalidInput("uniform grid requires n >= 1");
  const Rational step = (b - a) / Rational(static_cast<long>(n));
  std::vector<Rational> vertices;
  vertices.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(a + Rational(static_cast<long>(i)) * step);
  vertices.push_back(b);
  return Grid(std::move(vertices));
}

LabelOutcome label_by_sign(const Grid& grid, const ScalarMap& f) {
  std::vector<Rational> g;
  g.reserve(grid.size());
  for (const auto& v : grid.vertices()) g.push_back(f(v) - v);

  if (g.front().sign() < 0 || g.back().sign() > 0) {
    throw SelfMapError("map does not self-map the interval [" + grid.front().to_string() + ", " +
                       grid.back().to_string() + "]");
  }
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j].is_zero()) return ExactFixedPoint{j, grid[j]};
  }
  std::vector<std::uint8_t> labels(g.size());
  std::transform(g.begin(), g.end(), labels.begin(),
                 [](const Rational& r) { return static_cast<std::uint8_t>(r.sign() > 0 ? 0 : 1); });
  return Labeling(std::move(labels));
}

LabelOutcome label_by_sign(const Grid& grid, const Expr& f) { return label_by_sign(grid, as_map(f)); }

std::size_t find_transition_scan(const Labeling& labeling) {
  for (std::size_t i = 1; i < labeling.size(); ++i) {
    if (labeling[i - 1] != labeling[i]) return i;
  }
  // Unreachable: label[0] = 0 and label[n] = 1.
  throw std::logic_error("labeling without a transition edge");
}

BisectResult find_transition_bisect(const Labeling& labeling) {
  // Invariant: labels[lo] == 0, labels[hi] == 1.
  std::size_t lo = 0;
  std::size_t hi = labeling.n();
  std::size_t queries = 0;
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    ++queries;
    if (labeling[mid] == 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {hi, queries};
}

SpernerVerdict verify_sperner(std::span<const std::uint8_t> labels) {
  if (labels.size() < 2 || labels.front() != 0 || labels.back() != 1) {
    return SpernerVerdict::boundary_violation;
  }
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i - 1] != labels[i]) return SpernerVerdict::holds;
  }
  return SpernerVerdict::no_transition;
}

std::vector<std::uint8_t> parse_label_list(std::string_view text) {
  std::vector<std::uint8_t> labels;
  for (auto item : split_commas(text)) {
    if (item == "0") {
      labels.push_back(0);
    } else if (item == "1") {
      labels.push_back(1);
    } else {
      throw InvalidInput("label '" + std::string(item) + "' is not 0 or 1");
    }
  }
  return labels;
}

std::string format_labels(std::span<const std::uint8_t> labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ',';
    out += labels[i] ? '1' : '0';
  }
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> values;
  for (auto item : split_commas(text)) values.push_back(Rational::parse(item));
  return values;
}

std::string format_rational_list(std::span<const Rational> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += values[i].to_string();
  }
  return out;
}

}  // namespace brouwer1d
