// brouwer1d: command-line front end.
//
// Exit codes:
//   0  success (converged bracket or exact fixed point)
//   1  malformed input or usage error
//   2  boundary violation / map does not self-map the interval
//   3  solver ran out of rounds (report still printed)
//   4  an internal consistency check failed

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "brouwer1d/counterexample.hpp"
#include "brouwer1d/expr.hpp"
#include "brouwer1d/pl_map.hpp"
#include "brouwer1d/report.hpp"
#include "brouwer1d/solver.hpp"
#include "brouwer1d/sperner.hpp"

namespace {

using namespace brouwer1d;

enum ExitCode : int {
  kOk = 0,
  kMalformed = 1,
  kBoundary = 2,
  kUnconverged = 3,
  kCheckFailed = 4,
};

enum class Format { human, json, csv };

const std::map<std::string, Format> kFormats{
    {"human", Format::human}, {"json", Format::json}, {"csv", Format::csv}};

Format default_format() {
  if (const char* env = std::getenv("BROUWER1D_FORMAT")) {
    if (auto it = kFormats.find(env); it != kFormats.end()) return it->second;
  }
  return Format::human;
}

void add_format_option(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format (default from BROUWER1D_FORMAT, else human)")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->option_text("human|json|csv");
}

const CLI::Validator kAtLeastOne(
    [](std::string& value) -> std::string {
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos ||
          value.find_first_not_of('0') == std::string::npos) {
        return "must be a positive integer, got '" + value + "'";
      }
      return {};
    },
    "POSITIVE");

std::string with_decimal(const Rational& x) {
  return x.to_string() + "  (" + x.to_decimal(kDecimalDigits) + ")";
}

// Inline list "0,1/2,1", or a file holding one.
std::vector<Rational> read_vertices(const std::string& arg) {
  std::ifstream in(arg);
  if (in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    for (char& c : text) {
      if (c == '\n' || c == '\r') c = ',';
    }
    while (!text.empty() && text.back() == ',') text.pop_back();
    return parse_rational_list(text);
  }
  return parse_rational_list(arg);
}

Grid grid_for(const std::optional<std::string>& vertices, std::size_t label_count) {
  if (!vertices) {
    std::vector<Rational> vs;
    for (std::size_t j = 0; j < label_count; ++j) vs.emplace_back(static_cast<long>(j));
    return Grid(std::move(vs));
  }
  Grid grid(read_vertices(*vertices));
  if (grid.size() != label_count) {
    throw InvalidInput(std::to_string(label_count) + " labels but " + std::to_string(grid.size()) +
                       " vertices");
  }
  return grid;
}

// --- sperner ---------------------------------------------------------------

struct SpernerArgs {
  std::string labels;
  std::optional<std::string> vertices;
  Format format = default_format();
};

int run_sperner(const SpernerArgs& args) {
  const Labeling labeling(parse_label_list(args.labels));
  const Grid grid = grid_for(args.vertices, labeling.size());
  const std::size_t scan = find_transition_scan(labeling);
  const BisectResult bisect = find_transition_bisect(labeling);

  switch (args.format) {
    case Format::json: {
      Json j;
      j["scan"] = scan;
      j["bisect"] = bisect.edge;
      if (args.vertices) {
        j["scan_edge"] = Json::array({to_json(grid[scan - 1]), to_json(grid[scan])});
        j["bisect_edge"] = Json::array({to_json(grid[bisect.edge - 1]), to_json(grid[bisect.edge])});
      }
      std::cout << j.dump() << '\n';
      break;
    }
    case Format::csv:
      std::cout << "method,edge,lo,hi\n"
                << "scan," << scan << ',' << grid[scan - 1] << ',' << grid[scan] << '\n'
                << "bisect," << bisect.edge << ',' << grid[bisect.edge - 1] << ',' << grid[bisect.edge]
                << '\n';
      break;
    case Format::human:
      std::cout << "labels: " << format_labels(labeling.labels()) << '\n'
                << "scan:   edge " << scan << " [" << grid[scan - 1] << ", " << grid[scan] << "]\n"
                << "bisect: edge " << bisect.edge << " [" << grid[bisect.edge - 1] << ", "
                << grid[bisect.edge] << "] after " << bisect.queries << " label queries\n";
      break;
  }
  return kOk;
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string expr;
  std::string a;
  std::string b;
  std::string epsilon = "1/1000000";
  std::optional<std::string> lipschitz;
  std::size_t branching = 2;
  std::size_t max_rounds = 64;
  SolverMode mode = SolverMode::refine;
  Format format = default_format();
};

int run_solve(const SolveArgs& args) {
  std::string text = args.expr;
  if (text == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  const Expr f = parse(text);
  const Rational a = Rational::parse(args.a);
  const Rational b = Rational::parse(args.b);

  SolverConfig config;
  config.epsilon = Rational::parse(args.epsilon);
  if (args.lipschitz) config.lipschitz = Rational::parse(*args.lipschitz);
  config.branching = args.branching;
  config.max_rounds = args.max_rounds;
  config.mode = args.mode;

  const FixPointResult result = solve(f, a, b, config);

  switch (args.format) {
    case Format::json:
      std::cout << to_json(result, config.lipschitz).dump() << '\n';
      break;
    case Format::csv: {
      std::cout << std::boolalpha << "mode,result,converged,rounds_used,lo,hi,g_lo,g_hi\n" << to_string(result.mode) << ',';
      if (result.is_exact()) {
        const auto& hit = result.exact();
        std::cout << "exact_vertex," << result.converged << ',' << hit.rounds_used << ',' << hit.x << ','
                  << hit.x << ",0,0\n";
      } else {
        const auto& br = result.bracket();
        std::cout << "bracket," << result.converged << ',' << br.rounds_used << ',' << br.lo << ','
                  << br.hi << ',' << br.g_lo << ',' << br.g_hi << '\n';
      }
      break;
    }
    case Format::human:
      std::cout << "f(x)   = " << print(f) << '\n' << "mode:    " << to_string(result.mode) << '\n';
      if (result.is_exact()) {
        std::cout << "result:  exact fixed point at a grid vertex\n"
                  << "x      = " << with_decimal(result.exact().x) << '\n';
      } else {
        const auto& br = result.bracket();
        std::cout << "result:  certified bracket" << (result.converged ? "" : " (NOT converged)") << '\n'
                  << "lo     = " << with_decimal(br.lo) << '\n'
                  << "hi     = " << with_decimal(br.hi) << '\n'
                  << "g(lo)  = " << with_decimal(br.g_lo) << '\n'
                  << "g(hi)  = " << with_decimal(br.g_hi) << '\n'
                  << "width  = " << with_decimal(br.width()) << '\n';
        if (config.lipschitz) {
          std::cout << "|g(mid)| <= " << with_decimal(residual_bound(br, *config.lipschitz)) << '\n';
        }
      }
      std::cout << "rounds:  " << result.rounds_used() << '\n';
      break;
  }
  return result.converged ? kOk : kUnconverged;
}

// --- plmap -----------------------------------------------------------------

struct PlmapArgs {
  std::string labels;
  std::optional<std::string> vertices;
  std::string action;
  std::optional<std::string> x;
  std::size_t steps = 4;
  Format format = default_format();
};

int run_plmap(const PlmapArgs& args) {
  const Labeling labeling(parse_label_list(args.labels));
  const Grid grid = grid_for(args.vertices, labeling.size());
  const PLMap map(discrete_from_labeling(grid, labeling));

  if (args.action == "eval") {
    if (!args.x) throw InvalidInput("eval needs a point x");
    const Rational x = Rational::parse(*args.x);
    const Rational value = pl_evaluate(map, x);
    switch (args.format) {
      case Format::json: {
        Json j;
        j["x"] = to_json(x);
        j["value"] = to_json(value);
        std::cout << j.dump() << '\n';
        break;
      }
      case Format::csv:
        std::cout << "x,fhat\n" << x << ',' << value << '\n';
        break;
      case Format::human:
        std::cout << "fhat(" << x << ") = " << with_decimal(value) << '\n';
        break;
    }
    return kOk;
  }

  if (args.x) throw InvalidInput("unexpected argument '" + *args.x + "' for " + args.action);

  if (args.action == "fixed-points") {
    const RoundtripReport report = theorem_roundtrip(grid, labeling);
    if (!report.passed) {
      std::cerr << "error: fixed-point check failed: " << report.failure << '\n';
      return kCheckFailed;
    }
    switch (args.format) {
      case Format::json: {
        Json j = Json::array();
        for (const auto& fp : report.fixed_points) j.push_back(to_json(fp.x));
        std::cout << j.dump() << '\n';
        break;
      }
      case Format::csv:
        std::cout << "x,edge,label_lo,label_hi\n";
        for (const auto& fp : report.fixed_points) {
          std::cout << fp.x << ',' << fp.edge << ',' << int(fp.label_lo) << ',' << int(fp.label_hi) << '\n';
        }
        break;
      case Format::human:
        for (const auto& fp : report.fixed_points) {
          std::cout << with_decimal(fp.x) << "  on edge " << fp.edge << " [" << grid[fp.edge - 1] << ", "
                    << grid[fp.edge] << "] labels " << int(fp.label_lo) << "->" << int(fp.label_hi) << '\n';
        }
        break;
    }
    return kOk;
  }

  // trace
  const auto points = pl_trace(map, args.steps);
  if (args.format == Format::json) {
    Json j = Json::array();
    for (const auto& p : points) j.push_back(Json{{"x", to_json(p.x)}, {"fhat", to_json(p.value)}});
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "x,fhat\n";
    for (const auto& p : points) std::cout << p.x << ',' << p.value << '\n';
  }
  return kOk;
}

// --- counterexample ---------------------------------------------------------

struct CounterexampleArgs {
  std::size_t depth = 60;
  Format format = default_format();
};

int run_counterexample(const CounterexampleArgs& args) {
  const auto reports = run_demo(args.depth);
  const bool passed = demo_passed(reports);

  switch (args.format) {
    case Format::json: {
      Json j;
      j["function"] = print(counterexample_expr());
      j["domain"] = Json::array({"1", "2"});
      j["depth"] = args.depth;
      j["residual_floor"] = to_json(residual_floor());
      j["passed"] = passed;
      j["rounds"] = Json::array();
      for (const auto& r : reports) j["rounds"].push_back(to_json(r));
      std::cout << j.dump() << '\n';
      break;
    }
    case Format::csv:
      std::cout << counterexample_csv(reports);
      break;
    case Format::human:
      std::cout << "f(x) = " << print(counterexample_expr()) << " on [1, 2] over the rationals\n";
      for (const auto& r : reports) {
        std::cout << "round " << r.depth << ": [" << r.bracket.lo << ", " << r.bracket.hi << "]  width "
                  << r.bracket.width() << "  g(mid) = " << r.midpoint_residual.to_decimal(kDecimalDigits)
                  << "  |g(mid)| >= 2/5: " << (r.residual_floor_check ? "yes" : "NO")
                  << "  sqrt2 inside: " << (r.contains_sqrt2 ? "yes" : "NO") << '\n';
      }
      std::cout << (passed ? "all rounds passed: brackets shrink while the residual stays >= 2/5\n"
                           : "CHECK FAILED\n");
      break;
  }
  return passed ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Sperner search and certified fixed-point bracketing in one dimension"};
  app.require_subcommand(1);

  SpernerArgs sperner_args;
  auto* sperner_cmd = app.add_subcommand("sperner", "Find a transition edge of a 0/1 labeling");
  sperner_cmd->add_option("labels", sperner_args.labels, "Comma-separated labels, e.g. 0,0,1,1")->required();
  sperner_cmd->add_option("--vertices", sperner_args.vertices, "Vertex list (rational CSV) or a file holding one");
  add_format_option(sperner_cmd, sperner_args.format);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Bracket a fixed point of f on [a, b]");
  solve_cmd->add_option("expr", solve_args.expr, "Function of x, or - to read it from stdin")->required();
  solve_cmd->add_option("a", solve_args.a, "Left endpoint (rational literal)")->required();
  solve_cmd->add_option("b", solve_args.b, "Right endpoint (rational literal)")->required();
  solve_cmd->add_option("--epsilon", solve_args.epsilon, "Target residual bound")->capture_default_str();
  solve_cmd->add_option("--lipschitz", solve_args.lipschitz, "Declared Lipschitz constant of f");
  solve_cmd->add_option("--branching", solve_args.branching, "Subintervals per round")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20))
      ->capture_default_str();
  solve_cmd->add_option("--max-rounds", solve_args.max_rounds, "Refinement round limit")
      ->check(kAtLeastOne)
      ->capture_default_str();
  solve_cmd->add_option("--mode", solve_args.mode, "refine or single_grid")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, SolverMode>{{"refine", SolverMode::refine},
                                            {"single_grid", SolverMode::single_grid}},
          CLI::ignore_case))
      ->option_text("refine|single_grid");
  add_format_option(solve_cmd, solve_args.format);

  PlmapArgs plmap_args;
  auto* plmap_cmd = app.add_subcommand("plmap", "Piecewise-linear extension of the labeling's vertex map");
  plmap_cmd->add_option("labels", plmap_args.labels, "Comma-separated labels")->required();
  plmap_cmd->add_option("action", plmap_args.action, "eval, fixed-points or trace")
      ->required()
      ->check(CLI::IsMember({"eval", "fixed-points", "trace"}));
  plmap_cmd->add_option("x", plmap_args.x, "Point for eval");
  plmap_cmd->add_option("--vertices", plmap_args.vertices, "Vertex list (rational CSV) or a file holding one");
  plmap_cmd->add_option("--steps", plmap_args.steps, "Trace samples per edge")
      ->check(kAtLeastOne)
      ->capture_default_str();
  add_format_option(plmap_cmd, plmap_args.format);

  CounterexampleArgs ce_args;
  auto* ce_cmd = app.add_subcommand("counterexample", "Run the fixed-point-free map on [1, 2] over the rationals");
  ce_cmd->add_option("--depth", ce_args.depth, "Number of halving rounds")
      ->check(kAtLeastOne)
      ->capture_default_str();
  add_format_option(ce_cmd, ce_args.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*sperner_cmd) return run_sperner(sperner_args);
    if (*solve_cmd) return run_solve(solve_args);
    if (*plmap_cmd) return run_plmap(plmap_args);
    if (*ce_cmd) return run_counterexample(ce_args);
  } catch (const BoundaryViolation& e) {
    std::cerr << "error: boundary violation: " << e.what() << '\n';
    return kBoundary;
  } catch (const SelfMapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBoundary;
  } catch (const ParseError& e) {
    std::cerr << "error: parse: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  }
  return kMalformed;
}
