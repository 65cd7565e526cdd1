// trop-rate: constrained multicriteria ratings from pairwise comparisons.
//
//   trop-rate solve problem.json --method all --verify h=0.01

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "troprate/io.hpp"
#include "troprate/multicriteria.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitTolerance = 4;

using namespace troprate;
using nlohmann::json;

std::vector<std::size_t> parse_order(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t pos = 0;
      const long v = std::stol(tok, &pos);
      if (pos != tok.size() || v < 1) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw io::ParseError("--order expects comma-separated positive "
                           "integers, got '" + text + "'");
    }
  }
  return out;
}

double parse_grid_step(std::string text) {
  if (text.rfind("h=", 0) == 0) text = text.substr(2);
  try {
    std::size_t pos = 0;
    const double h = std::stod(text, &pos);
    if (pos != text.size() || !(h > 0.0)) throw std::invalid_argument(text);
    return h;
  } catch (const std::exception&) {
    throw io::ParseError("--verify expects h=<positive step>, got '" + text + "'");
  }
}

ThetaEngine engine_default() {
  if (const char* env = std::getenv("TROP_RATE_ENGINE")) {
    if (const auto e = parse_engine(env)) return *e;
    std::cerr << "warning: ignoring unknown TROP_RATE_ENGINE='" << env << "'\n";
  }
  return ThetaEngine::Auto;
}

struct SolveArgs {
  std::string file;
  std::string method = "max";
  std::string order;
  std::string verify = "h=0.01";
  bool verify_requested = false;
  std::string baseline;
  std::string format = "text";
  std::string engine;
  double tol = kLogTol;
};

int run_solve(const SolveArgs& args) {
  if (!(args.tol > 0.0) || !std::isfinite(args.tol)) {
    throw io::ParseError("--tol must be a positive number");
  }
  SolveOptions options;
  options.tol = args.tol;
  options.engine = engine_default();
  if (!args.engine.empty()) {
    const auto e = parse_engine(args.engine);
    if (!e) throw io::ParseError("unknown engine '" + args.engine + "'");
    options.engine = *e;
  }
  const auto format = io::parse_format(args.format);
  if (!format) throw io::ParseError("unknown format '" + args.format + "'");

  std::vector<Method> methods;
  if (args.method == "all") {
    methods = {Method::MaxOrdering, Method::Lexicographic,
               Method::LexMaxOrdering};
  } else if (const auto m = parse_method(args.method)) {
    methods = {*m};
  } else {
    throw io::ParseError("unknown method '" + args.method + "'");
  }
  if (!args.baseline.empty() && args.baseline != "geomean") {
    throw io::ParseError("unknown baseline '" + args.baseline + "'");
  }
  std::optional<double> grid_step;
  if (args.verify_requested) grid_step = parse_grid_step(args.verify);

  io::ParsedProblem parsed = io::parse_problem(args.file, options);
  if (!args.order.empty()) {
    parsed.problem.lex_order.clear();
    for (std::size_t r : parse_order(args.order)) {
      parsed.problem.lex_order.push_back(r - 1);
    }
    parsed.problem.validate();
  }
  const auto& labels = parsed.document.alternatives;

  json warnings = json::array();
  for (const auto& w : parsed.warnings) {
    std::ostringstream msg;
    msg << "criterion " << w.criterion + 1 << " is not reciprocal at ("
        << w.row + 1 << "," << w.col + 1 << "): log(c_ij c_ji) = "
        << w.log_deviation;
    warnings.push_back(msg.str());
    if (*format == io::ReportFormat::Text) {
      std::cerr << "warning: " << msg.str() << "\n";
    }
  }

  bool verified = true;
  std::vector<io::ResultDocument> docs;
  for (Method m : methods) {
    const SolutionBundle bundle = solve(parsed.problem, m);
    io::ResultDocument doc = io::make_result(bundle, labels);
    if (args.verify_requested) {
      doc.verification = io::verify_bundle(bundle, grid_step, options.tol);
      verified = verified && doc.verification->ok();
    }
    docs.push_back(std::move(doc));
  }
  bool rankings_agree = true;
  for (const auto& d : docs) {
    rankings_agree = rankings_agree && d.ranking == docs.front().ranking;
  }

  json baseline = json::array();
  if (!args.baseline.empty()) {
    for (const auto& c : parsed.document.criteria) {
      baseline.push_back(
          {{"criterion", c.name},
           {"ratings", io::geometric_mean_ratings(c.matrix).values()}});
    }
  }

  if (*format == io::ReportFormat::Json) {
    json out;
    if (docs.size() == 1) {
      out = io::to_json(docs.front());
    } else {
      out["results"] = json::array();
      for (const auto& d : docs) out["results"].push_back(io::to_json(d));
      out["rankings_agree"] = rankings_agree;
    }
    if (!baseline.empty()) out["baseline_geomean"] = baseline;
    if (!warnings.empty()) out["warnings"] = warnings;
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < docs.size(); ++k) {
      if (k) std::cout << "\n";
      std::cout << io::emit_text(docs[k]);
    }
    if (docs.size() > 1) {
      std::cout << "\nrankings agree: " << (rankings_agree ? "yes" : "no") << "\n";
    }
    for (const auto& b : baseline) {
      std::cout << "baseline geomean [" << b["criterion"].get<std::string>()
                << "]: "
                << io::format_vector(b["ratings"].get<std::vector<double>>())
                << "\n";
    }
  }
  return verified ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained ratings of alternatives from pairwise comparisons "
               "by tropical log-Chebyshev approximation"};
  app.require_subcommand(1);

  SolveArgs args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem document");
  solve_cmd->add_option("file", args.file, "Problem document (JSON)")->required();
  solve_cmd->add_option("--method", args.method, "max|lex|lexmax|all")
      ->capture_default_str();
  solve_cmd->add_option("--order", args.order,
                        "Criterion ranks for lexicographic methods, e.g. 1,2,3");
  auto* verify_opt = solve_cmd->add_option(
      "--verify", args.verify,
      "Check outputs against the grid oracle, e.g. h=0.01");
  verify_opt->expected(0, 1);
  solve_cmd->add_option("--baseline", args.baseline, "geomean");
  solve_cmd->add_option("--format", args.format, "text|json")
      ->capture_default_str();
  solve_cmd->add_option("--engine", args.engine,
                        "enumerate|bisect|auto (default: $TROP_RATE_ENGINE)");
  solve_cmd->add_option("--tol", args.tol, "Log-domain tolerance")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  args.verify_requested = verify_opt->count() > 0;
  if (args.verify.empty()) args.verify = "h=0.01";

  try {
    return run_solve(args);
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
