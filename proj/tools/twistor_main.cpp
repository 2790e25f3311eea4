// twistor: command-line front end for the almost complex structure toolkit.
//
//   twistor verify   [--json|--text] [--seed S] [--eigen-sign 1|-1]
//   twistor sample   --set ank|integrable|random|polar|edge01 --count N --seed S --out PATH
//   twistor classify (--in PATH | --cp3 "a+bi,...") [--json]
//   twistor optimize --direction max|min [--restarts R] [--seed S] [--max-iters K] [--json]
//
// Exit codes: 0 success, 1 check failure, 2 internal or usage error, 3 no convergence.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <twistor/app/checks.hpp>
#include <twistor/app/classify.hpp>
#include <twistor/app/documents.hpp>
#include <twistor/app/sampling.hpp>
#include <twistor/error.hpp>
#include <twistor/extremum.hpp>

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInternal = 2, kNoConvergence = 3 };

using namespace twistor;
using namespace twistor::app;

int cmd_verify(bool json, std::uint64_t seed, int eigen_sign) {
  VerifyOptions opts;
  opts.seed = seed;
  opts.sign = eigen_sign < 0 ? EigenSign::Minus : EigenSign::Plus;
  const auto records = run_checks(opts);
  std::cout << (json ? checks_to_json(records) : checks_to_text(records));
  return all_passed(records) ? kOk : kCheckFailed;
}

int cmd_sample(const std::string& set, int count, std::uint64_t seed, const std::string& path) {
  const auto rows = sample(parse_sample_set(set), count, seed);
  std::ostringstream csv;
  write_csv(csv, rows);
  if (path == "-")
    std::cout << csv.str();
  else
    write_file(path, csv.str());
  return kOk;
}

int cmd_classify(const std::string& in_path, const std::string& cp3, bool json) {
  std::optional<std::string> label;
  Mat6 matrix;
  if (!cp3.empty()) {
    matrix = cp3_to_acs(parse_cp3(cp3)).matrix();
  } else {
    const StructureDocument doc = parse_structure_document(read_file(in_path));
    matrix = doc.to_matrix();
    label = doc.label;
  }
  const MembershipReport report = inspect(matrix);
  if (!report.ok()) {
    if (json)
      std::cout << membership_json(report);
    else
      std::cout << membership_text(report);
    return kCheckFailed;
  }
  const Classification c = classify(ACS::validate(matrix), label);
  std::cout << (json ? to_json(c) : to_text(c));
  return kOk;
}

int cmd_optimize(const std::string& direction, int restarts, std::uint64_t seed, int max_iters, bool json) {
  const Direction dir = direction == "max" ? Direction::Maximize : Direction::Minimize;
  SearchOptions opts;
  opts.max_iters = max_iters;
  try {
    const SearchReport rep = dir == Direction::Maximize ? maximize(seed, restarts, opts) : minimize(seed, restarts, opts);
    std::cout << (json ? to_json(rep, dir) : to_text(rep, dir));
    return kOk;
  } catch (const NoConvergenceError& e) {
    std::cout << (json ? to_json(e.partial(), dir) : to_text(e.partial(), dir));
    std::cerr << "twistor: " << e.what() << "\n";
    return kNoConvergence;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Almost complex structures on su(2)+su(2): checks, sampling, classification, extremum search"};
  app.require_subcommand(1);

  bool json = false, text = false;
  std::uint64_t seed = 0;
  int eigen_sign = 1;
  auto* verify = app.add_subcommand("verify", "Run every claim check and report pass/fail");
  auto* json_flag = verify->add_flag("--json", json, "JSON report");
  verify->add_flag("--text", text, "Text report (default)")->excludes(json_flag);
  verify->add_option("--seed", seed, "Seed for sampled checks");
  verify->add_option("--eigen-sign", eigen_sign, "Eigenvalue convention for the CP3 correspondence")
      ->check(CLI::IsMember({1, -1}));

  std::string set, out;
  int count = 0;
  auto* sample_cmd = app.add_subcommand("sample", "Export a point cloud of one structure family as CSV");
  sample_cmd->add_option("--set", set, "ank|integrable|random|polar|edge01")->required();
  sample_cmd->add_option("--count", count, "Number of rows")->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", seed, "Seed");
  sample_cmd->add_option("--out", out, "Output path, - for stdout")->required();

  std::string in_path, cp3;
  bool classify_json = false;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a structure given as a matrix or a CP3 point");
  auto* in_opt = classify_cmd->add_option("--in", in_path, "Structure document (JSON)");
  auto* cp3_opt = classify_cmd->add_option("--cp3", cp3, "Four complex coordinates \"a+bi,...\"");
  in_opt->excludes(cp3_opt);
  classify_cmd->add_flag("--json", classify_json, "JSON output");

  std::string direction;
  int restarts = 20, max_iters = 2000;
  bool optimize_json = false;
  auto* optimize = app.add_subcommand("optimize", "Extremize the Nijenhuis norm by Riemannian ascent");
  optimize->add_option("--direction", direction, "max|min")->required()->check(CLI::IsMember({"max", "min"}));
  optimize->add_option("--restarts", restarts, "Random restarts")->check(CLI::PositiveNumber);
  optimize->add_option("--seed", seed, "Seed");
  optimize->add_option("--max-iters", max_iters, "Iteration cap per restart")->check(CLI::PositiveNumber);
  optimize->add_flag("--json", optimize_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInternal;
  }

  try {
    if (*verify) return cmd_verify(json, seed, eigen_sign);
    if (*sample_cmd) return cmd_sample(set, count, seed, out);
    if (*classify_cmd) {
      if (in_path.empty() && cp3.empty()) throw ParseError("classify needs --in or --cp3");
      return cmd_classify(in_path, cp3, classify_json);
    }
    if (*optimize) return cmd_optimize(direction, restarts, seed, max_iters, optimize_json);
  } catch (const ParseError& e) {
    std::cerr << "twistor: parse error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "twistor: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
