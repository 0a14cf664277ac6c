#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twomon/dsl.hpp"

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twomon: finite 2-categories, 2-monads and the lifting of σ-ω-limits"};
  app.require_subcommand(1, 1);
  std::string file, json_path, probes;
  twomon::dsl::RunOptions opt;
  std::size_t budget = 0;

  auto common = [&](CLI::App* c) {
    c->add_option("FILE", file, "input document")->required();
    c->add_option("--json", json_path, "write the canonical JSON report to PATH");
    c->add_option("--probe-set", probes, "comma-separated probe categories for Cat_fin limits");
    c->add_option("--budget", budget, "cell budget for enumerations");
    c->add_flag("--verbose", opt.verbose, "print every check, result and timing");
  };
  auto* validate = app.add_subcommand("validate", "parse and elaborate a document");
  auto* limit = app.add_subcommand("limit", "compute and certify the limit of a task");
  auto* lift = app.add_subcommand("lift", "lift a limit to T-Alg and verify the transcript");
  auto* enumerate = app.add_subcommand("enumerate-monads", "enumerate the 2-monads on a 2-category");
  auto* suite = app.add_subcommand("suite", "run every task of a document");
  for (auto* c : {validate, limit, lift, enumerate, suite}) common(c);
  limit->add_option("--task", opt.task, "task name")->required();
  lift->add_option("--task", opt.task, "task name")->required();
  enumerate->add_option("--twocat", opt.twocat, "2-category name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ifstream in(file, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << file << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  opt.probes = split(probes);
  if (budget) opt.budget = budget;

  auto result = twomon::dsl::run(app.get_subcommands().front()->get_name(), buf.str(), opt);
  std::cout << twomon::dsl::to_text(result, opt.verbose);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
    out << twomon::dsl::to_json(result);
  }
  return result.exit_code;
}
