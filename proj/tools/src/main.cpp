#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "polyfun_cli/commands.hpp"

namespace {

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string joined_names() {
  std::string out;
  for (const auto& name : polyfun::cli::command_names()) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace polyfun::cli;

  CLI::App app{"Polynomial functors over finite-poset presheaves"};
  std::string command;
  std::string file;
  Args args;
  std::uint64_t seed = 0;

  app.add_option("command", command, "One of: " + joined_names())->required();
  app.add_option("-f,--file", file, "Model file (default: stdin)");
  app.add_option("--poly", args.poly, "Polynomial name");
  app.add_option("--outer", args.outer, "Outer polynomial for compose");
  app.add_option("--inner", args.inner, "Inner polynomial for compose");
  app.add_option("--left", args.left, "Left factor for product");
  app.add_option("--right", args.right, "Right factor for product");
  app.add_option("--map", args.map, "Morphism name");
  app.add_option("--arg", args.arg, "Argument object for eval");
  app.add_option("--n", args.n, "Arity");
  app.add_option("--size", args.size, "Constant argument size for eval");
  app.add_option("--sigma", args.sigma, "Labelling of argument slots by I-elements")
      ->delimiter(',');
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_flag("--dot", args.dot, "Emit Graphviz DOT instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUnknownName;
  }
  if (seed_opt->count() > 0) args.seed = seed;

  std::string text;
  if (file.empty() || file == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      std::cerr << R"({"error":"io","message":"cannot open )" << file << "\"}\n";
      return kInvalid;
    }
    text = read_all(in);
  }
  return execute(command, text, args, budget_from_environment(), std::cout, std::cerr);
}
