#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "symlie/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact symplectic structures on Lie algebras"};
  app.require_subcommand(1);

  symlie::cli::CommandRequest req;
  std::string family;
  std::size_t n = 0;
  std::string input;
  std::size_t trials = 0;

  for (const char* name : {"decompose", "reduce", "classify", "cocycles", "milnor-frame", "lagrangian", "verify"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--family", family, "RH or HEIS");
    sub->add_option("--n", n, "half the dimension");
    sub->add_option("--in", input, "input JSON file (default: stdin)");
    sub->add_option("--seed", req.seed, "base seed for randomized suites");
    sub->add_option("--trials", trials, "trials per suite");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return symlie::cli::kExitBadInput;
  }

  auto* sub = app.get_subcommands().front();
  req.command = sub->get_name();
  try {
    if (sub->count("--family")) req.family = symlie::parse_family(family);
  } catch (const symlie::Error& e) {
    std::cerr << nlohmann::json{{"error", "ParseError"}, {"message", e.what()}}.dump() << '\n';
    return symlie::cli::kExitBadInput;
  }
  if (sub->count("--n")) req.n = n;
  if (sub->count("--in")) req.input_path = input;
  if (sub->count("--trials")) req.trials = trials;

  return symlie::cli::run_command(req, std::cin, std::cout, std::cerr);
}
