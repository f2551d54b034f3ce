#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "modgraph/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Modular graphs with A-structure: validation, stabilization, pullbacks, isogenies"};
  std::string verb, in_path, out_path, profile;
  std::size_t max_flags = modgraph::kDefaultMaxFlags;
  std::uint64_t seed = 0;
  app.add_option("verb", verb, "Command to run")
      ->required()
      ->check(CLI::IsMember(modgraph::known_verbs()));
  app.add_option("--in", in_path, "Read the request from this file instead of stdin");
  app.add_option("--out", out_path, "Write the result to this file instead of stdout");
  app.add_option("--profile", profile, "P1, P2, P3, point or a profile JSON file");
  app.add_option("--max-flags", max_flags, "Size cap on input graphs")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomized runs; all verbs are deterministic");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string text;
  if (in_path.empty()) {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(in_path);
    if (!in) {
      std::cerr << "cannot read " << in_path << "\n";
      return 2;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }

  modgraph::CommandResult result;
  modgraph::Json payload = modgraph::Json::parse(text, nullptr, false);
  if (payload.is_discarded()) {
    result = modgraph::error_result(modgraph::Error(modgraph::ErrorKind::schema, "input is not valid JSON"));
  } else {
    modgraph::CommandRequest req{verb, std::move(payload), std::nullopt, max_flags};
    if (!profile.empty()) req.profile = profile;
    result = modgraph::run(req);
  }

  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(out_path);
    out << result.output;
  }
  return result.exit_code;
}
