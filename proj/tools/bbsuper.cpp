#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "bbsuper/cli.hpp"

int main(int argc, char** argv) {
  using namespace bbsuper::cli;

  CLI::App app{"Characters and root multiplicities of Borcherds-Bozec superalgebras"};
  app.require_subcommand(1);

  JobSpec job;
  std::string lambda;
  std::string format = "json";

  const std::map<std::string, std::string> help{
      {"validate", "Validate a datum and print its index classes"},
      {"roots", "Solve root multiplicities up to --height"},
      {"char", "Irreducible character of V(lambda) up to --height"},
      {"denom-check", "Solve multiplicities and verify the denominator identity"},
      {"oracle", "Weight multiplicities from Gram-matrix ranks"},
      {"compare", "Compare the character formula with the Gram oracle"}};

  for (const auto& [name, text] : help) {
    CLI::App* sub = app.add_subcommand(name, text);
    sub->add_option("--datum", job.datum_path, "Datum JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--height", job.height, "Height bound H")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--jobs", job.jobs, "Worker threads")->check(CLI::PositiveNumber);
    if (name == "char" || name == "oracle" || name == "compare")
      sub->add_option("--lambda", lambda, "Highest weight JSON file")->check(CLI::ExistingFile);
    if (name == "oracle") sub->add_flag("--symbolic", job.symbolic, "Generic highest weight");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kValidationError;
  }

  job.subcommand = *parse_subcommand(app.get_subcommands().front()->get_name());
  job.format = format == "table" ? Format::Table : Format::Json;
  if (!lambda.empty()) job.lambda_path = lambda;
  return run(job, std::cout, std::cerr);
}
