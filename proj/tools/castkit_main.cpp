#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "castkit/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"castkit: a gradual-typing cast-calculus workbench"};
  app.require_subcommand(1);

  std::string file, calculus = "eda", variant = "cc";
  int fuel = 0;
  bool trace = false;
  std::vector<std::string> calculi;

  CLI::App* run = app.add_subcommand("run", "evaluate a program");
  run->add_option("file", file)->required();
  run->add_option("--calculus", calculus,
                  "eda|edi|lambda-b1|lambda-b2|edc|ldc|lambda-c|lambda-s|hyper");
  run->add_option("--variant", variant, "cc|cc-prime (ignored by space-efficient calculi)");
  run->add_option("--fuel", fuel);
  run->add_flag("--trace", trace, "print one line per reduction step");

  CLI::App* measure = app.add_subcommand("measure", "run with space instrumentation");
  measure->add_option("file", file)->required();
  measure->add_option("--calculus", calculus, "lambda-s|hyper");
  measure->add_option("--fuel", fuel);

  CLI::App* diff = app.add_subcommand("diff", "compare calculi on one program");
  diff->add_option("file", file)->required();
  diff->add_option("--calculi", calculi, "comma-separated calculus names")
      ->delimiter(',');
  diff->add_option("--fuel", fuel);

  CLI11_PARSE(app, argc, argv);

  std::string source;
  try {
    source = read_file(file);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return castkit::kExitParseError;
  }

  if (run->parsed())
    return castkit::cmd_run(source, calculus, variant, fuel, trace, std::cout, std::cerr);
  if (measure->parsed())
    return castkit::cmd_measure(source, calculus, fuel, std::cout, std::cerr);
  if (calculi.empty())
    calculi = {"eda", "edi", "lambda-b1", "lambda-b2", "edc", "ldc", "lambda-c", "lambda-s",
               "hyper"};
  return castkit::cmd_diff(source, calculi, fuel, std::cout, std::cerr);
}
