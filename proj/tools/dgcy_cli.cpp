#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dgcy/dgcy.h"

int main(int argc, char** argv) {
  CLI::App app{"dgcy: Koszul, smoothness, Gorenstein and Calabi-Yau tests for connected cochain DG algebras"};
  std::string command, input, format = "json", out;
  int max_degree = 8;
  std::uint64_t seed = 0;
  app.add_option("command", command, "cohomology | resolve | ext | frobenius | classify")
      ->required()
      ->check(CLI::IsMember({"cohomology", "resolve", "ext", "frobenius", "classify"}));
  app.add_option("input", input, "input document (JSON)")->required();
  app.add_option("--max-degree", max_degree, "degree cutoff")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_option("--seed", seed, "seed for the randomized determinant fallback");
  app.set_version_flag("--version", std::string(dgcy_version()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return DGCY_INPUT_ERROR;
  }

  dgcy_session* s = dgcy_session_new();
  if (!s) {
    std::cerr << "error: cannot allocate session\n";
    return DGCY_INTERNAL_ERROR;
  }
  dgcy_options opts;
  dgcy_options_init(&opts);
  opts.max_degree = max_degree;
  opts.format = format == "text" ? DGCY_FORMAT_TEXT : DGCY_FORMAT_JSON;
  opts.seed = seed;

  dgcy_status st = dgcy_load_file(s, input.c_str());
  if (st == DGCY_OK) st = dgcy_run(s, command.c_str(), &opts);
  if (st != DGCY_OK) {
    std::cerr << "error: " << dgcy_last_error_kind(s) << ": " << dgcy_last_error(s) << "\n";
    dgcy_session_free(s);
    return st;
  }
  if (out.empty()) {
    std::cout << dgcy_last_output(s);
  } else {
    std::ofstream f(out, std::ios::binary);
    f << dgcy_last_output(s);
    if (!f) {
      std::cerr << "error: cannot write '" << out << "'\n";
      dgcy_session_free(s);
      return DGCY_INPUT_ERROR;
    }
  }
  dgcy_session_free(s);
  return DGCY_OK;
}
