#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dgcy/document.hpp"

namespace dgcy {

enum class OutputFormat { Json, Text };

struct RunOptions {
  int max_degree = 8;
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = 0;
};

const std::vector<std::string>& command_names();

// Runs cohomology, resolve, ext, frobenius or classify and renders the report.
// Errors propagate as dgcy::Error.
std::string run_command(const std::string& command, const InputDocument& doc, const RunOptions& opts = {});

}  // namespace dgcy
