#pragma once

// Verification suites: golden transcriptions plus exhaustive and randomized
// checks of the identities implemented by the library.

#include <cstdint>
#include <string>
#include <vector>

#include "gtutte/io.hpp"

namespace gtutte {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = {});
  bool ok() const;
  std::size_t failures() const;
};

struct SuiteOptions {
  int max_n = -1;  // -1 picks the suite's own default
  std::uint64_t seed = 20240601;
  int samples = -1;
  std::string data_dir;  // empty picks default_data_dir()
};

/// GTUTTE_DATA_DIR from the environment, else the compiled-in path.
std::string default_data_dir();

/// appendix53, gmatrix42, gamma53, dims, specialization, kernel, routes,
/// relations, brylawski, curve, relaxation, girth.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// unknown names.
Report run_suite(const std::string& name, const SuiteOptions& opts = {});

Json to_json(const Report& report);

}  // namespace gtutte
