#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace reasm::verify {

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  std::uint64_t seed = 1;
  int max_n = 6; // exhaustive suites cover connected graphs on 1..max_n vertices
};

const std::vector<std::string>& suite_names();

/// Throws ValidationError for an unknown suite name.
std::vector<Check> run_suite(std::string_view name, const Options& opts = {});

} // namespace reasm::verify
