#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mlc/rational.hpp"

namespace mlc {

struct Config {
  int max_flats = 4096;
  int max_ground = 20;
  std::uint64_t coloring_budget = 10'000'000;
  std::uint64_t seed = 0;
  std::vector<Rational> eps;
  bool json = false;
};

// args excludes the program name.  Returns 0 on pass, 2 on a failed check,
// 1 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlc
