#pragma once

#include "unicell/enumerate.hpp"
#include "unicell/verdict.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace unicell::cli {

struct Context {
  int threads = 1;
  std::optional<std::filesystem::path> cache_dir;
};

struct FamilySpec {
  std::string name;
  std::vector<std::string> keys;
  int min_bound;
  int max_bound;
  std::string bound_meaning;
};

struct CheckSpec {
  std::string name;
  int default_bound;
  int min_bound;
  int max_bound;
  std::string bound_meaning;
};

const std::vector<FamilySpec>& census_families();
const std::vector<CheckSpec>& verification_checks();

// Throws std::out_of_range for an unknown family or a bound outside its limits.
CountTable census_table(const std::string& family, int bound, const Context& ctx);
PlanarCensus cached_planar_census(int max_edges, const Context& ctx);

Verdict run_check(const std::string& name, int bound, const Context& ctx);

// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unicell::cli
