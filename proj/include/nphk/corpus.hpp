#pragma once

#include "nphk/polynomial.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace nphk {

// Expected values are exact strings as printed by the reports ("7/4", "inf").
struct CorpusRow {
  std::string phase;
  std::string kind;
  std::optional<std::string> m, n;
  std::string h, h_lin;
  bool linearly_adapted = true;
  std::string kp1;
  bool supplementary = false;  // rows added beside the reference table
};

struct CorpusCheck {
  std::string row;
  std::string field;
  std::string expected, actual;
  bool pass = false;
};

struct CorpusResult {
  std::vector<CorpusCheck> checks;
  std::vector<std::string> rows_run;
  int failures() const;
};

std::vector<CorpusRow> reference_corpus();
std::vector<CorpusRow> supplementary_corpus();
std::vector<CorpusRow> builtin_corpus();

// Runs rows whose expected kind starts with filter (all rows if empty) and,
// without a filter or with filter "identity", the exact NLA identity suite.
CorpusResult run_corpus(const std::vector<CorpusRow>& rows, const std::string& filter = "");

// Invertible map with entries p/q, |p| <= 3, 1 <= q <= 3.
LinearMap2 random_invertible_map(std::mt19937_64& rng);
// Appends checks that kind and (m, n) survive maps_per_row random linear maps.
void run_affine_checks(const std::vector<CorpusRow>& rows, const std::string& filter, std::uint64_t seed,
                       int maps_per_row, CorpusResult& out);

}  // namespace nphk
