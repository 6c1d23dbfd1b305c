#pragma once

// Tabulated reference data for maximal parabolics and their gradings,
// transcribed as published.  Where published entries contradict each other
// the row carries the published value together with a note; the checks in
// `verify_*` compare computed values against the published ones.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace exlie {

struct MaxParabolicRow {
  std::string form;
  int j = 0;                 // maximal-parabolic index
  std::string levi;          // semisimple Levi factors as tabulated ("+"-joined)
  int abelian_rank = 0;      // abelian summands tabulated next to the factors
  int dim_n = 0;
  std::optional<std::pair<int, int>> long_short;  // (long, short) where tabulated
};
const std::vector<MaxParabolicRow>& max_parabolic_table();

struct GradingRow {
  std::string form;
  std::string tabulated_index;   // index as printed next to the grading ("1", "L", ...)
  int j = 0;                     // maximal-parabolic index the displayed data belongs to
  int stated_grading = 0;        // announced (2 depth + 1)-grading
  std::map<int, int> displayed;  // k >= 1 -> dim g^k as displayed
  std::string note;              // transcription remarks (empty if none)
};
const std::vector<GradingRow>& grading_table();

}  // namespace exlie
