#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tribo/sequence.hpp"

namespace tribo {

inline constexpr std::array<std::string_view, 11> kCategoryNames = {
    "recurrence", "eq9",      "p2-sum",    "p3-oct-sum", "table2", "table3",
    "table4-p5",  "binet-v", "binet-oct", "p4-norm",    "p6-quad"};

/// Categories compared with exact equality; the rest use relative tolerances.
bool is_exact_category(std::string_view name);

std::map<std::string, double> default_tolerances();

struct CategoryResult {
  std::size_t run = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;

  void record(bool ok, double abs_residual = 0.0, double rel_residual = 0.0);
  /// Associative and commutative.
  void merge(const CategoryResult& other);

  friend bool operator==(const CategoryResult&, const CategoryResult&) = default;
};

// Published tables, encoded so the suite can compare against them and so tests
// can tamper with them.

/// Generating-function numerators: printed[slot][power].
struct Table2Row {
  Preset preset;
  std::array<std::array<long, 3>, 8> printed;
};

/// A printed Table 2 coefficient known to disagree with exact computation.
struct Table2Erratum {
  Preset preset;
  int slot;
  int power;
  long printed;
  long computed;
};

/// Summation row: (sum_k coeff_k O_{n + shift_k} - subtracted) / divisor.
struct Table3Row {
  Preset preset;
  long divisor;
  std::vector<std::pair<long, int>> terms;  ///< (coefficient, shift)
  std::array<long, 8> subtracted;
};

/// Shift row: O_{n+m} = c2 O_{n+2} + c1 O_{n+1} + c0 O_n where each c is
/// sum_k coeff_k U_{m + offset_k}.
struct Table4Row {
  Preset preset;
  std::array<std::vector<std::pair<long, int>>, 3> coefficients;  ///< for O_{n+2}, O_{n+1}, O_n
};

struct PublishedTables {
  std::vector<Table2Row> table2;
  std::vector<Table2Erratum> table2_errata;
  std::vector<Table3Row> table3;
  std::vector<Table4Row> table4;
};

PublishedTables published_tables();

/// Upper n for each root-based category (clamped to n_max).
struct NumericWindows {
  std::size_t binet = 40;
  std::size_t quad = 30;
  std::size_t norm = 25;
};

struct SuiteConfig {
  std::vector<Preset> presets;
  std::vector<RecurrenceParams> extra_params;
  /// Randomized integer parameter sets; they feed the exact categories only.
  std::size_t random_sets = 0;
  std::uint64_t seed = 1;
  std::size_t n_max = 40;
  std::size_t m_max = 20;
  std::map<std::string, double> tolerances = default_tolerances();
  NumericWindows windows;
  PublishedTables tables = published_tables();
  unsigned threads = 1;

  /// Throws DomainError on n_max < 3, m_max < 3 or a non-positive tolerance.
  void validate() const;
};

struct VerificationReport {
  std::map<std::string, CategoryResult> categories;
  std::vector<std::string> errata;
  std::uint64_t seed = 0;
  std::size_t printed_sign_checks = 0;
  std::size_t printed_sign_counterexamples = 0;

  bool passed() const;
  std::string to_json() const;
  std::string to_text() const;
};

struct RandomParamsOptions {
  long coefficient_bound = 5;  ///< r, s, t in [-bound, bound]
  long initial_bound = 3;      ///< V0, V1, V2 in [-bound, bound]
  bool require_nonzero_delta = false;
};

/// Deterministic integer parameter sets drawn from a seeded mt19937_64.
std::vector<RecurrenceParams> random_params(std::uint64_t seed, std::size_t count,
                                            RandomParamsOptions options = {});

VerificationReport run_suite(const SuiteConfig& config);

}  // namespace tribo
