#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqf/classify.hpp"

namespace sqf {

struct SurveyConfig {
  IntPoly f{1};
  std::uint64_t height = 1;       // B
  std::uint64_t prime_bound = 3;  // n
  bool include_negative_r = true;
  /// 0: take SQF_THREADS from the environment, else 1.
  unsigned threads = 0;
  /// Trial-division sieve limit for polynomial values; 0 picks one from B.
  std::uint64_t sieve_bound = 0;
  /// Witnesses kept in reports; 0 keeps every element.
  std::size_t witness_sample = 1000;

  /// Throws InvalidInput on B < 1, n < 3 or an inseparable f.
  void validate() const;
};

/// A squarefree value together with a rational of least height producing it.
struct SEntry {
  Int d;
  std::int64_t a = 0;
  std::uint64_t b = 1;

  std::uint64_t height() const;
  Rat r() const;
};

/// Deterministic counters; they depend only on the config, not on threading.
struct SurveyStats {
  std::uint64_t rationals = 0;
  std::uint64_t zero_values = 0;
  std::uint64_t sieved_completely = 0;
  std::uint64_t prime_cofactors = 0;
  std::uint64_t square_cofactors = 0;
  std::uint64_t semiprime_cofactors = 0;
  std::uint64_t rho_factorizations = 0;
  std::uint64_t bignum_values = 0;
  std::uint64_t sieve_bound = 0;
};

struct SurveyResult {
  /// Sorted by d; each d once, with its least-height witness.
  std::vector<SEntry> entries;
  SurveyStats stats;
  double seconds = 0;

  std::vector<Int> s_tilde() const;
};

struct CoverageReport {
  SurveyConfig config;
  std::map<std::uint64_t, std::vector<std::uint64_t>> coverage;
  std::vector<std::uint64_t> exceptional;
  std::size_t s_tilde_size = 0;
  SurveyStats stats;
  std::vector<SEntry> witnesses;
  double seconds = 0;
};

struct CountSeries {
  Int p;
  Int m;
  std::uint64_t height = 0;
  std::vector<std::uint64_t> thresholds;
  /// #{d in S(f, t) : d == m mod p}; empty for t above the height bound.
  std::vector<std::optional<std::uint64_t>> e_counts;
  /// #{d in S~(f) : |d| <= t, d == m mod p}; a lower bound for D(t).
  std::vector<std::uint64_t> d_tilde_counts;
};

inline constexpr int kReportSchemaVersion = 1;
/// Published size of the degree 4..9, |coeff| <= 3 family.
inline constexpr std::uint64_t kReferenceFamilySize = 17'896;

struct FamilyScanConfig {
  int degree_lo = 4;
  int degree_hi = 9;
  std::int64_t coeff_bound = 3;
  std::uint64_t height = 400;
  std::uint64_t prime_bound = 1000;
  bool include_negative_r = true;
  unsigned threads = 0;
  /// 0 scans every member; otherwise a seeded sample of this many members.
  std::size_t sample = 0;
  std::uint64_t seed = 1;
  /// Count members and separability without scanning.
  bool count_only = false;
};

struct FamilyCounts {
  std::uint64_t enumerated = 0;  // every coefficient vector with lc != 0
  std::uint64_t negative_lc = 0;  // canonicalized away (f and -f share S(f) up to sign)
  std::uint64_t inseparable = 0;  // skipped, among lc > 0
  std::uint64_t separable = 0;    // lc > 0 and separable
};

struct FamilyMember {
  IntPoly f;
  std::vector<std::uint64_t> exceptional;
  std::size_t s_tilde_size = 0;
};

struct FamilyReport {
  FamilyScanConfig config;
  std::optional<FamilyCounts> counts;
  std::vector<FamilyMember> members;
  std::optional<std::uint64_t> max_exceptional;
  double seconds = 0;
};

namespace survey {

unsigned resolve_threads(unsigned requested);

/// Every rational of height <= B once, ordered by denominator then numerator.
std::vector<Rat> enumerate_heights(std::uint64_t B, bool include_negative = true);
void for_each_height(std::uint64_t B, bool include_negative,
                     const std::function<void(std::int64_t a, std::uint64_t b)>& fn);

SurveyResult s_tilde(const SurveyConfig& config);

/// Residues mod p attained by the set, ascending.
std::vector<std::uint64_t> coverage(const std::vector<Int>& s_set, std::uint64_t p);

CoverageReport exceptional_primes(const SurveyConfig& config);
CoverageReport coverage_report(const SurveyConfig& config, const SurveyResult& result);

CountSeries count_series(const IntPoly& f, const Int& p, const Int& m,
                         const std::vector<std::uint64_t>& thresholds, std::uint64_t B,
                         unsigned threads = 0);

/// Members of the family with lc > 0, in lexicographic index order.
std::uint64_t family_size_with_positive_lc(int lo, int hi, std::int64_t c);
FamilyCounts family_counts(int lo, int hi, std::int64_t c);
/// Degree uniform in [lo, hi], then coefficients uniform with lc in [1, c];
/// inseparable draws and repeats are rejected.
std::vector<IntPoly> family_sample(int lo, int hi, std::int64_t c, std::size_t count, std::uint64_t seed);
FamilyReport family_scan(const FamilyScanConfig& config);

}  // namespace survey
}  // namespace sqf
