#pragma once

#include <cstdint>
#include <vector>

#include "sqf/detail/wide.hpp"
#include "sqf/survey.hpp"

namespace sqf::survey::detail {

using sqf::detail::i128;
using sqf::detail::u128;

// Squarefree parts of f(a/b) along the line of fixed denominator b, for
// every a with |a| <= B coprime to b. Values of F(a, b) = b^n f(a/b) are
// sieved by the primes up to the sieve bound through the roots of f mod p;
// what is left has only large prime factors and is classified by size.
// Roots of f mod every prime up to the sieve bound; read-only once built and
// shared by all workers.
struct SieveTables {
  SieveTables(const IntPoly& f, std::uint64_t B, std::uint64_t sieve_bound);

  IntPoly f;
  std::uint64_t P;
  bool wide = false;
  std::vector<std::int64_t> c;
  std::vector<std::uint32_t> primes;
  std::vector<std::uint32_t> root_offset;
  std::vector<std::uint32_t> roots;
  // Primes dividing lc or the content; tested against every value.
  std::vector<std::uint32_t> special;
};

class ValueSieve {
 public:
  ValueSieve(const SieveTables& tables, std::uint64_t B, bool include_negative);

  // Appends one entry per a with f(a/b) != 0.
  void run_line(std::uint64_t b, std::vector<SEntry>& out, SurveyStats& stats);


  static std::uint64_t default_sieve_bound(const IntPoly& f, std::uint64_t B);

 private:
  void run_line_bignum(std::uint64_t b, std::vector<SEntry>& out, SurveyStats& stats);
  void strip(std::size_t i, std::uint64_t p);

  const SieveTables& t_;
  int n_;
  std::uint64_t B_;
  std::int64_t a_lo_;

  std::vector<u128> value_;
  std::vector<u128> part_;
  std::vector<signed char> sign_;
};

}  // namespace sqf::survey::detail
