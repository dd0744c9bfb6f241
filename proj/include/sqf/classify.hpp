#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sqf/poly.hpp"

namespace sqf {

/// A separable f together with the data the local theory needs. Every prime
/// at or above n0 is good for f and large enough for the Hasse-Weil count to
/// force an affine point with nonzero y on each twist.
struct CurveFamily {
  IntPoly f;
  int g = 0;
  Int disc;
  Int lc;
  Int n0;
};

/// (r, d) with d = S(f(r)).
struct ClassWitness {
  Rat r;
  Int d;
};

enum class ZeroClassKind { OddDegreeAlwaysInfinite, EvenDegreeRootExists, EvenDegreeNoRoot };

struct ZeroClassVerdict {
  ZeroClassKind kind;
  std::optional<ClassWitness> witness;
};

const char* to_string(ZeroClassKind kind);

namespace classify {

/// Requires deg f >= 3.
CurveFamily make_family(const IntPoly& f);

/// max(4g^2 + 6g + 4, 3, 1 + largest prime dividing 2 * disc * lc). Defined
/// for every separable f; genus 0 gives the floor 4.
Int compute_n0(const IntPoly& f);

/// Good primes q <= bound at which f has a root, ascending.
std::vector<Int> find_R_f(const IntPoly& f, const Int& bound);
bool in_R_f(const IntPoly& f, const Int& q);

/// n with ord_q(f(n)) odd and positive and q not dividing f'(n).
Int witness_odd_valuation(const IntPoly& f, const Int& q);

/// n with ord_q(f(n)) odd and q not dividing f'(n) for every q in T.
Int witness_multi(const IntPoly& f, std::span<const Int> T);

/// Given n with f(n) != 0 and, for each q in T, q | f(n) and q not dividing
/// f'(n), returns n + v where v is the product of q^(2s-1) over the q with
/// ord_q f(n) = 2s even and q^(r+1) over the q with odd ord_q f(n) = r.
Int valuation_shift(const IntPoly& f, std::span<const Int> T, const Int& n);

inline constexpr std::uint64_t kDefaultRfScanBound = 100'000;

/// k witnesses with pairwise distinct d, each divisible by every prime of T.
/// Fresh primes q in R(f) \ T are tried in ascending order up to scan_bound.
std::vector<ClassWitness> divisible_class_elements(const IntPoly& f, std::span<const Int> T,
                                                   std::size_t k,
                                                   std::uint64_t scan_bound = kDefaultRfScanBound);

ZeroClassVerdict zero_class_decide(const IntPoly& f, const Int& p);

}  // namespace classify
}  // namespace sqf
