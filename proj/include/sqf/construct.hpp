#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sqf/poly.hpp"

namespace sqf {

/// a x^2 + b y^2 + c z^2 with a, b, c nonzero, squarefree, pairwise coprime
/// and not all of one sign.
struct TernaryForm {
  Int a, b, c;

  /// Throws InvalidInput naming the violated condition.
  void validate() const;
};

/// d = S(f(r)); q is set when d = delta * q for a prime q produced by a
/// prime search.
struct ClassElement {
  Int d;
  Rat r;
  std::optional<Int> q;
};

struct ReducedTarget {
  IntPoly h;
  Int delta;
  Int target;
};

namespace construct {

bool legendre_solvable(const TernaryForm& form);

/// Primitive nontrivial solution, or nullopt when the residue criterion fails.
std::optional<std::array<Int, 3>> legendre_solve(const TernaryForm& form);

/// f = delta s^2 h with h primitive, target = delta^-1 m mod p.
ReducedTarget reduce_A_from_I(const IntPoly& f, const Int& p, const Int& m);

std::vector<ClassElement> gen_degree1(const IntPoly& f, const Int& p, const Int& m, std::size_t k,
                                      std::uint64_t budget = arith::kDefaultPrimeBudget);
std::vector<ClassElement> gen_degree2(const IntPoly& f, const Int& p, const Int& m, std::size_t k,
                                      std::uint64_t budget = arith::kDefaultPrimeBudget);

/// Reserved. These degrees need rank-parity input that this library does not
/// provide; both always throw UnsupportedConditional.
std::vector<ClassElement> gen_degree3(const IntPoly& f, const Int& p, const Int& m, std::size_t k);
std::vector<ClassElement> gen_degree4(const IntPoly& f, const Int& p, const Int& m, std::size_t k);

/// Throws InternalSearchExhausted when e fails any of: d squarefree,
/// d == m (mod p), f(r) != 0, d == S(f(r)).
void certify(const IntPoly& f, const Int& p, const Int& m, const ClassElement& e);

}  // namespace construct
}  // namespace sqf
