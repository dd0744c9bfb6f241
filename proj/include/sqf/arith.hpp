#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sqf/errors.hpp"

namespace sqf {

using Int = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
/// Zero is 0/1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(Int num, Int den);

  /// Accepts "a" or "a/b" with optional leading '-'.
  static Rat parse(std::string_view text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  int sign() const { return sgn(num_); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  std::string to_string() const;

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { return Rat(Int(-num_), den_, raw_tag{}); }
  friend bool operator==(const Rat& a, const Rat& b) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  struct raw_tag {};
  Rat(Int num, Int den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}
  Int num_;
  Int den_;
};

/// Signed prime factorization; primes strictly increasing, exponents >= 1.
struct Factorization {
  int sign = 1;
  std::vector<std::pair<Int, unsigned>> factors;

  Int value() const;
};

/// x == residue (mod modulus) with 0 <= residue < modulus.
struct Congruence {
  Int residue;
  Int modulus;

  Congruence() : residue(0), modulus(1) {}
  Congruence(const Int& r, const Int& m);
};

namespace arith {

Factorization factor(const Int& n);

bool is_prime(const Int& n);
bool is_squarefree(const Int& n);

Int squarefree_part(const Int& n);
Int squarefree_part(const Rat& r);

/// p-adic valuation of a nonzero rational.
long ord_p(const Rat& r, const Int& p);
long ord_p(const Int& n, const Int& p);

Int height(const Rat& r);

/// Kronecker symbol (D/n) for arbitrary integers.
int kronecker(const Int& d, const Int& n);
/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Int& a, const Int& p);
/// Character of Q(sqrt d) for squarefree d != 0, evaluated through the field
/// discriminant.
int chi_d(const Int& d, const Int& n);
Int field_discriminant(const Int& d);

/// Least nonnegative solution of a system with pairwise coprime moduli.
Int crt(std::span<const Congruence> congruences);

inline constexpr std::uint64_t kDefaultPrimeBudget = 1'000'000;

/// The (skip+1)-th prime, in increasing order, satisfying every congruence.
Int prime_in_ap(std::span<const Congruence> congruences, std::uint64_t skip,
                std::uint64_t budget = kDefaultPrimeBudget);

/// Walks N, N+M, N+2M, ... where N is the CRT solution and M the product of the
/// moduli, yielding the primes in that progression one at a time.
class PrimeProgression {
 public:
  PrimeProgression(std::span<const Congruence> congruences,
                   std::uint64_t budget = kDefaultPrimeBudget);
  /// Throws BudgetExhausted once `budget` candidates have been examined.
  Int next();
  std::uint64_t candidates_examined() const { return examined_; }
  const Int& modulus() const { return modulus_; }

 private:
  Int current_;
  Int modulus_;
  std::uint64_t budget_;
  std::uint64_t examined_ = 0;
};

Int mod_inverse(const Int& a, const Int& m);
/// Least nonnegative residue.
Int mod(const Int& a, const Int& m);
Int isqrt(const Int& n);
bool is_perfect_square(const Int& n);

/// Primes p with lo <= p <= hi, by sieve. Intended for hi up to a few 10^7.
std::vector<std::uint64_t> primes_up_to(std::uint64_t hi);
std::uint64_t next_prime_at_least(std::uint64_t n);
Int largest_prime_factor(const Int& n);

}  // namespace arith
}  // namespace sqf
