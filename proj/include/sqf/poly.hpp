#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sqf/arith.hpp"

namespace sqf {

/// Integer polynomial with ascending coefficients (index i holds the
/// coefficient of x^i) and a nonzero leading coefficient.
class IntPoly {
 public:
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  /// Comma-separated ascending coefficients, e.g. "1,4,10,10,5,2,1".
  static IntPoly parse(std::string_view text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  /// Coefficient of x^i; zero beyond the degree.
  Int coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : Int(0); }
  const Int& lc() const { return c_.back(); }

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  std::string to_csv() const;
  std::string to_string() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::vector<Int> c_;
};

/// Homogeneous form F(x, y) = y^n f(x/y); coeffs[i] multiplies x^i y^(n-i).
struct BiForm {
  std::vector<Int> coeffs;
  int n = 0;

  Int eval(const Int& x, const Int& y) const;
};

namespace poly {

Rat eval_rat(const IntPoly& f, const Rat& r);
IntPoly derivative(const IntPoly& f);

/// Resultant by the subresultant pseudo-remainder sequence.
Int resultant(const std::vector<Int>& a, const std::vector<Int>& b);
Int discriminant(const IntPoly& f);
bool is_separable(const IntPoly& f);

Int content(const IntPoly& f);

struct ContentSplit {
  Int delta;  // squarefree, carries the sign of the content
  Int s;      // positive
  IntPoly h;  // primitive
};
/// f = delta * s^2 * h.
ContentSplit content_split(const IntPoly& f);

/// x^n f(1/x); needs n >= deg f.
IntPoly reverse(const IntPoly& f, int n);
BiForm homogenize(const IntPoly& f, int n);
/// g(x) = f(x + v).
IntPoly taylor_shift(const IntPoly& f, const Int& v);

/// Coefficientwise reduction, trailing zeros removed (empty for f == 0 mod p).
std::vector<Int> reduce_mod_p(const IntPoly& f, const Int& p);

/// Roots in F_p by exhaustive scan. Sorted. p must fit in 32 bits.
std::vector<Int> roots_mod_p(const IntPoly& f, const Int& p);

/// Roots in F_p by distinct-degree and equal-degree splitting; any prime size.
/// Sorted. Throws InvalidInput when f vanishes identically mod p.
std::vector<Int> roots_mod_prime(const IntPoly& f, const Int& p);
bool has_root_mod_prime(const IntPoly& f, const Int& p);
/// Word-size variant used by the survey sieve (p < 2^32). When f vanishes
/// identically mod p, `*all` is set (if given) and the result is empty.
std::vector<std::uint32_t> roots_mod_small_prime(const std::vector<std::int64_t>& coeffs,
                                                 std::uint32_t p, bool* all = nullptr);

int genus(const IntPoly& f);
bool is_good_prime(const IntPoly& f, const Int& p);

}  // namespace poly
}  // namespace sqf
