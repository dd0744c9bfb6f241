#include "sqf/local.hpp"

namespace sqf::local {
namespace {

Int pow_ui(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Int& ell, long e) {
  if (e >= 0) return Rat(pow_ui(ell, static_cast<unsigned long>(e)));
  return Rat(Int(1), pow_ui(ell, static_cast<unsigned long>(-e)));
}

}  // namespace

Int count_points_Fl(const IntPoly& f, const Int& d, const Int& ell) {
  if (!poly::is_good_prime(f, ell)) throw NotGoodPrime(ell.get_str() + " is not a good prime for f");
  if (arith::mod(d, ell) == 0) throw InvalidInput("count_points_Fl needs l not dividing d");
  if (!mpz_fits_uint_p(ell.get_mpz_t())) throw InvalidInput("count_points_Fl: prime too large");
  const std::uint64_t l = ell.get_ui();
  std::vector<char> is_sq(l, 0);
  for (std::uint64_t y = 1; y < l; ++y) is_sq[y * y % l] = 1;
  std::vector<std::uint64_t> c;
  const std::uint64_t dm = arith::mod(d, ell).get_ui();
  for (const auto& a : f.coeffs()) c.push_back(arith::mod(Int(a * dm), ell).get_ui());
  Int count = 0;
  for (std::uint64_t x = 0; x < l; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = (acc * x + c[i]) % l;
    if (acc == 0) {
      count += 1;
    } else if (is_sq[acc]) {
      count += 2;
    }
  }
  if (f.degree() % 2 == 1) {
    count += 1;
  } else if (is_sq[c.back()]) {
    count += 2;
  }
  return count;
}

std::pair<Int, Int> hensel_lift(const IntPoly& f, const Int& d, const Int& ell, const Int& alpha,
                                const Int& beta, int k) {
  if (k < 1) throw InvalidInput("precision must be positive");
  if (arith::mod(Int(d * beta * beta - f.eval(alpha)), ell) != 0) {
    throw InvalidInput("seed is not a point modulo " + ell.get_str());
  }
  IntPoly df = poly::derivative(f);
  bool lift_y = arith::mod(Int(2 * d * beta), ell) != 0;
  bool lift_x = arith::mod(df.eval(alpha), ell) != 0;
  if (!lift_y && !lift_x) throw SingularSeed("gradient vanishes at the seed modulo " + ell.get_str());
  Int modulus = pow_ui(ell, static_cast<unsigned long>(k));
  Int x = arith::mod(alpha, modulus), y = arith::mod(beta, modulus);
  for (int i = 0; i <= k; ++i) {
    Int residual = d * y * y - f.eval(x);
    if (arith::mod(residual, modulus) == 0) break;
    if (lift_y) {
      y = arith::mod(Int(y - residual * arith::mod_inverse(arith::mod(Int(2 * d * y), modulus), modulus)), modulus);
    } else {
      x = arith::mod(Int(x + residual * arith::mod_inverse(arith::mod(df.eval(x), modulus), modulus)), modulus);
    }
  }
  if (arith::mod(Int(d * y * y - f.eval(x)), modulus) != 0) {
    throw InternalSearchExhausted("Hensel iteration did not converge");
  }
  return {x, y};
}

HenselPoint point_at(const IntPoly& f, const Int& d, const Int& ell, const Rat& x) {
  Rat value = f.eval(x);
  if (value.is_zero()) throw InvalidInput("point_at: f(x) = 0 gives only a trivial point");
  Rat q = value / Rat(d);
  long n = arith::ord_p(q, ell);
  if (n % 2 != 0 || !is_square_in_Ql(q, ell)) {
    throw InvalidInput("point_at: f(x)/d is not a square in Q_" + ell.get_str());
  }
  int k = ell == 2 ? 8 : 6;
  Rat unit = q / rat_pow(ell, n);
  Int w = sqrt_unit_mod_prime_power(unit, ell, k);
  HenselPoint pt{x, rat_pow(ell, n / 2) * Rat(w), k};
  if (!verify_point(f, d, ell, pt)) throw InternalSearchExhausted("constructed local point failed to verify");
  return pt;
}

bool verify_point(const IntPoly& f, const Int& d, const Int& ell, const HenselPoint& pt) {
  if (pt.y.is_zero() || d == 0) return false;
  if (pt.precision < (ell == 2 ? 3 : 1)) return false;
  Rat value = f.eval(pt.x);
  if (value.is_zero()) return false;
  Rat diff = Rat(d) * pt.y * pt.y - value;
  if (diff.is_zero()) return true;
  return arith::ord_p(diff, ell) >= arith::ord_p(value, ell) + pt.precision;
}

}  // namespace sqf::local
