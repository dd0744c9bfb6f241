#include "sqf/local.hpp"

namespace sqf::local {
namespace {

Int pow_ui(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Int powm(const Int& b, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Unit part of x at ell as a residue mod ell^k.
Int unit_residue(const Rat& u, const Int& modulus) {
  return arith::mod(Int(u.num() * arith::mod_inverse(arith::mod(u.den(), modulus), modulus)), modulus);
}

}  // namespace

bool is_square_in_Ql(const Rat& x, const Int& ell) {
  if (x.is_zero()) throw InvalidInput("is_square_in_Ql: zero has no square class");
  long n = arith::ord_p(x, ell);
  if (n % 2 != 0) return false;
  Int a = x.num(), b = x.den();
  mpz_remove(a.get_mpz_t(), a.get_mpz_t(), ell.get_mpz_t());
  mpz_remove(b.get_mpz_t(), b.get_mpz_t(), ell.get_mpz_t());
  Int u = a * b;  // same square class as a / b
  if (ell == 2) return arith::mod(u, 8) == 1;
  return arith::legendre(u, ell) == 1;
}

Int sqrt_mod_prime(const Int& a_in, const Int& p) {
  Int a = arith::mod(a_in, p);
  if (a == 0 || p == 2) return a;
  if (powm(a, Int((p - 1) / 2), p) != 1) throw InvalidInput(a.get_str() + " is not a square modulo " + p.get_str());
  if (arith::mod(p, 4) == 3) return powm(a, Int((p + 1) / 4), p);
  Int q = p - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  q >>= s;
  Int z = 2;
  while (arith::legendre(z, p) != -1) ++z;
  Int c = powm(z, q, p);
  Int x = powm(a, Int((q + 1) / 2), p);
  Int t = powm(a, q, p);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Int tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Int b = powm(c, pow_ui(Int(2), m - i - 1), p);
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return x;
}

Int sqrt_unit_mod_prime_power(const Rat& u, const Int& ell, int k) {
  if (k < 1) throw InvalidInput("precision must be positive");
  Int modulus = pow_ui(ell, static_cast<unsigned long>(k));
  Int uu = unit_residue(u, modulus);
  if (ell == 2) {
    if (k >= 3 && arith::mod(uu, 8) != 1) throw InvalidInput("2-adic unit is not 1 mod 8");
    Int w = 1;
    for (int j = 3; j < k; ++j) {
      Int m = pow_ui(Int(2), static_cast<unsigned long>(j + 1));
      if (arith::mod(Int(w * w - uu), m) != 0) w += pow_ui(Int(2), static_cast<unsigned long>(j - 1));
    }
    return arith::mod(w, modulus);
  }
  Int w = sqrt_mod_prime(uu, ell);
  if (w == 0) throw InvalidInput("not a unit");
  for (int i = 0; i < k + 1; ++i) {
    Int step = arith::mod(Int((w * w - uu) * arith::mod_inverse(arith::mod(Int(2 * w), modulus), modulus)), modulus);
    w = arith::mod(Int(w - step), modulus);
  }
  return w;
}

}  // namespace sqf::local
