#include "sqf/arith.hpp"

namespace sqf::arith {

// Kronecker symbol via the binary algorithm (Cohen, Alg. 1.4.10).
int kronecker(const Int& d, const Int& n) {
  Int a = d, b = n;
  if (b == 0) return abs(a) == 1 ? 1 : 0;
  if (mpz_even_p(a.get_mpz_t()) && mpz_even_p(b.get_mpz_t())) return 0;

  // (a/2) = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
  auto two_char = [](const Int& x) {
    unsigned long r = mpz_fdiv_ui(x.get_mpz_t(), 8);
    return (r == 1 || r == 7) ? 1 : -1;
  };

  unsigned long v = mpz_scan1(b.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(b.get_mpz_t(), b.get_mpz_t(), v);
  int k = (v % 2 == 0) ? 1 : two_char(a);
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  // b is odd and positive.
  while (true) {
    if (a == 0) return b == 1 ? k : 0;
    v = mpz_scan1(a.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), v);
    if (v % 2 == 1) k *= two_char(b);
    // Reciprocity for a (odd, any sign) and b (odd, positive).
    unsigned long am4 = mpz_fdiv_ui(a.get_mpz_t(), 4);
    unsigned long bm4 = mpz_fdiv_ui(b.get_mpz_t(), 4);
    if (am4 == 3 && bm4 == 3) k = -k;
    Int r = abs(a);
    a = mod(b, r);
    b = r;
  }
}

int legendre(const Int& a, const Int& p) { return kronecker(a, p); }

Int field_discriminant(const Int& d) {
  if (mpz_fdiv_ui(d.get_mpz_t(), 4) == 1) return d;
  return 4 * d;
}

int chi_d(const Int& d, const Int& n) {
  if (d == 0 || !is_squarefree(d)) {
    throw InvalidInput("chi_d needs a nonzero squarefree d, got " + d.get_str());
  }
  return kronecker(field_discriminant(d), n);
}

}  // namespace sqf::arith
