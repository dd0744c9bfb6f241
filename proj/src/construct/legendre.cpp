#include <algorithm>

#include "sqf/construct.hpp"

namespace sqf {

void TernaryForm::validate() const {
  for (const Int* v : {&a, &b, &c}) {
    if (*v == 0) throw InvalidInput("ternary form: coefficients must be nonzero");
    if (!arith::is_squarefree(*v)) throw InvalidInput("ternary form: " + v->get_str() + " is not squarefree");
  }
  if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1) {
    throw InvalidInput("ternary form: coefficients are not pairwise coprime");
  }
  int sa = sgn(a), sb = sgn(b), sc = sgn(c);
  if (sa == sb && sb == sc) throw InvalidInput("ternary form: coefficients all have the same sign");
}

namespace construct {
namespace {

// x is a square modulo the squarefree modulus n (x coprime to n).
bool square_mod_squarefree(const Int& x, const Int& n) {
  Int m = abs(n);
  if (m == 1) return true;
  for (const auto& [ell, e] : arith::factor(m).factors) {
    if (ell == 2) continue;
    if (arith::legendre(x, ell) == -1) return false;
  }
  return true;
}

}  // namespace

bool legendre_solvable(const TernaryForm& form) {
  form.validate();
  const auto& [a, b, c] = form;
  return square_mod_squarefree(Int(-b * c), a) && square_mod_squarefree(Int(-a * c), b) &&
         square_mod_squarefree(Int(-a * b), c);
}

std::optional<std::array<Int, 3>> legendre_solve(const TernaryForm& form) {
  if (!legendre_solvable(form)) return std::nullopt;
  std::array<Int, 3> coef = {form.a, form.b, form.c};
  std::array<Int, 3> bound = {arith::isqrt(abs(Int(form.b * form.c))),
                              arith::isqrt(abs(Int(form.a * form.c))),
                              arith::isqrt(abs(Int(form.a * form.b)))};
  // Loop over the two variables with the smaller bounds and solve for the third.
  std::size_t k = static_cast<std::size_t>(std::max_element(bound.begin(), bound.end()) - bound.begin());
  std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
  for (Int u = 0; u <= bound[i]; ++u) {
    for (Int v = 0; v <= bound[j]; ++v) {
      if (u == 0 && v == 0) continue;
      Int rhs = -(coef[i] * u * u + coef[j] * v * v);
      if (!mpz_divisible_p(rhs.get_mpz_t(), coef[k].get_mpz_t())) continue;
      Int w2 = rhs / coef[k];
      if (w2 < 0 || !arith::is_perfect_square(w2)) continue;
      std::array<Int, 3> sol;
      sol[i] = u;
      sol[j] = v;
      sol[k] = arith::isqrt(w2);
      Int g = gcd(gcd(sol[0], sol[1]), sol[2]);
      for (auto& s : sol) s /= g;
      return sol;
    }
  }
  throw InternalSearchExhausted("Legendre criterion holds but no solution within the Holzer bounds");
}

}  // namespace construct
}  // namespace sqf
