#include <algorithm>

#include "sqf/construct.hpp"

namespace sqf::construct {
namespace {

void check_class(const IntPoly& f, const Int& p, const Int& m) {
  if (!poly::is_good_prime(f, p)) throw NotGoodPrime(p.get_str() + " is not a good prime for f");
  if (arith::mod(m, p) == 0) throw InvalidInput("residue m must be coprime to p");
}

}  // namespace

void certify(const IntPoly& f, const Int& p, const Int& m, const ClassElement& e) {
  if (!arith::is_squarefree(e.d)) throw InternalSearchExhausted("certificate: d is not squarefree");
  if (arith::mod(e.d, p) != arith::mod(m, p)) {
    throw InternalSearchExhausted("certificate: d = " + e.d.get_str() + " is in the wrong class");
  }
  Rat value = f.eval(e.r);
  if (value.is_zero()) throw InternalSearchExhausted("certificate: f(r) = 0");
  if (arith::squarefree_part(value) != e.d) {
    throw InternalSearchExhausted("certificate: S(f(r)) differs from d = " + e.d.get_str());
  }
}

ReducedTarget reduce_A_from_I(const IntPoly& f, const Int& p, const Int& m) {
  check_class(f, p, m);
  auto split = poly::content_split(f);
  Int target = arith::mod(Int(m * arith::mod_inverse(arith::mod(split.delta, p), p)), p);
  return {split.h, split.delta, target};
}

std::vector<ClassElement> gen_degree1(const IntPoly& f, const Int& p, const Int& m, std::size_t k,
                                      std::uint64_t budget) {
  if (f.degree() != 1) throw InvalidInput("gen_degree1 needs a polynomial of degree 1");
  auto red = reduce_A_from_I(f, p, m);
  const Int& a = red.h.coeffs()[1];
  const Int& b = red.h.coeffs()[0];
  std::vector<Congruence> system{Congruence(red.target, p)};
  if (abs(a) > 1) system.emplace_back(b, abs(a));
  arith::PrimeProgression stream(system, budget);
  std::vector<ClassElement> out;
  while (out.size() < k) {
    Int q = stream.next();
    if (mpz_divisible_p(red.delta.get_mpz_t(), q.get_mpz_t())) continue;
    Int n = (q - b) / a;
    ClassElement e{red.delta * q, Rat(n), q};
    certify(f, p, m, e);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ClassElement> gen_degree2(const IntPoly& f, const Int& p, const Int& m, std::size_t k,
                                      std::uint64_t budget) {
  if (f.degree() != 2) throw InvalidInput("gen_degree2 needs a polynomial of degree 2");
  if (!poly::is_separable(f)) throw InvalidInput("polynomial is not separable: " + f.to_string());
  check_class(f, p, m);
  // h = delta_lc * f has square leading coefficient a^2.
  Int delta_lc = arith::squarefree_part(f.lc());
  Int a = arith::isqrt(Int(delta_lc * f.lc()));
  Int b = delta_lc * f.coeffs()[1];
  Int c = delta_lc * f.coeffs()[0];
  Int Delta = b * b - 4 * a * a * c;
  if (Delta == 0) throw InvalidInput("quadratic with zero discriminant");
  Int delta = arith::squarefree_part(Delta);
  Int s = arith::isqrt(Int(Delta / delta));
  Int target = arith::mod(Int(m * arith::mod_inverse(arith::mod(delta_lc, p), p)), p);

  std::vector<Congruence> system{Congruence(target, p), Congruence(1, 8 * abs(delta))};
  arith::PrimeProgression stream(system, budget);
  std::vector<ClassElement> out;
  while (out.size() < k) {
    Int q = stream.next();
    if (mpz_divisible_p(delta_lc.get_mpz_t(), q.get_mpz_t())) continue;
    // (X, Y) with X^2 - delta Y^2 = q.
    Rat X, Y;
    if (delta == 1) {
      X = Rat(Int(q + 1), Int(2));
      Y = Rat(Int(q - 1), Int(2));
    } else {
      auto sol = legendre_solve(TernaryForm{1, Int(-delta), Int(-q)});
      if (!sol || (*sol)[2] == 0) {
        throw InternalSearchExhausted("no representation of q = " + q.get_str() + " by x^2 - " +
                                      delta.get_str() + " y^2");
      }
      X = Rat((*sol)[0], (*sol)[2]);
      Y = Rat((*sol)[1], (*sol)[2]);
    }
    // Invert X = a x + (b / 2a) y, Y = (s / 2a) y.
    Rat y = Rat(Int(2 * a), s) * Y;
    Rat x = (X - Rat(b, Int(2 * a)) * y) / Rat(a);
    ClassElement e{delta_lc * q, x / y, q};
    certify(f, p, m, e);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ClassElement> gen_degree3(const IntPoly&, const Int&, const Int&, std::size_t) {
  throw UnsupportedConditional(
      "degree 3 class elements depend on the rank parity conjecture for elliptic curves; not provided");
}

std::vector<ClassElement> gen_degree4(const IntPoly&, const Int&, const Int&, std::size_t) {
  throw UnsupportedConditional(
      "degree 4 class elements depend on the rank parity conjecture for elliptic curves; not provided");
}

}  // namespace sqf::construct
