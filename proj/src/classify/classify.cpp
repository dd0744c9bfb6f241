#include <algorithm>

#include "sqf/classify.hpp"

namespace sqf {

const char* to_string(ZeroClassKind kind) {
  switch (kind) {
    case ZeroClassKind::OddDegreeAlwaysInfinite:
      return "OddDegreeAlwaysInfinite";
    case ZeroClassKind::EvenDegreeRootExists:
      return "EvenDegreeRootExists";
    case ZeroClassKind::EvenDegreeNoRoot:
      return "EvenDegreeNoRoot";
  }
  return "?";
}

namespace classify {
namespace {

bool divides(const Int& p, const Int& n) { return mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0; }

Int power(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

bool good_with(const Int& disc, const Int& lc, const Int& q) {
  return q != 2 && arith::is_prime(q) && !divides(q, lc) && !divides(q, disc);
}

std::vector<Int> normalized(std::span<const Int> T) {
  std::vector<Int> v(T.begin(), T.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool meets_postcondition(const IntPoly& f, const IntPoly& df, const std::vector<Int>& T,
                         const Int& n) {
  Int v = f.eval(n);
  if (v == 0) return false;
  Int dv = df.eval(n);
  for (const auto& q : T) {
    if (arith::ord_p(v, q) % 2 == 0 || divides(q, dv)) return false;
  }
  return true;
}

}  // namespace

Int compute_n0(const IntPoly& f) {
  if (f.degree() < 1) throw InvalidInput("n0 needs a nonconstant polynomial");
  Int disc = poly::discriminant(f);
  if (disc == 0) throw InvalidInput("polynomial is not separable: " + f.to_string());
  long g = poly::genus(f);
  Int n0 = std::max<long>(4 * g * g + 6 * g + 4, 3);
  Int big = arith::largest_prime_factor(Int(2 * disc * f.lc())) + 1;
  return std::max(n0, big);
}

CurveFamily make_family(const IntPoly& f) {
  if (f.degree() < 3) throw InvalidInput("curve family needs degree at least 3");
  CurveFamily fam{f, poly::genus(f), poly::discriminant(f), f.lc(), 0};
  if (fam.disc == 0) throw InvalidInput("polynomial is not separable: " + f.to_string());
  fam.n0 = compute_n0(f);
  return fam;
}

std::vector<Int> find_R_f(const IntPoly& f, const Int& bound) {
  Int disc = poly::discriminant(f);
  if (disc == 0) throw InvalidInput("polynomial is not separable: " + f.to_string());
  std::vector<Int> out;
  if (bound < 3) return out;
  if (!mpz_fits_ulong_p(bound.get_mpz_t())) throw InvalidInput("R(f) scan bound too large");
  for (auto p : arith::primes_up_to(bound.get_ui())) {
    Int q(static_cast<unsigned long>(p));
    if (!good_with(disc, f.lc(), q)) continue;
    if (poly::has_root_mod_prime(f, q)) out.push_back(q);
  }
  return out;
}

bool in_R_f(const IntPoly& f, const Int& q) {
  return poly::is_good_prime(f, q) && poly::has_root_mod_prime(f, q);
}

Int valuation_shift(const IntPoly& f, std::span<const Int> T, const Int& n) {
  Int value = f.eval(n);
  if (value == 0) throw InvalidInput("valuation shift needs f(n) != 0");
  Int v = 1;
  for (const auto& q : T) {
    long e = arith::ord_p(value, q);
    if (e == 0) throw InvalidInput("valuation shift needs q | f(n) for q = " + q.get_str());
    if (e % 2 == 0) {
      v *= power(q, static_cast<unsigned long>(e - 1));
    } else {
      v *= power(q, static_cast<unsigned long>(e + 1));
    }
  }
  return n + v;
}

Int witness_multi(const IntPoly& f, std::span<const Int> T_in) {
  auto T = normalized(T_in);
  Int disc = poly::discriminant(f);
  if (disc == 0) throw InvalidInput("polynomial is not separable: " + f.to_string());
  IntPoly df = poly::derivative(f);
  if (T.empty()) {
    for (Int n = 0;; ++n) {
      if (f.eval(n) != 0) return n;
    }
  }

  std::vector<std::vector<Int>> roots;
  std::vector<long> caps;
  for (const auto& q : T) {
    if (!good_with(disc, f.lc(), q)) throw NotInRf("prime " + q.get_str() + " is not good for f");
    auto r = poly::roots_mod_prime(f, q);
    if (r.empty()) throw NotInRf("f has no root modulo " + q.get_str());
    roots.push_back(std::move(r));
    caps.push_back(2 * arith::ord_p(disc, q) + 4);
  }

  Int t = 1;
  for (const auto& q : T) t *= q;
  const int tries_per_combo = f.degree() + 8;
  std::optional<Int> fallback;

  std::vector<std::size_t> pick(T.size(), 0);
  while (true) {
    std::vector<Congruence> system;
    for (std::size_t i = 0; i < T.size(); ++i) system.emplace_back(roots[i][pick[i]], T[i]);
    Int base = arith::crt(system);
    for (int j = 0; j < tries_per_combo; ++j) {
      Int n = base + t * j;
      Int value = f.eval(n);
      if (value == 0) continue;
      if (!fallback) fallback = n;
      bool within = true;
      for (std::size_t i = 0; i < T.size() && within; ++i) {
        within = arith::ord_p(value, T[i]) <= caps[i];
      }
      if (!within) continue;
      Int shifted = meets_postcondition(f, df, T, n) ? n : valuation_shift(f, T, n);
      if (meets_postcondition(f, df, T, shifted)) return shifted;
    }
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == roots[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  if (fallback) {
    Int shifted = valuation_shift(f, T, *fallback);
    if (meets_postcondition(f, df, T, shifted)) return shifted;
  }
  throw InternalSearchExhausted("odd-valuation witness construction failed to verify");
}

Int witness_odd_valuation(const IntPoly& f, const Int& q) {
  Int T[] = {q};
  return witness_multi(f, T);
}

std::vector<ClassWitness> divisible_class_elements(const IntPoly& f, std::span<const Int> T_in,
                                                   std::size_t k, std::uint64_t scan_bound) {
  auto T = normalized(T_in);
  Int disc = poly::discriminant(f);
  if (disc == 0) throw InvalidInput("polynomial is not separable: " + f.to_string());
  for (const auto& q : T) {
    if (!good_with(disc, f.lc(), q)) throw NotInRf("prime " + q.get_str() + " is not good for f");
    if (!poly::has_root_mod_prime(f, q)) throw NotInRf("f has no root modulo " + q.get_str());
  }
  std::vector<ClassWitness> out;
  if (k == 0) return out;
  for (auto p : arith::primes_up_to(scan_bound)) {
    Int q(static_cast<unsigned long>(p));
    if (std::binary_search(T.begin(), T.end(), q)) continue;
    if (!good_with(disc, f.lc(), q) || !poly::has_root_mod_prime(f, q)) continue;
    auto Tq = T;
    Tq.push_back(q);
    Int n = witness_multi(f, Tq);
    Int d = arith::squarefree_part(f.eval(n));
    bool fresh = std::none_of(out.begin(), out.end(), [&](const ClassWitness& w) { return w.d == d; });
    if (fresh) out.push_back({Rat(n), d});
    if (out.size() == k) return out;
  }
  throw BudgetExhausted("found " + std::to_string(out.size()) + " of " + std::to_string(k) +
                        " elements before the R(f) scan bound " + std::to_string(scan_bound));
}

ZeroClassVerdict zero_class_decide(const IntPoly& f, const Int& p) {
  if (!poly::is_good_prime(f, p)) throw NotGoodPrime(p.get_str() + " is not a good prime for f");
  if (f.degree() % 2 == 1) {
    Int pn = p;
    for (unsigned long n = 1;; n += 2) {
      Rat r(Int(1), pn);
      Rat value = f.eval(r);
      if (!value.is_zero()) {
        Int d = arith::squarefree_part(value);
        return {ZeroClassKind::OddDegreeAlwaysInfinite, ClassWitness{r, d}};
      }
      pn *= p * p;
    }
  }
  if (!poly::has_root_mod_prime(f, p)) return {ZeroClassKind::EvenDegreeNoRoot, std::nullopt};
  Int T[] = {p};
  auto w = divisible_class_elements(f, T, 1);
  return {ZeroClassKind::EvenDegreeRootExists, w.front()};
}

}  // namespace classify
}  // namespace sqf
