// Root finding over F_p: gcd with x^p - x isolates the product of the distinct
// linear factors, then Cantor-Zassenhaus splitting with shifts x + c for
// c = 0, 1, 2, ... separates them. The shift sequence is fixed, so results are
// deterministic.

#include <algorithm>
#include <cstdint>

#include "sqf/poly.hpp"

namespace sqf::poly {
namespace {

struct SmallField {
  using E = std::uint64_t;
  std::uint64_t p;

  E add(E a, E b) const { return (a + b) % p; }
  E sub(E a, E b) const { return (a + p - b) % p; }
  E mul(E a, E b) const { return (a * b) % p; }
  E neg(E a) const { return a ? p - a : 0; }
  E inv(E a) const {
    E r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  E from_ui(unsigned long v) const { return v % p; }
  bool is_zero(E a) const { return a == 0; }
  Int exponent() const { return Int(static_cast<unsigned long>(p)); }
};

struct BigField {
  using E = Int;
  Int p;

  E add(const E& a, const E& b) const { return norm(a + b); }
  E sub(const E& a, const E& b) const { return norm(a - b); }
  E mul(const E& a, const E& b) const { return norm(a * b); }
  E neg(const E& a) const { return a == 0 ? Int(0) : Int(p - a); }
  E inv(const E& a) const { return arith::mod_inverse(a, p); }
  E from_ui(unsigned long v) const { return norm(Int(v)); }
  bool is_zero(const E& a) const { return a == 0; }
  E norm(const Int& v) const {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return r;
  }
  Int exponent() const { return p; }
};

template <class F>
using Poly = std::vector<typename F::E>;

template <class F>
void trim(const F& fld, Poly<F>& a) {
  while (!a.empty() && fld.is_zero(a.back())) a.pop_back();
}

template <class F>
Poly<F> rem(const F& fld, Poly<F> a, const Poly<F>& m) {
  int dm = static_cast<int>(m.size()) - 1;
  auto lead_inv = fld.inv(m.back());
  trim(fld, a);
  while (static_cast<int>(a.size()) - 1 >= dm) {
    auto q = fld.mul(a.back(), lead_inv);
    int shift = static_cast<int>(a.size()) - 1 - dm;
    for (int i = 0; i <= dm; ++i) a[i + shift] = fld.sub(a[i + shift], fld.mul(q, m[i]));
    a.pop_back();
    trim(fld, a);
  }
  return a;
}

template <class F>
Poly<F> quot(const F& fld, Poly<F> a, const Poly<F>& m) {
  int dm = static_cast<int>(m.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  if (da < dm) return {};
  Poly<F> q(da - dm + 1, fld.from_ui(0));
  auto lead_inv = fld.inv(m.back());
  while (static_cast<int>(a.size()) - 1 >= dm) {
    auto c = fld.mul(a.back(), lead_inv);
    int shift = static_cast<int>(a.size()) - 1 - dm;
    q[shift] = c;
    for (int i = 0; i <= dm; ++i) a[i + shift] = fld.sub(a[i + shift], fld.mul(c, m[i]));
    a.pop_back();
    trim(fld, a);
    if (a.empty()) break;
  }
  return q;
}

template <class F>
Poly<F> mulmod(const F& fld, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, fld.from_ui(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (fld.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = fld.add(r[i + j], fld.mul(a[i], b[j]));
  }
  return rem(fld, std::move(r), m);
}

template <class F>
Poly<F> powmod(const F& fld, Poly<F> base, const Int& e, const Poly<F>& m) {
  Poly<F> result{fld.from_ui(1)};
  result = rem(fld, result, m);
  base = rem(fld, base, m);
  for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    result = mulmod(fld, result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) result = mulmod(fld, result, base, m);
  }
  return result;
}

template <class F>
Poly<F> monic(const F& fld, Poly<F> a) {
  if (a.empty()) return a;
  auto li = fld.inv(a.back());
  for (auto& c : a) c = fld.mul(c, li);
  return a;
}

template <class F>
Poly<F> pgcd(const F& fld, Poly<F> a, Poly<F> b) {
  trim(fld, a);
  trim(fld, b);
  while (!b.empty()) {
    Poly<F> r = rem(fld, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(fld, std::move(a));
}

template <class F>
void split_roots(const F& fld, const Poly<F>& g, std::vector<typename F::E>& out) {
  int d = static_cast<int>(g.size()) - 1;
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(fld.neg(fld.mul(g[0], fld.inv(g[1]))));
    return;
  }
  Int half = (fld.exponent() - 1) / 2;
  for (unsigned long c = 0;; ++c) {
    Poly<F> shifted{fld.from_ui(c), fld.from_ui(1)};
    Poly<F> h = powmod(fld, shifted, half, g);
    if (h.empty()) h.push_back(fld.from_ui(0));
    h[0] = fld.sub(h[0], fld.from_ui(1));
    Poly<F> k = pgcd(fld, g, h);
    int dk = static_cast<int>(k.size()) - 1;
    if (dk > 0 && dk < d) {
      split_roots(fld, k, out);
      split_roots(fld, quot(fld, g, k), out);
      return;
    }
  }
}

template <class F>
std::vector<typename F::E> find_roots(const F& fld, Poly<F> f) {
  trim(fld, f);
  std::vector<typename F::E> out;
  if (f.size() <= 1) return out;
  f = monic(fld, std::move(f));
  // x^p - x mod f
  Poly<F> xp = powmod(fld, Poly<F>{fld.from_ui(0), fld.from_ui(1)}, fld.exponent(), f);
  if (xp.size() < 2) xp.resize(2, fld.from_ui(0));
  xp[1] = fld.sub(xp[1], fld.from_ui(1));
  Poly<F> g = pgcd(fld, f, xp);
  split_roots(fld, g, out);
  return out;
}

}  // namespace

std::vector<Int> roots_mod_prime(const IntPoly& f, const Int& p) {
  if (p < 2) throw InvalidInput("roots_mod_prime: modulus must be prime");
  auto red = reduce_mod_p(f, p);
  if (red.empty()) throw InvalidInput("roots_mod_prime: polynomial vanishes modulo " + p.get_str());
  if (p < 64) return roots_mod_p(f, p);
  BigField fld{p};
  auto roots = find_roots(fld, red);
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool has_root_mod_prime(const IntPoly& f, const Int& p) { return !roots_mod_prime(f, p).empty(); }

std::vector<std::uint32_t> roots_mod_small_prime(const std::vector<std::int64_t>& coeffs,
                                                 std::uint32_t p, bool* all) {
  std::vector<std::uint32_t> out;
  if (all) *all = false;
  SmallField fld{p};
  Poly<SmallField> red;
  for (auto c : coeffs) {
    std::int64_t r = c % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    red.push_back(static_cast<std::uint64_t>(r));
  }
  trim(fld, red);
  if (red.empty()) {
    if (all) *all = true;
    return out;
  }
  if (p < 64) {
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t acc = 0;
      for (std::size_t i = red.size(); i-- > 0;) acc = (acc * x + red[i]) % p;
      if (acc == 0) out.push_back(static_cast<std::uint32_t>(x));
    }
    return out;
  }
  for (auto r : find_roots(fld, red)) out.push_back(static_cast<std::uint32_t>(r));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sqf::poly
