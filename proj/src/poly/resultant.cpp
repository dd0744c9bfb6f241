#include <utility>

#include "sqf/poly.hpp"

namespace sqf::poly {
namespace {

using Vec = std::vector<Int>;

void trim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int deg(const Vec& v) { return static_cast<int>(v.size()) - 1; }

Int pow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Int vec_content(const Vec& v) {
  Int g = 0;
  for (const auto& c : v) g = gcd(g, c);
  return g;
}

// lc(b)^(deg a - deg b + 1) * a mod b, exact over Z.
Vec pseudo_remainder(Vec a, const Vec& b) {
  int db = deg(b);
  const Int& lb = b.back();
  int e = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    Int la = a.back();
    int shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    a.pop_back();
    trim(a);
    --e;
  }
  if (e > 0) {
    Int m = pow(lb, static_cast<unsigned long>(e));
    for (auto& c : a) c *= m;
  }
  return a;
}

}  // namespace

// Cohen, Algorithm 3.3.7.
Int resultant(const std::vector<Int>& a_in, const std::vector<Int>& b_in) {
  Vec a = a_in, b = b_in;
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  if (deg(a) == 0 && deg(b) == 0) return 1;
  if (deg(a) == 0) return pow(a[0], static_cast<unsigned long>(deg(b)));
  if (deg(b) == 0) return pow(b[0], static_cast<unsigned long>(deg(a)));

  Int ca = vec_content(a), cb = vec_content(b);
  for (auto& c : a) c /= ca;
  for (auto& c : b) c /= cb;
  Int g = 1, h = 1;
  int s = 1;
  Int t = pow(ca, static_cast<unsigned long>(deg(b))) * pow(cb, static_cast<unsigned long>(deg(a)));
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
  }
  while (true) {
    int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
    Vec r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return 0;
    Int divisor = g * pow(h, static_cast<unsigned long>(delta));
    for (auto& c : r) c /= divisor;
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = pow(g, static_cast<unsigned long>(delta)) / pow(h, static_cast<unsigned long>(delta - 1));
    }
    if (deg(b) == 0) {
      int da = deg(a);
      h = pow(b[0], static_cast<unsigned long>(da)) / pow(h, static_cast<unsigned long>(da - 1));
      return s * t * h;
    }
  }
}

Int discriminant(const IntPoly& f) {
  int n = f.degree();
  if (n < 1) throw InvalidInput("discriminant of a constant polynomial");
  if (n == 1) return 1;
  Int res = resultant(f.coeffs(), derivative(f).coeffs());
  Int disc = res / f.lc();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

bool is_separable(const IntPoly& f) { return discriminant(f) != 0; }

}  // namespace sqf::poly
