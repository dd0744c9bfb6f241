#include "sqf/local.hpp"

namespace sqf::local {
namespace {

using QPoly = std::vector<Rat>;

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly rem(QPoly a, const QPoly& b) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    Rat c = a.back() / b.back();
    int shift = static_cast<int>(a.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) a[i + shift] = a[i + shift] - c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_at_infinity(const QPoly& p, bool positive) {
  int s = p.back().sign();
  if (!positive && (p.size() - 1) % 2 == 1) s = -s;
  return s;
}

int variations(const std::vector<QPoly>& chain, bool positive) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_at_infinity(p, positive);
    if (s != 0 && last != 0 && s != last) ++count;
    if (s != 0) last = s;
  }
  return count;
}

// Integer M with every real root of f in (-M, M).
Int cauchy_bound(const IntPoly& f) {
  Int m = 0;
  for (const auto& c : f.coeffs()) m = std::max(m, Int(abs(c)));
  Int lc = abs(f.lc());
  return (m + lc - 1) / lc + 1;
}

IntPoly scaled(const IntPoly& f, const Int& d) {
  std::vector<Int> c;
  for (const auto& a : f.coeffs()) c.push_back(a * d);
  return IntPoly(std::move(c));
}

}  // namespace

int real_root_count(const IntPoly& f) {
  QPoly p0;
  for (const auto& c : f.coeffs()) p0.emplace_back(c);
  if (p0.size() <= 1) return 0;
  QPoly p1;
  for (std::size_t i = 1; i < p0.size(); ++i) p1.push_back(p0[i] * Rat(static_cast<long>(i)));
  std::vector<QPoly> chain{p0, p1};
  while (true) {
    QPoly r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return variations(chain, false) - variations(chain, true);
}

TwistLocalReport has_real_point(const IntPoly& f, const Int& d) {
  if (d == 0) throw InvalidInput("d must be nonzero");
  IntPoly g = scaled(f, d);
  Int M = cauchy_bound(g);
  int s = sgn(g.lc());
  auto positive = [&](const Rat& x) { return g.eval(x).sign() > 0; };
  if (g.degree() % 2 == 1 || s > 0) {
    Rat x = (g.degree() % 2 == 1 && s < 0) ? Rat(Int(-M)) : Rat(M);
    while (!positive(x)) x = x * Rat(2);
    return {std::nullopt, true, RealWitness{x}};
  }
  if (real_root_count(g) == 0) return {std::nullopt, false, NoRealPoint{}};
  // Negative at both ends with a sign change inside: sample dyadic grids.
  for (unsigned level = 1; level < 256; ++level) {
    Int steps = Int(1) << level;
    for (Int j = 1; j < steps; j += 2) {
      Rat x = Rat(Int(-M)) + Rat(Int(2 * M * j), steps);
      if (positive(x)) return {std::nullopt, true, RealWitness{x}};
    }
  }
  throw InternalSearchExhausted("real sign change found but no positive sample");
}

}  // namespace sqf::local
