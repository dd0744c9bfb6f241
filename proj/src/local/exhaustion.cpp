// Local decision for d y^2 = f(x) at a prime l by refining residue classes.
//
// A nontrivial Q_l point exists iff d f(x) is a nonzero square for some x in
// Q_l. Chart 1 covers x in Z_l with P1(t) = d f(t); chart 2 covers x = 1/z,
// z in l Z_l, with P2(t) = G(l t) where G(z) = z^N d f(1/z) and N is deg f
// rounded up to even. A node is a class t = c + l^k s; once the expanded
// polynomial divided by its content l^v has a unit value on a residue class
// of s (odd l) or is constant mod 8 with odd value (l = 2), the square class
// is constant there and the class is decided.

#include <deque>
#include <map>
#include <tuple>

#include "sqf/local.hpp"

namespace sqf::local {
namespace {

using Vec = std::vector<Int>;

Int pow_ui(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

long ord(const Int& n, const Int& ell) { return arith::ord_p(n, ell); }

std::pair<Vec, Vec> chart_polys(const IntPoly& f, const Int& d, const Int& ell) {
  Vec p1;
  for (const auto& c : f.coeffs()) p1.push_back(d * c);
  int n = f.degree();
  int N = n % 2 == 0 ? n : n + 1;
  Vec p2(N + 1, 0);
  Int lp = 1;
  for (int i = 0; i <= N; ++i) {
    int j = N - i;
    if (j <= n) p2[i] = d * f.coeffs()[j] * lp;
    lp *= ell;
  }
  return {p1, p2};
}

// Coefficients of P(c + l^k s) in s, by Taylor shift then scaling.
Vec expand(const Vec& P, const Int& c, int k, const Int& ell) {
  Vec q = P;
  int n = static_cast<int>(q.size()) - 1;
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) q[j] += c * q[j + 1];
  }
  Int step = pow_ui(ell, static_cast<unsigned long>(k));
  Int scale = 1;
  for (auto& a : q) {
    a *= scale;
    scale *= step;
  }
  return q;
}

// Strips the l-content; returns v.
long strip(Vec& q, const Int& ell) {
  long v = -1;
  for (const auto& a : q) {
    if (a == 0) continue;
    long e = ord(a, ell);
    if (v < 0 || e < v) v = e;
  }
  Int div = pow_ui(ell, static_cast<unsigned long>(v));
  for (auto& a : q) a /= div;
  return v;
}

struct Residues {
  std::uint64_t l = 0;
  std::vector<char> is_sq;

  explicit Residues(const Int& ell) {
    if (!mpz_fits_ulong_p(ell.get_mpz_t()) || ell > Int(1UL << 32)) {
      throw InvalidInput("lifting exhaustion needs a prime below 2^32");
    }
    l = ell.get_ui();
    if (l > 2 && l < (1UL << 24)) {
      is_sq.assign(l, 0);
      for (std::uint64_t y = 1; y < l; ++y) is_sq[y * y % l] = 1;
    }
  }
  bool square(std::uint64_t a) const {
    if (!is_sq.empty()) return is_sq[a] != 0;
    return arith::legendre(Int(static_cast<unsigned long>(a)), Int(static_cast<unsigned long>(l))) == 1;
  }
};

std::vector<std::uint64_t> reduce(const Vec& q, std::uint64_t l) {
  std::vector<std::uint64_t> r;
  for (const auto& a : q) r.push_back(mpz_fdiv_ui(a.get_mpz_t(), l));
  return r;
}

std::uint64_t eval_mod(const std::vector<std::uint64_t>& c, std::uint64_t s, std::uint64_t l) {
  unsigned __int128 acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = (acc * s + c[i]) % l;
  return static_cast<std::uint64_t>(acc);
}

// l = 2 leaf test: nonconstant coefficients vanish mod 8 and the constant is odd.
bool two_adic_constant(const Vec& q1) {
  if (mpz_odd_p(q1[0].get_mpz_t()) == 0) return false;
  for (std::size_t i = 1; i < q1.size(); ++i) {
    if (mpz_fdiv_ui(q1[i].get_mpz_t(), 8) != 0) return false;
  }
  return true;
}

Rat x_of(int chart, const Int& t, const Int& ell) {
  if (chart == 1) return Rat(t);
  return Rat(Int(1), Int(ell * t));
}

TwistLocalReport solved(const IntPoly& f, const Int& d, const Int& ell, int chart, const Int& t,
                        bool near_infinity) {
  HenselPoint pt = point_at(f, d, ell, x_of(chart, t, ell));
  TwistLocalReport rep{ell, true, pt};
  if (near_infinity) rep.certificate = InfinityPoint{pt};
  return rep;
}

}  // namespace

int default_depth_cap(const IntPoly& f, const Int& ell) {
  Int disc = poly::discriminant(f);
  return static_cast<int>(2 * ord(Int(4 * disc * f.lc()), ell) + 5);
}

int depth_cap_floor(const IntPoly& f, const Int& ell) {
  Int disc = poly::discriminant(f);
  return static_cast<int>(2 * ord(Int(2 * disc * f.lc()), ell) + 3);
}

TwistLocalReport decide_by_exhaustion(const IntPoly& f, const Int& d, const Int& ell, int depth_cap) {
  if (d == 0) throw InvalidInput("d must be nonzero");
  if (!arith::is_prime(ell)) throw InvalidInput(ell.get_str() + " is not prime");
  if (depth_cap < depth_cap_floor(f, ell)) {
    throw DepthCapTooSmall("depth cap " + std::to_string(depth_cap) + " is below the floor " +
                           std::to_string(depth_cap_floor(f, ell)) + " at l = " + ell.get_str());
  }
  Residues res(ell);
  const std::uint64_t l = res.l;
  auto [p1, p2] = chart_polys(f, d, ell);
  const bool even = f.degree() % 2 == 0;

  struct Pending {
    int chart;
    Int center;
    int exponent;
  };
  ExhaustionTranscript transcript{depth_cap, {}};
  std::deque<Pending> queue{{1, Int(0), 0}, {2, Int(0), 0}};
  bool unresolved = false;

  while (!queue.empty()) {
    Pending node = queue.front();
    queue.pop_front();
    const Vec& P = node.chart == 1 ? p1 : p2;
    Vec q = expand(P, node.center, node.exponent, ell);
    long v = strip(q, ell);
    Int lk = pow_ui(ell, static_cast<unsigned long>(node.exponent));
    ExhaustionNode rec{node.chart, node.center, node.exponent, v, {}};

    auto refine = [&](std::uint64_t s0) {
      if (node.exponent + 1 > depth_cap) {
        unresolved = true;
        return;
      }
      rec.recursed.push_back(s0);
      queue.push_back({node.chart, Int(node.center + lk * Int(static_cast<unsigned long>(s0))),
                       node.exponent + 1});
    };

    if (l == 2) {
      if (two_adic_constant(q)) {
        if (v % 2 == 0 && mpz_fdiv_ui(q[0].get_mpz_t(), 8) == 1) {
          Int t = node.center != 0 ? node.center : lk;
          return solved(f, d, ell, node.chart, t, even && node.chart == 2 && node.center == 0);
        }
      } else {
        refine(0);
        refine(1);
      }
    } else {
      auto red = reduce(q, l);
      for (std::uint64_t s0 = 0; s0 < l; ++s0) {
        std::uint64_t val = eval_mod(red, s0, l);
        if (val == 0) {
          refine(s0);
        } else if (v % 2 == 0 && res.square(val)) {
          Int t = node.center + lk * Int(static_cast<unsigned long>(s0));
          bool at_zero = t == 0;
          if (at_zero) t = lk * ell;
          return solved(f, d, ell, node.chart, t, even && node.chart == 2 && at_zero);
        }
      }
    }
    transcript.nodes.push_back(std::move(rec));
  }
  if (unresolved) {
    throw DepthCapTooSmall("exhaustion at l = " + ell.get_str() + " did not resolve within depth " +
                           std::to_string(depth_cap));
  }
  return {ell, false, std::move(transcript)};
}

bool verify_transcript(const IntPoly& f, const Int& d, const Int& ell, const ExhaustionTranscript& tr) {
  if (!arith::is_prime(ell) || !mpz_fits_uint_p(ell.get_mpz_t())) return false;
  if (tr.depth_cap < depth_cap_floor(f, ell)) return false;
  const std::uint64_t l = ell.get_ui();
  const int n = f.degree();
  const int N = n % 2 == 0 ? n : n + 1;

  std::map<std::tuple<int, Int, int>, const ExhaustionNode*> index;
  for (const auto& node : tr.nodes) {
    if (node.chart != 1 && node.chart != 2) return false;
    if (node.exponent < 0 || node.exponent > tr.depth_cap) return false;
    index[{node.chart, node.center, node.exponent}] = &node;
  }
  if (!index.count({1, Int(0), 0}) || !index.count({2, Int(0), 0})) return false;

  for (const auto& node : tr.nodes) {
    Int lk = pow_ui(ell, static_cast<unsigned long>(node.exponent));
    if (node.center < 0 || node.center >= lk) return false;
    // Coefficient j of P(c + l^k s) as sum_i P_i binom(i, j) c^(i-j) l^(kj).
    std::vector<Int> P(N + 1, 0);
    if (node.chart == 1) {
      for (int i = 0; i <= n; ++i) P[i] = d * f.coeffs()[i];
      P.resize(n + 1);
    } else {
      for (int i = 0; i <= N; ++i) {
        if (N - i <= n) P[i] = d * f.coeffs()[N - i] * pow_ui(ell, static_cast<unsigned long>(i));
      }
    }
    std::vector<Int> Q(P.size(), 0);
    for (std::size_t j = 0; j < P.size(); ++j) {
      for (std::size_t i = j; i < P.size(); ++i) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), i, j);
        Q[j] += P[i] * binom * pow_ui(node.center, static_cast<unsigned long>(i - j));
      }
      Q[j] *= pow_ui(lk, static_cast<unsigned long>(j));
    }
    long v = -1;
    for (const auto& a : Q) {
      if (a != 0 && (v < 0 || arith::ord_p(a, ell) < v)) v = arith::ord_p(a, ell);
    }
    if (v != node.v) return false;
    Int scale = pow_ui(ell, static_cast<unsigned long>(v));
    for (auto& a : Q) a /= scale;

    auto child_present = [&](std::uint64_t s0) {
      return index.count({node.chart, Int(node.center + lk * Int(static_cast<unsigned long>(s0))),
                          node.exponent + 1}) > 0;
    };
    std::vector<char> recursed(l, 0);
    for (auto s0 : node.recursed) {
      if (s0 >= l || !child_present(s0)) return false;
      recursed[s0] = 1;
    }
    if (l == 2) {
      if (recursed[0] && recursed[1]) continue;
      if (!node.recursed.empty()) return false;
      bool constant = mpz_odd_p(Q[0].get_mpz_t()) != 0;
      for (std::size_t i = 1; i < Q.size() && constant; ++i) constant = mpz_fdiv_ui(Q[i].get_mpz_t(), 8) == 0;
      if (!constant) return false;
      if (v % 2 == 0 && mpz_fdiv_ui(Q[0].get_mpz_t(), 8) == 1) return false;
      continue;
    }
    for (std::uint64_t s0 = 0; s0 < l; ++s0) {
      if (recursed[s0]) continue;
      Int value = 0;
      for (std::size_t i = Q.size(); i-- > 0;) value = value * Int(static_cast<unsigned long>(s0)) + Q[i];
      Int r = arith::mod(value, ell);
      if (r == 0) return false;
      if (v % 2 == 0 && arith::legendre(r, ell) == 1) return false;
    }
  }
  return true;
}

}  // namespace sqf::local
