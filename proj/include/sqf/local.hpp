#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sqf/poly.hpp"

namespace sqf {

/// Approximate point (x, y) on d y^2 = f(x) over Q_l:
/// ord_l(d y^2 - f(x)) >= ord_l(f(x)) + precision, with y != 0 and
/// precision >= 1 (>= 3 when l = 2). The ratio d y^2 / f(x) is then a unit
/// square, so f(x) / d is a nonzero square in Q_l.
struct HenselPoint {
  Rat x;
  Rat y;
  int precision = 0;
};

/// Even degree, d * lc a square in Q_l: nontrivial points exist near infinity.
/// The point is such a nearby affine point, checked as a HenselPoint.
struct InfinityPoint {
  HenselPoint point;
};

/// d * f(r) > 0.
struct RealWitness {
  Rat r;
};

/// d * f has no real root and is negative at infinity.
struct NoRealPoint {};

/// One residue class t = center + l^exponent * s, s in Z_l, of chart `chart`
/// (1: x = t; 2: x = 1 / (l t)). `v` is the least valuation of the expanded
/// coefficients; `recursed` lists the residues of s refined into child nodes.
/// Every other residue is a class on which the value has constant valuation
/// and constant unit square class, and is not a square.
struct ExhaustionNode {
  int chart = 1;
  Int center;
  int exponent = 0;
  long v = 0;
  std::vector<std::uint64_t> recursed;
};

struct ExhaustionTranscript {
  int depth_cap = 0;
  std::vector<ExhaustionNode> nodes;
};

/// l >= n0 with l not dividing d: the local point follows from good reduction
/// and the point count forced by the Hasse-Weil bound.
struct GoodReductionGuarantee {
  Int n0;
};

/// l good, l | d, even degree, f without roots mod l.
struct NoRootGoodPrime {};

using Certificate = std::variant<HenselPoint, InfinityPoint, RealWitness, NoRealPoint,
                                 ExhaustionTranscript, GoodReductionGuarantee, NoRootGoodPrime>;

const char* certificate_kind(const Certificate& c);

struct TwistLocalReport {
  std::optional<Int> ell;  // empty for the real place
  bool solvable = false;
  Certificate certificate;

  std::string place() const { return ell ? ell->get_str() : std::string("real"); }
};

struct LocalSearchParams {
  /// 0 means compute from f; an explicit value may only raise the threshold.
  Int n0 = 0;
  /// Exponent cap of the small-prime exhaustion; default 2 ord_l(4 disc lc) + 5.
  std::optional<int> depth_cap;
  /// Above this, good-reduction places cite the point count bound instead of a point.
  Int certification_bound = 10'000;
};

struct ObstructionStatement {
  Int p;
  /// Nonzero squares mod p; every squarefree d in these classes is obstructed.
  std::vector<Int> residues;
  std::string text;
};

struct EverywhereLocalTwist {
  Int d;
  Int q;
  Int t;
  std::vector<TwistLocalReport> reports;
};

struct EverywhereOptions {
  /// Allow p < n0; outputs are still verified, but nothing is guaranteed.
  bool experimental = false;
  std::uint64_t budget = arith::kDefaultPrimeBudget;
};

namespace local {

bool is_square_in_Ql(const Rat& x, const Int& ell);

/// Square root mod p of a quadratic residue (Tonelli-Shanks).
Int sqrt_mod_prime(const Int& a, const Int& p);
/// w with w^2 == u mod l^k for an l-adic unit square u (u == 1 mod 8 when l = 2).
Int sqrt_unit_mod_prime_power(const Rat& u, const Int& ell, int k);

/// Projective point count of the smooth model of d y^2 = f(x) over F_l.
Int count_points_Fl(const IntPoly& f, const Int& d, const Int& ell);

/// Lifts a nonsingular seed of d y^2 = f(x) mod l to a solution mod l^k.
std::pair<Int, Int> hensel_lift(const IntPoly& f, const Int& d, const Int& ell, const Int& alpha,
                                const Int& beta, int k);

/// HenselPoint at x, given that d f(x) is a nonzero square in Q_l.
HenselPoint point_at(const IntPoly& f, const Int& d, const Int& ell, const Rat& x);
bool verify_point(const IntPoly& f, const Int& d, const Int& ell, const HenselPoint& pt);

int default_depth_cap(const IntPoly& f, const Int& ell);
int depth_cap_floor(const IntPoly& f, const Int& ell);

/// Complete decision by lifting exhaustion over both charts; any prime l.
TwistLocalReport decide_by_exhaustion(const IntPoly& f, const Int& d, const Int& ell, int depth_cap);
bool verify_transcript(const IntPoly& f, const Int& d, const Int& ell, const ExhaustionTranscript& t);

TwistLocalReport has_nontrivial_Ql_point(const IntPoly& f, const Int& d, const Int& ell,
                                         const LocalSearchParams& params = {});
TwistLocalReport has_real_point(const IntPoly& f, const Int& d);

/// Number of distinct real roots (Sturm).
int real_root_count(const IntPoly& f);

/// Independent re-check of a report's certificate.
bool verify_report(const IntPoly& f, const Int& d, const TwistLocalReport& report,
                   const LocalSearchParams& params = {});

std::optional<ObstructionStatement> pointless_obstruction(const IntPoly& f, const Int& p);

std::vector<EverywhereLocalTwist> everywhere_local_d(const IntPoly& f, const Int& p, const Int& m,
                                                     std::size_t k, const EverywhereOptions& opts = {});

}  // namespace local
}  // namespace sqf
