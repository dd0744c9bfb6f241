#include <algorithm>

#include "sqf/classify.hpp"
#include "sqf/local.hpp"

namespace sqf {

const char* certificate_kind(const Certificate& c) {
  struct Visitor {
    const char* operator()(const HenselPoint&) const { return "HenselPoint"; }
    const char* operator()(const InfinityPoint&) const { return "InfinityPoint"; }
    const char* operator()(const RealWitness&) const { return "RealWitness"; }
    const char* operator()(const NoRealPoint&) const { return "NoRealPoint"; }
    const char* operator()(const ExhaustionTranscript&) const { return "ExhaustionTranscript"; }
    const char* operator()(const GoodReductionGuarantee&) const { return "GoodReductionGuarantee"; }
    const char* operator()(const NoRootGoodPrime&) const { return "NoRootGoodPrime"; }
  };
  return std::visit(Visitor{}, c);
}

namespace local {
namespace {

bool divides(const Int& p, const Int& n) { return mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0; }

Int effective_n0(const IntPoly& f, const Int& requested) {
  Int n0 = classify::compute_n0(f);
  if (requested == 0) return n0;
  if (requested < n0) {
    throw InvalidInput("n0 = " + requested.get_str() + " is below the threshold " + n0.get_str() + " for f");
  }
  return requested;
}

void check_twist(const IntPoly& f, const Int& d) {
  if (d == 0 || !arith::is_squarefree(d)) throw InvalidInput("d must be a nonzero squarefree integer");
  if (!poly::is_separable(f)) throw InvalidInput("polynomial is not separable: " + f.to_string());
}

// l >= n0 and l | d, even degree, f with a root mod l: r = n + l^(2k-1) b
// with ord_l f(n) = 2k - 1 odd and b t f'(n) == 1 - s t (mod l).
Rat taylor_point(const IntPoly& f, const Int& d, const Int& ell) {
  Int n = classify::witness_odd_valuation(f, ell);
  Int fn = f.eval(n);
  long e = arith::ord_p(fn, ell);
  Int le;
  mpz_pow_ui(le.get_mpz_t(), ell.get_mpz_t(), static_cast<unsigned long>(e));
  Int s = fn / le;
  Int t = d / ell;
  Int dfn = poly::derivative(f).eval(n);
  Int b = arith::mod(Int((1 - s * t) * arith::mod_inverse(arith::mod(Int(t * dfn), ell), ell)), ell);
  return Rat(Int(n + le * b));
}

}  // namespace

TwistLocalReport has_nontrivial_Ql_point(const IntPoly& f, const Int& d, const Int& ell,
                                         const LocalSearchParams& params) {
  check_twist(f, d);
  if (!arith::is_prime(ell)) throw InvalidInput(ell.get_str() + " is not prime");
  Int n0 = effective_n0(f, params.n0);
  if (ell < n0) {
    int cap = params.depth_cap.value_or(default_depth_cap(f, ell));
    return decide_by_exhaustion(f, d, ell, cap);
  }
  if (!divides(ell, d)) {
    if (ell > params.certification_bound) return {ell, true, GoodReductionGuarantee{n0}};
    const unsigned long l = ell.get_ui();
    for (unsigned long a = 0; a < l; ++a) {
      Int value = d * f.eval(Int(a));
      if (arith::legendre(value, ell) == 1) return {ell, true, point_at(f, d, ell, Rat(Int(a)))};
    }
    throw InternalSearchExhausted("no affine point with y != 0 over F_" + ell.get_str());
  }
  if (f.degree() % 2 == 1) {
    Rat x(Int(1), Int(f.lc() * d));
    return {ell, true, point_at(f, d, ell, x)};
  }
  if (!poly::has_root_mod_prime(f, ell)) {
    if (ell <= params.certification_bound) return decide_by_exhaustion(f, d, ell, default_depth_cap(f, ell));
    return {ell, false, NoRootGoodPrime{}};
  }
  return {ell, true, point_at(f, d, ell, taylor_point(f, d, ell))};
}

bool verify_report(const IntPoly& f, const Int& d, const TwistLocalReport& report,
                   const LocalSearchParams& params) {
  const Certificate& c = report.certificate;
  if (!report.ell) {
    if (auto* w = std::get_if<RealWitness>(&c)) {
      return report.solvable && (Rat(d) * f.eval(w->r)).sign() > 0;
    }
    if (std::holds_alternative<NoRealPoint>(c)) {
      if (report.solvable || f.degree() % 2 == 1 || sgn(Int(d * f.lc())) > 0) return false;
      std::vector<Int> g;
      for (const auto& a : f.coeffs()) g.push_back(a * d);
      return real_root_count(IntPoly(std::move(g))) == 0;
    }
    return false;
  }
  const Int& ell = *report.ell;
  if (auto* pt = std::get_if<HenselPoint>(&c)) return report.solvable && verify_point(f, d, ell, *pt);
  if (auto* inf = std::get_if<InfinityPoint>(&c)) {
    return report.solvable && f.degree() % 2 == 0 && is_square_in_Ql(Rat(Int(d * f.lc())), ell) &&
           verify_point(f, d, ell, inf->point);
  }
  if (auto* tr = std::get_if<ExhaustionTranscript>(&c)) {
    return !report.solvable && verify_transcript(f, d, ell, *tr);
  }
  if (auto* g = std::get_if<GoodReductionGuarantee>(&c)) {
    Int n0 = effective_n0(f, params.n0);
    return report.solvable && g->n0 >= n0 && ell >= g->n0 && arith::is_prime(ell) && !divides(ell, d);
  }
  if (std::holds_alternative<NoRootGoodPrime>(c)) {
    return !report.solvable && f.degree() % 2 == 0 && poly::is_good_prime(f, ell) && divides(ell, d) &&
           !poly::has_root_mod_prime(f, ell);
  }
  return false;
}

std::optional<ObstructionStatement> pointless_obstruction(const IntPoly& f, const Int& p) {
  if (f.degree() % 2 == 1) {
    throw InvalidInput("pointless obstruction needs even degree; odd degree curves have a rational point at infinity");
  }
  if (!poly::is_good_prime(f, p)) throw NotGoodPrime(p.get_str() + " is not a good prime for f");
  if (count_points_Fl(f, 1, p) != 0) return std::nullopt;
  ObstructionStatement st{p, {}, ""};
  for (Int r = 1; r < p; ++r) {
    if (arith::legendre(r, p) == 1) st.residues.push_back(r);
  }
  st.text = "y^2 = f(x) has no point over F_" + p.get_str() +
            "; every squarefree d that is a nonzero square mod " + p.get_str() +
            " gives a twist with no nontrivial Q_" + p.get_str() + " point";
  return st;
}

std::vector<EverywhereLocalTwist> everywhere_local_d(const IntPoly& f, const Int& p, const Int& m,
                                                     std::size_t k, const EverywhereOptions& opts) {
  if (!poly::is_separable(f)) throw InvalidInput("polynomial is not separable: " + f.to_string());
  if (!arith::is_prime(p)) throw InvalidInput(p.get_str() + " is not prime");
  if (arith::mod(m, p) == 0) throw InvalidInput("residue m must be coprime to p");
  Int n0 = classify::compute_n0(f);
  if (p < n0 && !opts.experimental) {
    throw InvalidInput("p = " + p.get_str() + " is below n0 = " + n0.get_str() +
                       "; the construction is only available experimentally there");
  }

  Int t = 0;
  while (f.eval(t) == 0) ++t;
  Int ft = f.eval(t);
  auto small = arith::primes_up_to(n0.get_ui() - 1);
  Int delta = sgn(ft);
  for (auto l : small) {
    Int ell(static_cast<unsigned long>(l));
    if (arith::ord_p(ft, ell) % 2 == 1) delta *= ell;
  }
  if (divides(p, delta)) throw InvalidInput("p divides the sign-and-parity factor of f(t)");
  Int W = delta * ft;

  std::vector<Congruence> system{Congruence(Int(m * arith::mod_inverse(arith::mod(delta, p), p)), p)};
  for (auto l : small) {
    Int ell(static_cast<unsigned long>(l));
    if (ell == p) continue;
    Int u = W;
    mpz_remove(u.get_mpz_t(), u.get_mpz_t(), ell.get_mpz_t());
    if (l == 2) {
      system.emplace_back(arith::mod_inverse(arith::mod(u, 8), 8), 8);
    } else {
      system.emplace_back(u, ell);
    }
  }

  arith::PrimeProgression stream(system, opts.budget);
  std::vector<EverywhereLocalTwist> out;
  LocalSearchParams params;
  while (out.size() < k) {
    Int q = stream.next();
    if (divides(q, delta)) continue;
    if (f.degree() % 2 == 0 && !poly::has_root_mod_prime(f, q)) continue;
    Int d = delta * q;
    EverywhereLocalTwist tw{d, q, t, {}};
    tw.reports.push_back(has_real_point(f, d));
    for (auto l : small) tw.reports.push_back(has_nontrivial_Ql_point(f, d, Int(static_cast<unsigned long>(l)), params));
    for (const auto& [ell, e] : arith::factor(d).factors) {
      if (ell >= n0) tw.reports.push_back(has_nontrivial_Ql_point(f, d, ell, params));
    }
    bool ok = std::all_of(tw.reports.begin(), tw.reports.end(), [&](const TwistLocalReport& r) {
      return r.solvable && verify_report(f, d, r, params);
    });
    if (ok) out.push_back(std::move(tw));
  }
  return out;
}

}  // namespace local
}  // namespace sqf
