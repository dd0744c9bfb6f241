#include <algorithm>
#include <sstream>

#include "sqf/poly.hpp"

namespace sqf {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) throw InvalidInput("the zero polynomial is not accepted");
}

IntPoly::IntPoly(std::initializer_list<long> coeffs)
    : IntPoly(std::vector<Int>(coeffs.begin(), coeffs.end())) {}

IntPoly IntPoly::parse(std::string_view text) {
  std::vector<Int> coeffs;
  std::string cleaned;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') cleaned.push_back(ch);
  }
  if (cleaned.empty()) throw InvalidInput("empty polynomial");
  std::size_t start = 0;
  while (start <= cleaned.size()) {
    std::size_t comma = cleaned.find(',', start);
    if (comma == std::string::npos) comma = cleaned.size();
    std::string tok = cleaned.substr(start, comma - start);
    std::size_t i = (!tok.empty() && tok[0] == '-') ? 1 : 0;
    if (i == tok.size()) throw InvalidInput("malformed coefficient list: '" + std::string(text) + "'");
    for (std::size_t j = i; j < tok.size(); ++j) {
      if (tok[j] < '0' || tok[j] > '9') {
        throw InvalidInput("malformed coefficient '" + tok + "'");
      }
    }
    coeffs.emplace_back(tok, 10);
    start = comma + 1;
  }
  return IntPoly(std::move(coeffs));
}

Int IntPoly::eval(const Int& x) const {
  Int acc = c_.back();
  for (int i = degree() - 1; i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  // Homogeneous Horner: b^n f(a/b) in integers, then one division.
  const Int& a = x.num();
  const Int& b = x.den();
  Int acc = c_.back();
  Int bpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    bpow *= b;
    acc = acc * a + c_[i] * bpow;
  }
  return Rat(acc, bpow);
}

std::string IntPoly::to_csv() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s.push_back(',');
    s += c_[i].get_str();
  }
  return s;
}

std::string IntPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = c_[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = mag == 1 && i > 0;
    if (!unit) os << mag.get_str();
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

Int BiForm::eval(const Int& x, const Int& y) const {
  Int acc = 0;
  Int ypow = 1;
  // Horner in x with running powers of y.
  acc = coeffs.empty() ? Int(0) : coeffs.back();
  for (int i = static_cast<int>(coeffs.size()) - 2; i >= 0; --i) {
    ypow *= y;
    acc = acc * x + coeffs[i] * ypow;
  }
  // Remaining powers of y when the top coefficients vanish.
  int missing = n - (static_cast<int>(coeffs.size()) - 1);
  for (int i = 0; i < missing; ++i) acc *= y;
  return acc;
}

namespace poly {

Rat eval_rat(const IntPoly& f, const Rat& r) { return f.eval(r); }

IntPoly derivative(const IntPoly& f) {
  if (f.degree() < 1) throw InvalidInput("derivative of a constant polynomial");
  std::vector<Int> d;
  for (int i = 1; i <= f.degree(); ++i) d.push_back(f.coeffs()[i] * i);
  return IntPoly(std::move(d));
}

Int content(const IntPoly& f) {
  Int g = 0;
  for (const auto& c : f.coeffs()) g = gcd(g, c);
  return g;
}

ContentSplit content_split(const IntPoly& f) {
  Int c = content(f);
  if (f.lc() < 0) c = -c;
  // Content is taken with the sign of the leading coefficient so h has lc > 0.
  Int delta = arith::squarefree_part(c);
  Int s = arith::isqrt(Int(c / delta));
  std::vector<Int> h;
  for (const auto& a : f.coeffs()) h.push_back(a / c);
  return {delta, s, IntPoly(std::move(h))};
}

IntPoly reverse(const IntPoly& f, int n) {
  if (n < f.degree()) throw InvalidInput("reverse: n below the degree");
  std::vector<Int> r(n + 1, 0);
  for (int i = 0; i <= f.degree(); ++i) r[n - i] = f.coeffs()[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return IntPoly(std::move(r));
}

BiForm homogenize(const IntPoly& f, int n) {
  if (n < f.degree()) throw InvalidInput("homogenize: n below the degree");
  return BiForm{f.coeffs(), n};
}

IntPoly taylor_shift(const IntPoly& f, const Int& v) {
  std::vector<Int> c = f.coeffs();
  int n = f.degree();
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) c[j] += v * c[j + 1];
  }
  return IntPoly(std::move(c));
}

std::vector<Int> reduce_mod_p(const IntPoly& f, const Int& p) {
  std::vector<Int> r;
  for (const auto& c : f.coeffs()) r.push_back(arith::mod(c, p));
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<Int> roots_mod_p(const IntPoly& f, const Int& p) {
  if (!mpz_fits_uint_p(p.get_mpz_t())) throw InvalidInput("roots_mod_p: prime too large for a scan");
  unsigned long pu = p.get_ui();
  std::vector<unsigned long> red;
  for (const auto& c : f.coeffs()) red.push_back(mpz_fdiv_ui(c.get_mpz_t(), pu));
  std::vector<Int> roots;
  for (unsigned long x = 0; x < pu; ++x) {
    unsigned long long acc = 0;
    for (std::size_t i = red.size(); i-- > 0;) acc = (acc * x + red[i]) % pu;
    if (acc == 0) roots.emplace_back(x);
  }
  return roots;
}

int genus(const IntPoly& f) {
  if (f.degree() < 1) throw InvalidInput("genus of a constant polynomial");
  return (f.degree() - 1) / 2;
}

bool is_good_prime(const IntPoly& f, const Int& p) {
  if (p == 2 || !arith::is_prime(p)) return false;
  if (mpz_divisible_p(f.lc().get_mpz_t(), p.get_mpz_t())) return false;
  Int disc = discriminant(f);
  return !mpz_divisible_p(disc.get_mpz_t(), p.get_mpz_t());
}

}  // namespace poly
}  // namespace sqf
