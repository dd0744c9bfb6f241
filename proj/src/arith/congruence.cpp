#include "sqf/arith.hpp"

namespace sqf {

Congruence::Congruence(const Int& r, const Int& m) : modulus(m) {
  if (m < 1) throw InvalidInput("congruence modulus must be positive, got " + m.get_str());
  residue = arith::mod(r, m);
}

namespace arith {

Int crt(std::span<const Congruence> congruences) {
  Int n = 0, m = 1;
  for (const auto& c : congruences) {
    if (gcd(m, c.modulus) != 1) {
      throw InvalidInput("crt: moduli are not pairwise coprime (" + c.modulus.get_str() + ")");
    }
    // n + m*t == r (mod c.modulus)
    Int t = mod(Int((c.residue - n) * mod_inverse(mod(m, c.modulus), c.modulus)), c.modulus);
    n += m * t;
    m *= c.modulus;
  }
  return mod(n, m);
}

PrimeProgression::PrimeProgression(std::span<const Congruence> congruences, std::uint64_t budget)
    : modulus_(1), budget_(budget) {
  for (const auto& c : congruences) {
    if (gcd(c.residue, c.modulus) != 1 && c.modulus != 1) {
      throw InvalidInput("prime search: residue " + c.residue.get_str() +
                         " is not coprime to modulus " + c.modulus.get_str());
    }
    modulus_ *= c.modulus;
  }
  current_ = crt(congruences);
}

Int PrimeProgression::next() {
  while (examined_ < budget_) {
    Int candidate = current_;
    current_ += modulus_;
    ++examined_;
    if (is_prime(candidate)) return candidate;
  }
  throw BudgetExhausted("no prime found within " + std::to_string(budget_) +
                        " candidates of the progression modulo " + modulus_.get_str());
}

Int prime_in_ap(std::span<const Congruence> congruences, std::uint64_t skip,
                std::uint64_t budget) {
  PrimeProgression stream(congruences, budget);
  Int q = stream.next();
  for (std::uint64_t i = 0; i < skip; ++i) q = stream.next();
  return q;
}

}  // namespace arith
}  // namespace sqf
