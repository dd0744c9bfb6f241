#include <cstdlib>
#include <numeric>

#include "sqf/survey.hpp"

namespace sqf {

void SurveyConfig::validate() const {
  if (height < 1) throw InvalidInput("height bound must be at least 1");
  if (prime_bound < 3) throw InvalidInput("prime bound must be at least 3");
  if (height > (std::uint64_t(1) << 31)) throw InvalidInput("height bound too large");
  if (!poly::is_separable(f)) throw InvalidInput("polynomial is not separable: " + f.to_string());
}

std::uint64_t SEntry::height() const {
  std::uint64_t abs_a = a < 0 ? static_cast<std::uint64_t>(-a) : static_cast<std::uint64_t>(a);
  return std::max(abs_a, b);
}

Rat SEntry::r() const { return Rat(Int(static_cast<long>(a)), Int(static_cast<unsigned long>(b))); }

std::vector<Int> SurveyResult::s_tilde() const {
  std::vector<Int> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.d);
  return out;
}

namespace survey {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SQF_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<unsigned>(v);
    throw InvalidInput(std::string("SQF_THREADS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

void for_each_height(std::uint64_t B, bool include_negative,
                     const std::function<void(std::int64_t, std::uint64_t)>& fn) {
  if (B < 1) throw InvalidInput("height bound must be at least 1");
  const auto lim = static_cast<std::int64_t>(B);
  for (std::uint64_t b = 1; b <= B; ++b) {
    for (std::int64_t a = include_negative ? -lim : 0; a <= lim; ++a) {
      if (std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), b) == 1) fn(a, b);
    }
  }
}

std::vector<Rat> enumerate_heights(std::uint64_t B, bool include_negative) {
  std::vector<Rat> out;
  for_each_height(B, include_negative, [&](std::int64_t a, std::uint64_t b) {
    out.emplace_back(Int(static_cast<long>(a)), Int(static_cast<unsigned long>(b)));
  });
  return out;
}

}  // namespace survey
}  // namespace sqf
