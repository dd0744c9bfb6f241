#include <sstream>

#include "sqf/survey_json.hpp"

namespace sqf {

using nlohmann::json;

void to_json(json& j, const SurveyStats& s) {
  j = json{{"rationals", s.rationals},
           {"zero_values", s.zero_values},
           {"sieved_completely", s.sieved_completely},
           {"prime_cofactors", s.prime_cofactors},
           {"square_cofactors", s.square_cofactors},
           {"semiprime_cofactors", s.semiprime_cofactors},
           {"rho_factorizations", s.rho_factorizations},
           {"bignum_values", s.bignum_values},
           {"sieve_bound", s.sieve_bound}};
}

void to_json(json& j, const SEntry& e) { j = json{{"d", e.d.get_str()}, {"r", e.r().to_string()}}; }

void to_json(json& j, const CoverageReport& r) {
  json cov = json::array();
  for (const auto& [p, residues] : r.coverage) {
    std::vector<std::uint64_t> missing;
    std::size_t k = 0;
    for (std::uint64_t x = 1; x < p; ++x) {
      while (k < residues.size() && residues[k] < x) ++k;
      if (k == residues.size() || residues[k] != x) missing.push_back(x);
    }
    cov.push_back({{"p", p}, {"residues", residues}, {"missing_nonzero", missing}});
  }
  j = json{{"schema_version", kReportSchemaVersion},
           {"kind", "coverage"},
           {"config",
            {{"poly", r.config.f.to_csv()},
             {"height", r.config.height},
             {"prime_bound", r.config.prime_bound},
             {"include_negative_r", r.config.include_negative_r},
             {"witness_sample", r.config.witness_sample}}},
           {"s_tilde_size", r.s_tilde_size},
           {"exceptional", r.exceptional},
           {"coverage", std::move(cov)},
           {"stats", r.stats},
           {"witnesses", r.witnesses}};
}

void to_json(json& j, const FamilyReport& r) {
  json members = json::array();
  for (const auto& m : r.members) {
    members.push_back({{"poly", m.f.to_csv()}, {"exceptional", m.exceptional}, {"s_tilde_size", m.s_tilde_size}});
  }
  j = json{{"schema_version", kReportSchemaVersion},
           {"kind", "family"},
           {"config",
            {{"degree_lo", r.config.degree_lo},
             {"degree_hi", r.config.degree_hi},
             {"coeff_bound", r.config.coeff_bound},
             {"height", r.config.height},
             {"prime_bound", r.config.prime_bound},
             {"include_negative_r", r.config.include_negative_r},
             {"sample", r.config.sample},
             {"seed", r.config.seed},
             {"count_only", r.config.count_only}}},
           {"members_scanned", r.members.size()},
           {"members", std::move(members)},
           {"max_exceptional", r.max_exceptional ? json(*r.max_exceptional) : json(nullptr)}};
  if (r.counts) {
    const auto& c = *r.counts;
    j["counts"] = {{"enumerated", c.enumerated},
                   {"negative_lc_canonicalized", c.negative_lc},
                   {"inseparable_skipped", c.inseparable},
                   {"separable", c.separable},
                   {"reference_size", kReferenceFamilySize},
                   {"delta_from_reference",
                    static_cast<std::int64_t>(c.separable) - static_cast<std::int64_t>(kReferenceFamilySize)}};
  }
}

void to_json(json& j, const CountSeries& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.thresholds.size(); ++i) {
    rows.push_back({{"t", s.thresholds[i]},
                    {"E", s.e_counts[i] ? json(*s.e_counts[i]) : json(nullptr)},
                    {"D_tilde", s.d_tilde_counts[i]}});
  }
  j = json{{"schema_version", kReportSchemaVersion},
           {"kind", "count_series"},
           {"p", s.p.get_str()},
           {"m", s.m.get_str()},
           {"height", s.height},
           {"D_tilde_note", "lower bound for D(t): only d reached by r of height <= height are counted"},
           {"series", std::move(rows)}};
}

namespace survey {

std::string coverage_csv(const CoverageReport& r) {
  std::ostringstream out;
  out << "p,exceptional,covered,residues\n";
  std::size_t k = 0;
  for (const auto& [p, residues] : r.coverage) {
    while (k < r.exceptional.size() && r.exceptional[k] < p) ++k;
    const bool exc = k < r.exceptional.size() && r.exceptional[k] == p;
    out << p << ',' << (exc ? 1 : 0) << ',' << residues.size() << ',';
    for (std::size_t i = 0; i < residues.size(); ++i) out << (i ? " " : "") << residues[i];
    out << '\n';
  }
  return out.str();
}

json timing_record(const std::string& command, double seconds, unsigned threads) {
  return json{{"command", command}, {"seconds", seconds}, {"threads", threads}};
}

}  // namespace survey
}  // namespace sqf
