#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sqf/construct.hpp"
#include "sqf/local_json.hpp"
#include "sqf/survey_json.hpp"

using nlohmann::json;
using namespace sqf;

namespace {

Int parse_int(const std::string& s) {
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0) throw InvalidInput("not an integer: '" + s + "'");
  return v;
}

std::vector<std::uint64_t> parse_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    Int v = parse_int(item);
    if (v < 0 || !v.fits_ulong_p()) throw InvalidInput("bad list entry: '" + item + "'");
    out.push_back(v.get_ui());
  }
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  std::string lo = dots == std::string::npos ? s : s.substr(0, dots);
  std::string hi = dots == std::string::npos ? s : s.substr(dots + 2);
  Int a = parse_int(lo), b = parse_int(hi);
  if (!a.fits_sint_p() || !b.fits_sint_p()) throw InvalidInput("bad degree range: " + s);
  return {static_cast<int>(a.get_si()), static_cast<int>(b.get_si())};
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << j.dump(2) << '\n';
}

json witness_json(const ClassWitness& w) { return {{"r", w.r.to_string()}, {"d", w.d.get_str()}}; }

json element_json(const ClassElement& e) {
  json j{{"d", e.d.get_str()}, {"r", e.r.to_string()}};
  if (e.q) j["q"] = e.q->get_str();
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squarefree parts of polynomial values and local solvability of quadratic twists"};
  app.require_subcommand(1);

  std::string rat_text;
  auto* sqfree = app.add_subcommand("sqfree", "Squarefree part of a rational");
  sqfree->add_option("rat", rat_text, "a or a/b")->required();

  std::string poly_text, out_path, csv_path;
  std::uint64_t height = 0, prime_bound = 0, sieve_bound = 0;
  unsigned threads = 0;
  bool no_negatives = false;
  auto* scan = app.add_subcommand("scan", "Exceptional primes of a height-bounded slice");
  scan->add_option("--poly", poly_text, "ascending coefficients, comma separated")->required();
  scan->add_option("--height", height, "height bound B")->required();
  scan->add_option("--prime-bound", prime_bound, "largest prime examined")->required();
  scan->add_flag("--no-negatives", no_negatives, "only r >= 0");
  scan->add_option("--threads", threads, "worker threads (default: SQF_THREADS or 1)");
  scan->add_option("--sieve-bound", sieve_bound, "trial sieve limit for values");
  scan->add_option("--out", out_path, "report file")->required();
  scan->add_option("--csv", csv_path, "optional CSV projection");

  std::string prime_text;
  auto* cov = app.add_subcommand("coverage", "Residues mod p of a height-bounded slice");
  cov->add_option("--poly", poly_text)->required();
  cov->add_option("--height", height)->required();
  cov->add_option("--prime", prime_text)->required();
  cov->add_option("--threads", threads);

  std::string deg_text;
  std::int64_t coeff_bound = 0;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
  bool count_only = false;
  auto* fam = app.add_subcommand("family-scan", "Scan a family of small-coefficient polynomials");
  fam->add_option("--deg", deg_text, "lo..hi")->required();
  fam->add_option("--coeff-bound", coeff_bound)->required();
  fam->add_option("--height", height)->required();
  fam->add_option("--prime-bound", prime_bound)->required();
  fam->add_option("--sample", sample, "scan a seeded random sample of this size");
  fam->add_option("--seed", seed);
  fam->add_flag("--count-only", count_only, "only count members");
  fam->add_flag("--no-negatives", no_negatives);
  fam->add_option("--threads", threads);
  fam->add_option("--out", out_path)->required();

  std::string d_text, place_text;
  auto* loc = app.add_subcommand("local", "Local solvability of d y^2 = f(x) at one place");
  loc->add_option("--poly", poly_text)->required();
  loc->add_option("--d", d_text)->required();
  loc->add_option("--place", place_text, "prime or 'real'")->required();

  std::string mode, m_text = "1";
  std::size_t count = 1;
  bool experimental = false;
  auto* wit = app.add_subcommand("witness", "Explicit class witnesses");
  wit->add_option("--poly", poly_text)->required();
  wit->add_option("--prime", prime_text)->required();
  wit->add_option("--mode", mode)
      ->required()
      ->check(CLI::IsMember({"zero-class", "odd-valuation", "multi", "degree1", "degree2", "everywhere-local"}));
  wit->add_option("--m", m_text, "residue class");
  wit->add_option("--count", count);
  wit->add_flag("--experimental", experimental, "allow p below n0 for everywhere-local");

  std::string thresholds_text;
  auto* cnt = app.add_subcommand("count", "E(t) and a lower bound for D(t) in one class");
  cnt->add_option("--poly", poly_text)->required();
  cnt->add_option("--prime", prime_text)->required();
  cnt->add_option("--m", m_text)->required();
  cnt->add_option("--height", height)->required();
  cnt->add_option("--thresholds", thresholds_text)->required();
  cnt->add_option("--threads", threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (*sqfree) {
      std::cout << arith::squarefree_part(Rat::parse(rat_text)).get_str() << '\n';
    } else if (*scan) {
      SurveyConfig cfg;
      cfg.f = IntPoly::parse(poly_text);
      cfg.height = height;
      cfg.prime_bound = prime_bound;
      cfg.include_negative_r = !no_negatives;
      cfg.threads = threads;
      cfg.sieve_bound = sieve_bound;
      auto rep = survey::exceptional_primes(cfg);
      write_json(out_path, json(rep));
      write_json(out_path + ".timing.json",
                 survey::timing_record("scan", rep.seconds, survey::resolve_threads(threads)));
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << survey::coverage_csv(rep);
      }
      std::cout << "exceptional:";
      for (auto p : rep.exceptional) std::cout << ' ' << p;
      std::cout << "\n|S~| = " << rep.s_tilde_size << '\n';
    } else if (*cov) {
      SurveyConfig cfg;
      cfg.f = IntPoly::parse(poly_text);
      cfg.height = height;
      cfg.threads = threads;
      Int p = parse_int(prime_text);
      if (!arith::is_prime(p) || !p.fits_ulong_p()) throw InvalidInput("--prime must be a prime below 2^64");
      auto res = survey::s_tilde(cfg);
      auto residues = survey::coverage(res.s_tilde(), p.get_ui());
      for (std::size_t i = 0; i < residues.size(); ++i) std::cout << (i ? " " : "") << residues[i];
      std::cout << '\n';
    } else if (*fam) {
      FamilyScanConfig cfg;
      std::tie(cfg.degree_lo, cfg.degree_hi) = parse_range(deg_text);
      cfg.coeff_bound = coeff_bound;
      cfg.height = height;
      cfg.prime_bound = prime_bound;
      cfg.include_negative_r = !no_negatives;
      cfg.threads = threads;
      cfg.sample = sample;
      cfg.seed = seed;
      cfg.count_only = count_only;
      auto rep = survey::family_scan(cfg);
      write_json(out_path, json(rep));
      write_json(out_path + ".timing.json",
                 survey::timing_record("family-scan", rep.seconds, survey::resolve_threads(threads)));
      if (rep.counts) std::cout << "separable members (lc > 0): " << rep.counts->separable << '\n';
      std::cout << "scanned: " << rep.members.size() << ", max exceptional: "
                << (rep.max_exceptional ? std::to_string(*rep.max_exceptional) : "none") << '\n';
    } else if (*loc) {
      IntPoly f = IntPoly::parse(poly_text);
      Int d = parse_int(d_text);
      TwistLocalReport rep = place_text == "real" ? local::has_real_point(f, d)
                                                  : local::has_nontrivial_Ql_point(f, d, parse_int(place_text));
      json j = rep;
      j["verified"] = local::verify_report(f, d, rep);
      std::cout << j.dump(2) << '\n';
    } else if (*wit) {
      IntPoly f = IntPoly::parse(poly_text);
      Int p = parse_int(prime_text);
      Int m = parse_int(m_text);
      json out = json::array();
      if (mode == "zero-class") {
        auto v = classify::zero_class_decide(f, p);
        json j{{"kind", to_string(v.kind)}};
        if (v.witness) j["witness"] = witness_json(*v.witness);
        out = j;
      } else if (mode == "odd-valuation") {
        Int n = classify::witness_odd_valuation(f, p);
        out = json{{"n", n.get_str()}, {"f(n)", f.eval(n).get_str()}, {"ord", arith::ord_p(f.eval(n), p)}};
      } else if (mode == "multi") {
        std::vector<Int> T{p};
        for (const auto& w : classify::divisible_class_elements(f, T, count)) out.push_back(witness_json(w));
      } else if (mode == "degree1") {
        for (const auto& e : construct::gen_degree1(f, p, m, count)) out.push_back(element_json(e));
      } else if (mode == "degree2") {
        for (const auto& e : construct::gen_degree2(f, p, m, count)) out.push_back(element_json(e));
      } else {
        EverywhereOptions opts;
        opts.experimental = experimental;
        for (const auto& t : local::everywhere_local_d(f, p, m, count, opts)) out.push_back(json(t));
      }
      std::cout << out.dump(2) << '\n';
    } else if (*cnt) {
      auto cs = survey::count_series(IntPoly::parse(poly_text), parse_int(prime_text), parse_int(m_text),
                                     parse_list(thresholds_text), height, threads);
      std::cout << json(cs).dump(2) << '\n';
    }
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
