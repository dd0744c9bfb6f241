#include "sqf/local_json.hpp"

namespace sqf {
namespace {

using nlohmann::json;

Int int_from(const json& j) {
  Int v;
  if (v.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("bad integer in report: " + j.dump());
  return v;
}

Rat rat_from(const json& j) { return Rat::parse(j.get<std::string>()); }

}  // namespace

void to_json(json& j, const HenselPoint& p) {
  j = json{{"x", p.x.to_string()}, {"y", p.y.to_string()}, {"precision", p.precision}};
}

void from_json(const json& j, HenselPoint& p) {
  p.x = rat_from(j.at("x"));
  p.y = rat_from(j.at("y"));
  p.precision = j.at("precision").get<int>();
}

void to_json(json& j, const Certificate& c) {
  j = json::object();
  j["kind"] = certificate_kind(c);
  if (auto* p = std::get_if<HenselPoint>(&c)) {
    j["point"] = *p;
  } else if (auto* inf = std::get_if<InfinityPoint>(&c)) {
    j["point"] = inf->point;
  } else if (auto* w = std::get_if<RealWitness>(&c)) {
    j["r"] = w->r.to_string();
  } else if (auto* t = std::get_if<ExhaustionTranscript>(&c)) {
    j["depth_cap"] = t->depth_cap;
    json nodes = json::array();
    for (const auto& n : t->nodes) {
      nodes.push_back({{"chart", n.chart},
                       {"center", n.center.get_str()},
                       {"exponent", n.exponent},
                       {"v", n.v},
                       {"recursed", n.recursed}});
    }
    j["nodes"] = std::move(nodes);
  } else if (auto* g = std::get_if<GoodReductionGuarantee>(&c)) {
    j["n0"] = g->n0.get_str();
  }
}

void from_json(const json& j, Certificate& c) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "HenselPoint") {
    c = j.at("point").get<HenselPoint>();
  } else if (kind == "InfinityPoint") {
    c = InfinityPoint{j.at("point").get<HenselPoint>()};
  } else if (kind == "RealWitness") {
    c = RealWitness{rat_from(j.at("r"))};
  } else if (kind == "NoRealPoint") {
    c = NoRealPoint{};
  } else if (kind == "ExhaustionTranscript") {
    ExhaustionTranscript t;
    t.depth_cap = j.at("depth_cap").get<int>();
    for (const auto& n : j.at("nodes")) {
      t.nodes.push_back({n.at("chart").get<int>(), int_from(n.at("center")), n.at("exponent").get<int>(),
                         n.at("v").get<long>(), n.at("recursed").get<std::vector<std::uint64_t>>()});
    }
    c = std::move(t);
  } else if (kind == "GoodReductionGuarantee") {
    c = GoodReductionGuarantee{int_from(j.at("n0"))};
  } else if (kind == "NoRootGoodPrime") {
    c = NoRootGoodPrime{};
  } else {
    throw InvalidInput("unknown certificate kind: " + kind);
  }
}

void to_json(json& j, const TwistLocalReport& r) {
  j = json{{"place", r.place()}, {"solvable", r.solvable}, {"certificate", r.certificate}};
}

void from_json(const json& j, TwistLocalReport& r) {
  const auto place = j.at("place").get<std::string>();
  if (place == "real") {
    r.ell.reset();
  } else {
    r.ell = int_from(j.at("place"));
  }
  r.solvable = j.at("solvable").get<bool>();
  r.certificate = j.at("certificate").get<Certificate>();
}

void to_json(json& j, const EverywhereLocalTwist& t) {
  j = json{{"d", t.d.get_str()}, {"q", t.q.get_str()}, {"t", t.t.get_str()}, {"reports", t.reports}};
}

}  // namespace sqf
