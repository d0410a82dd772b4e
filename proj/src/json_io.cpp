#include "rpf/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace rpf {

using nlohmann::json;

void to_json(json& j, const Rat& r) { j = json{{"num", r.num}, {"den", r.den}}; }

void from_json(const json& j, Rat& r) {
  if (j.is_number_integer()) {
    r = Rat(j.get<long long>());
    return;
  }
  r = Rat(j.at("num").get<long long>(), j.value("den", 1LL));
}

void to_json(json& j, const ParkingWord& w) {
  j = json{{"m", w.m}, {"n", w.n()}, {"letters", w.letters}};
}

void from_json(const json& j, ParkingWord& w) {
  ParkingWord parsed = make_word(j.at("m").get<int>(), j.at("letters").get<std::vector<int>>());
  if (j.contains("n") && j.at("n").get<int>() != parsed.n())
    throw std::invalid_argument("word: n does not match the letter count");
  w = std::move(parsed);
}

void to_json(json& j, const DyckPath& d) {
  j = json{{"m", d.m}, {"n", d.n()}, {"heights", d.heights}};
}

void from_json(const json& j, DyckPath& d) {
  d = make_dyck_path(j.at("m").get<int>(), j.at("heights").get<std::vector<int>>());
}

void to_json(json& j, const WeylPoint& x) {
  j = json{{"m", x.m}, {"num", x.num}, {"den", x.den}};
}

void from_json(const json& j, WeylPoint& x) {
  x = make_weyl_point(j.at("m").get<int>(), j.at("num").get<std::vector<long long>>(),
                      j.value("den", 1LL));
}

void to_json(json& j, const AlcovePoint& x) {
  j = json{{"m", x.m}, {"num", x.num}, {"den", x.den}};
}

void from_json(const json& j, AlcovePoint& x) {
  x = AlcovePoint{j.at("m").get<int>(), j.at("num").get<std::vector<long long>>(),
                  j.value("den", 1LL)};
}

void to_json(json& j, const ActionTrace& t) {
  j = json::array();
  for (const ActionStep& s : t.steps)
    j.push_back(json{{"letter", s.letter},
                     {"pre_sort", s.pre_sort_num},
                     {"den", s.den},
                     {"sigma", s.sigma}});
}

void to_json(json& j, const AffineWindow& w) {
  j = json{{"n", w.n}, {"window", w.window}};
}

void from_json(const json& j, AffineWindow& w) {
  AffineWindow parsed{j.at("n").get<int>(), j.at("window").get<std::vector<long long>>()};
  validate_window(parsed);
  w = std::move(parsed);
}

void to_json(json& j, const InvariantSet& s) {
  j = json{{"min", s.min}, {"gaps", s.gaps}};
}

void from_json(const json& j, InvariantSet& s) {
  s = make_invariant_set(j.at("min").get<long long>(),
                         j.at("gaps").get<std::vector<long long>>());
}

void to_json(json& j, const Skeleton& s) {
  j = json::array();
  for (const SkeletonEntry& e : s)
    j.push_back(json{{"v", e.value},
                     {"k", e.kind == SkeletonKind::generator ? "gen" : "cogen"}});
}

void to_json(json& j, const Decomposition& d) {
  j = json{{"d", d.d},
           {"parts", d.parts},
           {"shifts", d.shifts},
           {"shift_mean", d.shift_mean}};
}

void to_json(json& j, const OrbitReport& r) {
  j = json{{"preperiod", r.preperiod},
           {"terminal", r.terminal},
           {"steps", r.steps_used}};
  if (r.period)
    j["period"] = *r.period;
  else
    j["period"] = nullptr;
}

void to_json(json& j, const SpInvertResult& r) {
  j = json{{"V", r.V}, {"N", r.N}, {"window", r.window.window}};
}

void to_json(json& j, const SuiteReport& r) {
  j = json{{"suite", r.suite},   {"params", r.params},   {"cases", r.cases},
           {"failures", r.failures}, {"wall_ms", r.wall_ms}, {"seed", r.seed},
           {"passed", r.passed()}};
}

InvariantSet parse_set(const std::string& text) {
  std::string t = text;
  size_t first = t.find_first_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("set: empty text");
  if (t[first] == '{') {
    json j = json::parse(t);
    return j.get<InvariantSet>();
  }
  // compact "min:g1,g2,..."; "0:" means no gaps
  size_t colon = t.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("set: expected 'min:gaps' or a JSON object");
  long long min = std::stoll(t.substr(0, colon));
  std::vector<long long> gaps;
  std::string rest = t.substr(colon + 1);
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    gaps.push_back(std::stoll(item));
  }
  return make_invariant_set(min, std::move(gaps));
}

std::string render_set(const InvariantSet& s) {
  std::string out = std::to_string(s.min) + ":";
  for (size_t i = 0; i < s.gaps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.gaps[i]);
  }
  return out;
}

AffineWindow parse_window(const std::string& text) {
  json j = json::parse(text);
  if (j.is_array()) {
    AffineWindow w{static_cast<int>(j.size()), j.get<std::vector<long long>>()};
    validate_window(w);
    return w;
  }
  return j.get<AffineWindow>();
}

}  // namespace rpf
