#pragma once

#include <json.hpp>

#include "rpf/invset.hpp"
#include "rpf/oracle.hpp"
#include "rpf/pak_stanley.hpp"
#include "rpf/weyl.hpp"
#include "rpf/words.hpp"

// Wire formats:
//   word       {"m":4,"n":3,"letters":[0,1,2]}
//   point      {"m":3,"num":[-4,0,4],"den":1}
//   trace      [{"letter":0,"pre_sort":[-2,-1,3],"den":1,"sigma":[0,1,2]},...]
//   window     {"n":3,"window":[0,4,-1]}
//   set        {"min":0,"gaps":[1,2,4]}
//   skeleton   [{"v":-4,"k":"cogen"},...]
//   rational   {"num":-7,"den":2}
namespace rpf {

void to_json(nlohmann::json& j, const Rat& r);
void from_json(const nlohmann::json& j, Rat& r);

void to_json(nlohmann::json& j, const ParkingWord& w);
void from_json(const nlohmann::json& j, ParkingWord& w);

void to_json(nlohmann::json& j, const DyckPath& d);
void from_json(const nlohmann::json& j, DyckPath& d);

void to_json(nlohmann::json& j, const WeylPoint& x);
void from_json(const nlohmann::json& j, WeylPoint& x);

void to_json(nlohmann::json& j, const AlcovePoint& x);
void from_json(const nlohmann::json& j, AlcovePoint& x);

void to_json(nlohmann::json& j, const ActionTrace& t);

void to_json(nlohmann::json& j, const AffineWindow& w);
void from_json(const nlohmann::json& j, AffineWindow& w);

void to_json(nlohmann::json& j, const InvariantSet& s);
void from_json(const nlohmann::json& j, InvariantSet& s);

void to_json(nlohmann::json& j, const Skeleton& s);
void to_json(nlohmann::json& j, const Decomposition& d);
void to_json(nlohmann::json& j, const OrbitReport& r);
void to_json(nlohmann::json& j, const SpInvertResult& r);
void to_json(nlohmann::json& j, const SuiteReport& r);

// Accepts the JSON object form or the compact "min:g1,g2,..." form.
InvariantSet parse_set(const std::string& text);
std::string render_set(const InvariantSet& s);

// Accepts {"n":...,"window":[...]} or a bare list "[0,4,-1]".
AffineWindow parse_window(const std::string& text);

}  // namespace rpf
