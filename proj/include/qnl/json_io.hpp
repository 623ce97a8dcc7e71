#ifndef QNL_JSON_IO_HPP
#define QNL_JSON_IO_HPP

#include "qnl/pfaffian_locus.hpp"
#include "qnl/tensor.hpp"
#include "qnl/thooft.hpp"

#include <json.hpp>

namespace qnl {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error { explicit ParseError(const std::string& m) : std::runtime_error(m) {} };

// scalars serialize as "p" or "p/q" in lowest terms
json scalar_to_json(const Rat& r);
Rat scalar_from_json(const json& j);

json matrix_to_json(const Mat<Rat>& m);
Mat<Rat> matrix_from_json(const json& j);

// "qnl-net-v1": { "n": int, "components": { "e12": [[...]], ..., "e34": ... } }
json net_to_json(const Net& a);
Net net_from_json(const json& j);

json dualnet_to_json(const DualNet& d);  // kind qnl-dualnet-v1
DualNet dualnet_from_json(const json& j);

json phimap_to_json(const PhiMap& p);    // kind qnl-phimap-v1
PhiMap phimap_from_json(const json& j);

json mixedmap_to_json(const MixedMap& c); // kind qnl-mixedmap-v1
MixedMap mixedmap_from_json(const json& j);

// { "n": int, "terms": [ { "h": [...], "w": {"e12": ...} } ] }
json thooft_to_json(const THooftDatum& d);
THooftDatum thooft_from_json(const json& j);

// { "m_plus_1": int, "A12": [[...]], ..., "A34": [[...]] }
json quadblock_to_json(const QuadBlockSkew& b);
QuadBlockSkew quadblock_from_json(const json& j);

json twoform_dual_to_json(const TwoFormDual& w);
TwoFormDual twoform_dual_from_json(const json& j);
TwoForm twoform_from_json(const json& j);

const char* wedge_key(int k); // "e12" ... "e34"

} // namespace qnl

#endif
