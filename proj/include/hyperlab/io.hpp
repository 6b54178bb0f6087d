#ifndef HYPERLAB_IO_HPP
#define HYPERLAB_IO_HPP

#include <string>

#include <json.hpp>

#include "hyperlab/oracle.hpp"

namespace hyperlab {

using json = nlohmann::json;

// Rationals serialize as reduced "p/q" strings, intervals as two-element
// arrays ["p/q","r/s"].
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);
json iv_to_json(const IntervalValue& v);
IntervalValue iv_from_json(const json& j);

/// Interval from the CLI flag syntax "p/q,r/s".
IntervalValue parse_interval_flag(const std::string& text);

/// Structure file: {"m","n","size","zero","f","g"}. Each table is either an
/// entry list [{"args":[...],"out":...}] or {"default":..,"exceptions":[...]};
/// f outputs are element arrays, g outputs single elements. Unlisted f
/// entries fall back to the entry at the sorted tuple (one representative per
/// multiset suffices for commutative tables), then to the default; a gap is a
/// parse error.
KrasnerHyperring structure_from_json(const json& j);
json structure_to_json(const KrasnerHyperring& R);

/// Fuzzy-set file: {"size","mu":[{"elem":..,"value":["p/q","r/s"]}]};
/// omitted elements default to [0,0].
IVFuzzySet fuzzy_from_json(const json& j, int expected_size = -1);
json fuzzy_to_json(const IVFuzzySet& A);

json axiom_report_to_json(const AxiomReport& rep);
json class_report_to_json(const ClassReport& rep);
json ideal_enumeration_to_json(const IdealEnumeration& e);
json theorem_result_to_json(const TheoremResult& r);

const char* variant_name(Variant v);
Variant parse_variant(const std::string& name);

json load_json_file(const std::string& path);

} // namespace hyperlab

#endif
