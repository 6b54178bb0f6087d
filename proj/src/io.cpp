#include "hyperlab/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

namespace hyperlab {

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

json iv_to_json(const IntervalValue& v) {
    return json::array({v.lo().str(), v.hi().str()});
}

IntervalValue iv_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("interval must be a two-element array");
    return IntervalValue::make(rational_from_json(j[0]), rational_from_json(j[1]));
}

IntervalValue parse_interval_flag(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("interval flag must be \"p/q,r/s\"");
    return IntervalValue::make(Rational::parse(text.substr(0, comma)),
                               Rational::parse(text.substr(comma + 1)));
}

namespace {

int get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("missing or non-integer field: ") + key);
    return j[key].get<int>();
}

std::vector<Element> get_args(const json& j, int arity, int size) {
    if (!j.is_array() || static_cast<int>(j.size()) != arity)
        throw ParseError("entry args must be an array of arity length");
    std::vector<Element> out;
    for (const json& x : j) {
        int v = x.get<int>();
        if (v < 0 || v >= size) throw ParseError("element out of range in table entry");
        out.push_back(v);
    }
    return out;
}

ElemSet get_set(const json& j, int size) {
    if (!j.is_array() || j.empty()) throw ParseError("f output must be a nonempty element array");
    ElemSet s;
    for (const json& x : j) {
        int v = x.get<int>();
        if (v < 0 || v >= size) throw ParseError("element out of range in f output");
        s.insert(v);
    }
    return s;
}

std::uint64_t tuple_rank(std::span<const Element> t, int size) {
    std::uint64_t r = 0;
    for (Element e : t) r = r * size + static_cast<std::uint64_t>(e);
    return r;
}

template <typename Fn>
void for_each_tuple(int length, int size, Fn&& fn) {
    std::vector<Element> t(length, 0);
    while (true) {
        fn(std::span<const Element>(t));
        int i = length - 1;
        while (i >= 0 && ++t[i] == size) t[i--] = 0;
        if (i < 0) return;
    }
}

/// Collects explicit entries plus an optional default from either table shape.
void parse_table_shape(const json& j, const char* key, int arity, int size,
                       std::map<std::uint64_t, json>& entries, json& dflt) {
    const json& tbl = j.at(key);
    const json* list = nullptr;
    if (tbl.is_array()) {
        list = &tbl;
    } else if (tbl.is_object()) {
        if (tbl.contains("default")) dflt = tbl["default"];
        if (tbl.contains("exceptions")) list = &tbl["exceptions"];
    } else {
        throw ParseError(std::string(key) + " must be an entry list or {default, exceptions}");
    }
    if (list) {
        for (const json& entry : *list) {
            std::vector<Element> args = get_args(entry.at("args"), arity, size);
            entries[tuple_rank(args, size)] = entry.at("out");
        }
    }
}

} // namespace

KrasnerHyperring structure_from_json(const json& j) {
    try {
        int m = get_int(j, "m");
        int n = get_int(j, "n");
        int size = get_int(j, "size");
        int zero = get_int(j, "zero");
        if (m < 2 || n < 2 || size < 1) throw ParseError("bad arities or size");

        std::map<std::uint64_t, json> fentries;
        json fdefault;
        parse_table_shape(j, "f", m, size, fentries, fdefault);

        std::vector<ElemSet> f;
        f.reserve(static_cast<std::size_t>(std::pow(size, m)));
        std::vector<Element> sorted(m);
        for_each_tuple(m, size, [&](std::span<const Element> t) {
            std::uint64_t r = tuple_rank(t, size);
            auto it = fentries.find(r);
            if (it == fentries.end()) {
                // Commutative tables may list one representative per multiset.
                sorted.assign(t.begin(), t.end());
                std::sort(sorted.begin(), sorted.end());
                it = fentries.find(tuple_rank(sorted, size));
            }
            if (it != fentries.end()) {
                f.push_back(get_set(it->second, size));
            } else if (!fdefault.is_null()) {
                f.push_back(get_set(fdefault, size));
            } else {
                throw ParseError("f entry missing and no default given");
            }
        });

        std::map<std::uint64_t, json> gentries;
        json gdefault;
        parse_table_shape(j, "g", n, size, gentries, gdefault);

        std::vector<Element> g;
        g.reserve(static_cast<std::size_t>(std::pow(size, n)));
        for_each_tuple(n, size, [&](std::span<const Element> t) {
            auto it = gentries.find(tuple_rank(t, size));
            const json* out = nullptr;
            if (it != gentries.end()) out = &it->second;
            else if (!gdefault.is_null()) out = &gdefault;
            else throw ParseError("g entry missing and no default given");
            int v = out->get<int>();
            if (v < 0 || v >= size) throw ParseError("g output out of range");
            g.push_back(v);
        });

        return KrasnerHyperring(HyperOpTable(m, size, std::move(f)),
                                NaryOpTable(n, size, std::move(g)), zero);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad structure file: ") + e.what());
    }
}

json structure_to_json(const KrasnerHyperring& R) {
    json f = json::array();
    std::vector<Element> t(R.m(), 0);
    for_each_tuple(R.m(), R.size(), [&](std::span<const Element> tu) {
        json entry;
        entry["args"] = std::vector<int>(tu.begin(), tu.end());
        entry["out"] = R.f().at(tu).elements();
        f.push_back(entry);
    });
    json g = json::array();
    for_each_tuple(R.n(), R.size(), [&](std::span<const Element> tu) {
        json entry;
        entry["args"] = std::vector<int>(tu.begin(), tu.end());
        entry["out"] = R.g().at(tu);
        g.push_back(entry);
    });
    return json{{"m", R.m()}, {"n", R.n()}, {"size", R.size()}, {"zero", R.zero()},
                {"f", f}, {"g", g}};
}

IVFuzzySet fuzzy_from_json(const json& j, int expected_size) {
    try {
        int size = get_int(j, "size");
        if (size < 1) throw ParseError("bad fuzzy set size");
        if (expected_size >= 0 && size != expected_size)
            throw CarrierMismatch("fuzzy set size does not match the structure");
        IVFuzzySet A(size, IntervalValue::bottom());
        if (j.contains("mu")) {
            for (const json& entry : j.at("mu")) {
                int e = entry.at("elem").get<int>();
                if (e < 0 || e >= size) throw ParseError("mu element out of range");
                A.set(e, iv_from_json(entry.at("value")));
            }
        }
        return A;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad fuzzy-set file: ") + e.what());
    }
}

json fuzzy_to_json(const IVFuzzySet& A) {
    json mu = json::array();
    for (int e = 0; e < A.size(); ++e)
        mu.push_back(json{{"elem", e}, {"value", iv_to_json(A.at(e))}});
    return json{{"size", A.size()}, {"mu", mu}};
}

json axiom_report_to_json(const AxiomReport& rep) {
    json axioms = json::object();
    for (const auto& [name, check] : rep.items()) {
        json c{{"ok", check->ok}};
        if (!check->ok) c["witness"] = check->witness;
        if (!check->note.empty()) c["note"] = check->note;
        axioms[name] = c;
    }
    return json{{"ok", rep.all_ok()}, {"axioms", axioms}};
}

json class_report_to_json(const ClassReport& rep) {
    json out{{"ok", rep.ok}};
    if (!rep.ok) {
        out["condition"] = rep.condition;
        switch (rep.kind) {
            case ConditionKind::Sum: out["kind"] = "sum"; break;
            case ConditionKind::Negation: out["kind"] = "negation"; break;
            case ConditionKind::Product: out["kind"] = "product"; break;
            case ConditionKind::Level: out["kind"] = "level"; break;
        }
        json w;
        w["tuple"] = rep.witness->tuple;
        if (rep.witness->target) w["target"] = *rep.witness->target;
        if (rep.witness->threshold) w["threshold"] = iv_to_json(*rep.witness->threshold);
        if (rep.witness->subset) w["subset"] = rep.witness->subset->elements();
        w["detail"] = rep.witness->detail;
        out["witness"] = w;
    }
    return out;
}

json ideal_enumeration_to_json(const IdealEnumeration& e) {
    json ideals = json::array();
    for (const ElemSet& s : e.ideals) ideals.push_back(s.elements());
    return json{{"complete", e.complete}, {"ideals", ideals}};
}

json theorem_result_to_json(const TheoremResult& r) {
    json failures = json::array();
    for (const TheoremFailure& f : r.failures) {
        json jf{{"structure", f.structure}, {"detail", f.detail}};
        if (f.instance >= 0) jf["instance"] = f.instance;
        failures.push_back(jf);
    }
    return json{{"theorem", r.id},       {"trials", r.trials},
                {"failures", failures},  {"failure_count", r.failure_count},
                {"seed", r.seed},        {"variant", variant_name(r.variant)}};
}

const char* variant_name(Variant v) {
    return v == Variant::Corrected ? "corrected" : "paper-literal";
}

Variant parse_variant(const std::string& name) {
    if (name == "corrected") return Variant::Corrected;
    if (name == "paper-literal") return Variant::PaperLiteral;
    throw ParseError("unknown variant: " + name);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("cannot parse " + path + ": " + e.what());
    }
}

} // namespace hyperlab
