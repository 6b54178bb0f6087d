// Batch front door: load structures and fuzzy sets, validate, enumerate,
// classify, tabulate levels, generate corpora and run the verification suite.
// Exit codes: 0 verdict true / all pass, 1 verdict false / counterexample,
// 2 input error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hyperlab/io.hpp"

using namespace hyperlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

ValidateOptions validate_options_from_env() {
    ValidateOptions opts;
    if (const char* cap = std::getenv("HYPERLAB_MAX_ATOMIC")) {
        try {
            opts.max_atomic = std::stoull(cap);
        } catch (const std::exception&) {
            throw ParseError("HYPERLAB_MAX_ATOMIC is not an integer");
        }
    }
    return opts;
}

KrasnerHyperring load_structure_arg(const std::string& arg) {
    // Catalog names are accepted alongside file paths.
    for (CatalogEntry& e : default_catalog())
        if (e.name == arg) return std::move(e.ring);
    KrasnerHyperring R = structure_from_json(load_json_file(arg));
    AxiomReport rep = R.validate(validate_options_from_env());
    if (!rep.all_ok()) {
        std::string what = "structure fails validation:";
        for (const auto& [name, check] : rep.items())
            if (!check->ok) what += " " + name;
        throw Error(what);
    }
    return R;
}

void print_class_report(const ClassReport& rep, bool as_json) {
    if (as_json) {
        std::cout << class_report_to_json(rep).dump(2) << "\n";
        return;
    }
    if (rep.ok) {
        std::cout << "verdict: holds\n";
    } else {
        std::cout << "verdict: fails at condition " << rep.condition << "\n"
                  << "  " << rep.witness->detail << "\n";
    }
}

struct CommonArgs {
    bool as_json = false;
};

int cmd_validate(const std::string& file, bool as_json) {
    KrasnerHyperring R = structure_from_json(load_json_file(file));
    AxiomReport rep = R.validate(validate_options_from_env());
    if (as_json) {
        std::cout << axiom_report_to_json(rep).dump(2) << "\n";
    } else {
        for (const auto& [name, check] : rep.items()) {
            std::cout << (check->ok ? "[ok]   " : "[FAIL] ") << name;
            if (!check->ok) {
                std::cout << "  " << check->note << "  witness: [";
                for (std::size_t i = 0; i < check->witness.size(); ++i) {
                    if (i) std::cout << ",";
                    std::cout << check->witness[i];
                }
                std::cout << "]";
            } else if (!check->note.empty()) {
                std::cout << "  (" << check->note << ")";
            }
            std::cout << "\n";
        }
    }
    return rep.all_ok() ? kExitPass : kExitFail;
}

int cmd_ideals(const std::string& file, bool as_json) {
    KrasnerHyperring R = load_structure_arg(file);
    IdealEnumeration e = enumerate_hyperideals(R);
    if (as_json) {
        std::cout << ideal_enumeration_to_json(e).dump(2) << "\n";
    } else {
        for (const ElemSet& s : e.ideals) std::cout << s.str() << "\n";
        if (!e.complete) std::cout << "(closure mode: enumeration may be incomplete)\n";
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperlab: exact verification of finite Krasner (m,n)-hyperrings "
                 "and interval-valued fuzzy hyperideals"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON reports");

    // validate
    std::string structure_file;
    CLI::App* validate = app.add_subcommand("validate", "check the Krasner axioms of a structure file");
    validate->add_option("structure", structure_file, "structure JSON file")->required();

    // ideals
    CLI::App* ideals = app.add_subcommand("ideals", "enumerate all hyperideals");
    ideals->add_option("structure", structure_file, "structure JSON file or catalog name")->required();

    // classify
    CLI::App* classify = app.add_subcommand("classify", "classify a fuzzy set against a structure");
    std::string fuzzy_file, kind = "ordinary", alpha = "in", beta = "invq";
    std::string variant_str = "corrected", op_str = "Ig", t_str = "1/2,1/2";
    std::string s1_str = "0/1,0/1", s2_str = "1/1,1/1";
    bool unrestricted = false;
    classify->add_option("structure", structure_file, "structure JSON file or catalog name")->required();
    classify->add_option("fuzzy", fuzzy_file, "fuzzy-set JSON file")->required();
    classify->add_option("--kind", kind, "ordinary|alphabeta|invq|threshold|implication|fuzzifying");
    classify->add_option("--alpha", alpha, "in|q|invq (for --kind alphabeta)");
    classify->add_option("--beta", beta, "in|q|invq|inandq (for --kind alphabeta)");
    classify->add_option("--variant", variant_str, "corrected|paper-literal");
    classify->add_option("--op", op_str, "Im|Ia|Ig|Icg|Igr|Ib|Igg (for --kind implication)");
    classify->add_option("--t", t_str, "truth degree p/q,r/s (for --kind implication)");
    classify->add_option("--s1", s1_str, "lower threshold p/q,r/s (for --kind threshold)");
    classify->add_option("--s2", s2_str, "upper threshold p/q,r/s (for --kind threshold)");
    classify->add_flag("--unrestricted-domain", unrestricted,
                       "quantify alphabeta thresholds over all nonzero intervals");

    // levels
    CLI::App* levels = app.add_subcommand("levels", "check level sets over a threshold range");
    std::string range = "lower";
    levels->add_option("structure", structure_file, "structure JSON file or catalog name")->required();
    levels->add_option("fuzzy", fuzzy_file, "fuzzy-set JSON file")->required();
    levels->add_option("--range", range, "lower|upper|full|custom");
    levels->add_option("--s1", s1_str, "custom range lower bound p/q,r/s");
    levels->add_option("--s2", s2_str, "custom range upper bound p/q,r/s");

    // verify
    CLI::App* verify = app.add_subcommand("verify", "replay the theorem suite over the catalog");
    std::string theorems = "all";
    std::uint64_t seed = 42;
    int count = 500, grid_q = 10;
    bool chain_only = false;
    std::string structures = "all";
    verify->add_option("--theorems", theorems, "comma list of T1..T9, or 'all'");
    verify->add_option("--seed", seed, "corpus seed");
    verify->add_option("--count", count, "fuzzy sets per structure");
    verify->add_option("--grid-q", grid_q, "membership grid denominator");
    verify->add_flag("--chain-only", chain_only, "draw chain-valued fuzzy sets");
    verify->add_option("--variant", variant_str, "corrected|paper-literal");
    verify->add_option("--structures", structures, "comma list of catalog names, or 'all'");

    // gen
    CLI::App* gen = app.add_subcommand("gen", "generate a deterministic fuzzy-set corpus");
    gen->add_option("structure", structure_file, "structure JSON file or catalog name")->required();
    gen->add_option("--seed", seed, "corpus seed");
    gen->add_option("--count", count, "number of sets");
    gen->add_option("--grid-q", grid_q, "grid denominator");
    gen->add_flag("--chain-only", chain_only, "draw chain-valued sets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(structure_file, as_json);
        if (ideals->parsed()) return cmd_ideals(structure_file, as_json);

        if (classify->parsed()) {
            KrasnerHyperring R = load_structure_arg(structure_file);
            IVFuzzySet A = fuzzy_from_json(load_json_file(fuzzy_file), R.size());
            ClassReport rep;
            if (kind == "ordinary") {
                rep = is_ordinary(R, A);
            } else if (kind == "alphabeta") {
                AlphaBetaOptions opts;
                if (unrestricted) opts.domain = ThresholdDomain::Unrestricted;
                rep = is_alpha_beta(R, A, AlphaBeta(parse_relation(alpha), parse_relation(beta)),
                                    opts);
            } else if (kind == "invq") {
                rep = is_in_invq_closed(R, A, parse_variant(variant_str));
            } else if (kind == "threshold") {
                rep = is_threshold(R, A,
                                   ThresholdPair(parse_interval_flag(s1_str),
                                                 parse_interval_flag(s2_str)),
                                   parse_variant(variant_str));
            } else if (kind == "implication") {
                rep = is_t_implication_based(R, A, parse_implication(op_str),
                                             parse_interval_flag(t_str));
            } else if (kind == "fuzzifying") {
                rep = is_fuzzifying(R, A);
            } else {
                throw ParseError("unknown --kind: " + kind);
            }
            print_class_report(rep, as_json);
            return rep.ok ? kExitPass : kExitFail;
        }

        if (levels->parsed()) {
            KrasnerHyperring R = load_structure_arg(structure_file);
            IVFuzzySet A = fuzzy_from_json(load_json_file(fuzzy_file), R.size());
            LevelRange lr = LevelRange::lower();
            if (range == "lower") lr = LevelRange::lower();
            else if (range == "upper") lr = LevelRange::upper();
            else if (range == "full") lr = LevelRange::full();
            else if (range == "custom")
                lr = LevelRange{parse_interval_flag(s1_str), parse_interval_flag(s2_str)};
            else throw ParseError("unknown --range: " + range);
            ClassReport rep = level_criterion(R, A, lr);
            print_class_report(rep, as_json);
            return rep.ok ? kExitPass : kExitFail;
        }

        if (verify->parsed()) {
            std::vector<CatalogEntry> catalog = default_catalog();
            if (structures != "all") {
                std::vector<CatalogEntry> picked;
                std::string rest = structures;
                while (!rest.empty()) {
                    std::size_t comma = rest.find(',');
                    std::string name = rest.substr(0, comma);
                    bool found = false;
                    for (CatalogEntry& e : catalog)
                        if (e.name == name) {
                            picked.push_back({e.name, std::move(e.ring)});
                            found = true;
                            break;
                        }
                    if (!found) throw ParseError("unknown catalog structure: " + name);
                    if (comma == std::string::npos) break;
                    rest = rest.substr(comma + 1);
                }
                catalog = std::move(picked);
            }
            std::vector<std::string> ids;
            if (theorems == "all") {
                ids = theorem_ids();
            } else {
                std::string rest = theorems;
                while (!rest.empty()) {
                    std::size_t comma = rest.find(',');
                    ids.push_back(rest.substr(0, comma));
                    if (comma == std::string::npos) break;
                    rest = rest.substr(comma + 1);
                }
            }
            CorpusSpec spec{seed, grid_q, count, chain_only};
            Variant variant = parse_variant(variant_str);
            int failures = 0;
            json results = json::array();
            for (const std::string& id : ids) {
                TheoremResult res = run_theorem(id, catalog, spec, variant);
                failures += res.failure_count;
                if (as_json) {
                    results.push_back(theorem_result_to_json(res));
                } else {
                    std::cout << (res.pass() ? "[pass] " : "[FAIL] ") << res.id << "  trials="
                              << res.trials << "  failures=" << res.failure_count << "\n";
                    for (const TheoremFailure& f : res.failures) {
                        std::cout << "   " << f.structure;
                        if (f.instance >= 0) std::cout << "#" << f.instance;
                        std::cout << ": " << f.detail << "\n";
                    }
                }
            }
            if (as_json) std::cout << results.dump(2) << "\n";
            return failures == 0 ? kExitPass : kExitFail;
        }

        if (gen->parsed()) {
            KrasnerHyperring R = load_structure_arg(structure_file);
            CorpusSpec spec{seed, grid_q, count, chain_only};
            json out = json::array();
            for (const IVFuzzySet& A : gen_fuzzy(R, spec)) out.push_back(fuzzy_to_json(A));
            std::cout << out.dump(2) << "\n";
            return kExitPass;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
