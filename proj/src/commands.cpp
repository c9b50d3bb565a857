#include "mseg/commands.hpp"

#include <string>

#include "mseg/cosets.hpp"
#include "mseg/fuzz.hpp"
#include "mseg/galois.hpp"
#include "mseg/generic.hpp"
#include "mseg/jacquet.hpp"
#include "mseg/parser.hpp"

namespace mseg::cli {

namespace {

using nlohmann::json;

json segment_json(const Segment& seg) {
    return json{{"length", seg.length}, {"line", seg.line()}, {"exponent", seg.exponent().str()}};
}

json constituent_json(const WDConstituent& c, const LineTable& table) {
    return json{{"line", c.line},
                {"sp_length", c.sp_length},
                {"exponent", c.exponent.str()},
                {"dimension", c.dimension(table)}};
}

json witness_json(const PairingWitness& witness) {
    json pairs = json::array();
    for (const auto& [a, b] : witness.pairs) pairs.push_back(json::array({a, b}));
    json singletons = json::array();
    for (const auto& single : witness.singletons)
        singletons.push_back(json{
            {"index", single.index},
            {"certificate", single.certificate == DistinctionMode::gl ? "gl" : "h"}});
    return json{{"pairs", pairs}, {"singletons", singletons}};
}

json segments_json(const std::vector<Segment>& segments) {
    json out = json::array();
    for (const Segment& seg : segments) out.push_back(segment_json(seg));
    return out;
}

json coset_json(const CosetDatum& datum) {
    json gl = json::array();
    for (const auto& factor : datum.levi.gl_factors)
        gl.push_back(json{{"i", factor.i + 1}, {"j", factor.j + 1}, {"size", factor.size}});
    return json{{"S", json{{"lambda", datum.s.lambda}, {"entries", datum.s.entries}}},
                {"t", datum.t},
                {"d", datum.d},
                {"w", datum.w},
                {"levi_shape", json{{"h_factors", datum.levi.h_factors}, {"gl_factors", gl}}},
                {"modulus_ok", check_modulus_identity(datum.s).ok}};
}

const dsl::Binding& select_binding(const dsl::SourceFile& file, const std::string& name) {
    if (!name.empty()) {
        for (const dsl::Binding& binding : file.bindings)
            if (binding.name == name) return binding;
        fail(errc::unknown_binding, "no pi named '" + name + "'");
    }
    if (file.bindings.size() == 1) return file.bindings.front();
    fail(errc::invalid_argument, file.bindings.empty()
                                     ? "input declares no pi bindings"
                                     : "--pi is required when the input declares several bindings");
}

Multisegment load_pi(const Options& options, std::string_view input_text, json& report) {
    const dsl::SourceFile file = dsl::parse(input_text);
    const dsl::Binding& binding = select_binding(file, options.pi_name);
    report["pi"] = binding.name;
    Multisegment pi{dsl::make_line_table(file), binding.segments};
    validate_multisegment(pi);
    return pi;
}

int dispatch(const Options& options, std::string_view input_text, json& report) {
    if (options.command == "classify") {
        const Multisegment pi = load_pi(options, input_text, report);
        const bool h_mode = options.mode == DistinctionMode::h;
        const ClassificationResult result = h_mode ? classify_h(pi) : classify_gl(pi);
        report["mode"] = h_mode ? "h" : "gl";
        report["generic"] = true;
        report["verdict"] = result.distinguished;
        report["witness"] = result.witness ? witness_json(*result.witness) : json(nullptr);
        report["diagnostics"] = json{{"r", pi.segments.size()},
                                     {"total_degree", pi.total_degree()},
                                     {"segments", segments_json(pi.segments)}};
        return 0;
    }
    if (options.command == "generic") {
        const Multisegment pi = load_pi(options, input_text, report);
        const GenericityResult result = is_generic(pi);
        report["verdict"] = result.generic;
        report["witness"] =
            result.witness ? json{{"i", result.witness->i}, {"j", result.witness->j}, {"d", result.witness->d}}
                           : json(nullptr);
        return 0;
    }
    if (options.command == "jacquet") {
        const Multisegment pi = load_pi(options, input_text, report);
        if (pi.segments.size() != 1)
            fail(errc::invalid_argument, "jacquet needs a single-segment pi, this one has " +
                                             std::to_string(pi.segments.size()));
        const JacquetFactors factors = jacquet(pi.segments.front(), pi.table, options.partition);
        report["partition"] = options.partition;
        report["zero"] = factors.zero;
        report["factors"] = segments_json(factors.factors);
        return 0;
    }
    if (options.command == "cosets") {
        report["partition"] = options.partition;
        const std::vector<SMatrix> matrices = enumerate_s_matrices(options.partition);
        json list = json::array();
        for (const SMatrix& s : matrices) list.push_back(coset_json(build_coset_datum(s)));
        report["count"] = matrices.size();
        report["cosets"] = list;
        return 0;
    }
    if (options.command == "bc") {
        const Multisegment pi = load_pi(options, input_text, report);
        report["verdict"] = bc_exists(to_wd(pi));
        return 0;
    }
    if (options.command == "eta") {
        const Multisegment pi = load_pi(options, input_text, report);
        const EtaReport eta = eta_trivial(to_wd(pi));
        report["trivial"] = eta.trivial;
        report["component_group_rank"] = eta.component_rank;
        json values = json::array();
        for (const auto& [c, value] : eta.values)
            values.push_back(json{{"constituent", constituent_json(c, pi.table)}, {"eta", value}});
        report["values"] = values;
        return 0;
    }
    if (options.command == "check-main") {
        const Multisegment pi = load_pi(options, input_text, report);
        const MainTheoremCheck check = main_theorem_check(pi);
        report["A"] = check.a;
        report["B"] = check.b;
        report["consistent"] = check.consistent;
        if (check.a) {
            const ConditionAWitness groups = condition_a_witness(pi);
            json sigma_pairs = json::array();
            for (const auto& [a, b] : groups.sigma_pairs) sigma_pairs.push_back(json::array({a, b}));
            json symplectic_pairs = json::array();
            for (const auto& [a, b] : groups.symplectic_pairs)
                symplectic_pairs.push_back(json::array({a, b}));
            report["witness"] = json{{"sigma_pairs", sigma_pairs},
                                     {"symplectic_pairs", symplectic_pairs},
                                     {"orthogonal_singletons", groups.orthogonal_singletons}};
        } else {
            report["witness"] = json(nullptr);
        }
        // an inconsistency is a bug in the build, never in the input
        return check.consistent ? 0 : 3;
    }
    if (options.command == "fuzz") {
        fuzz::GeneratorOptions gen;
        gen.max_r = options.max_r;
        gen.max_l = options.max_l;
        const fuzz::FuzzReport result = fuzz::run_battery(options.seed, options.trials, gen);
        report["seed"] = result.seed;
        report["trials"] = result.trials;
        report["max_r"] = gen.max_r;
        report["max_l"] = gen.max_l;
        report["stats"] = json{{"even_degree", result.stats.even_degree},
                               {"gl_distinguished", result.stats.gl_distinguished},
                               {"h_distinguished", result.stats.h_distinguished},
                               {"condition_a", result.stats.condition_a}};
        json violations = json::array();
        for (const fuzz::Violation& v : result.violations)
            violations.push_back(json{{"trial", v.trial},
                                      {"check", v.check},
                                      {"detail", v.detail},
                                      {"instance", v.instance}});
        report["violations"] = violations;
        report["violation_count"] = result.violations.size();
        return result.violations.empty() ? 0 : 3;
    }
    fail(errc::invalid_argument, "unknown command '" + options.command + "'");
}

}  // namespace

Outcome run(const Options& options, std::string_view input_text) {
    json report;
    report["command"] = options.command;
    report["version"] = kVersion;
    try {
        const int code = dispatch(options, input_text, report);
        return {code, report};
    } catch (const dsl::ParseError& e) {
        report["error"] = json{{"code", errc_name(e.code())},
                               {"message", e.what()},
                               {"line", e.position().line},
                               {"column", e.position().column}};
        return {2, report};
    } catch (const Error& e) {
        report["error"] = json{{"code", errc_name(e.code())}, {"message", e.what()}};
        return {errc_is_internal(e.code()) ? 3 : 2, report};
    }
}

}  // namespace mseg::cli
