// Command-line front end: reads a JSON payload, runs the requested
// construction with its verification transcript, and reports as text or
// JSON. Exit codes: 0 all checks passed, 1 a mathematical check failed,
// 2 usage or schema problem.

#include <moncat/adjunction.hpp>
#include <moncat/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using moncat::CheckReport;
using moncat::FinAb;
using moncat::FinSet;
using moncat::ordered_json;
using moncat::SchemaError;

struct Options {
    std::string input;
    std::string command;
    std::string report = "text";
    std::string depth = "fast";
    int truncation = 3;
};

struct Outcome {
    ordered_json payload;
    bool passed = true;
};

ordered_json counts_line(std::size_t monoid_side, std::size_t ring_side) {
    ordered_json j;
    j["monoid_morphisms"] = monoid_side;
    j["ring_morphisms"] = ring_side;
    return j;
}

Outcome run_check(const ordered_json& in) {
    Outcome out;
    CheckReport report;
    if (in.contains("map")) {
        const std::string backend = moncat::backend_of(in);
        if (backend == "finset") {
            moncat::MonoidMorphism<FinSet> h{
                moncat::parse_finset_monoid(moncat::detail::field(in, "dom")),
                moncat::parse_finset_monoid(moncat::detail::field(in, "cod")),
                moncat::parse_finset_mor(moncat::detail::field(in, "map"))};
            report.merge(moncat::check_monoid(h.dom));
            report.merge(moncat::check_monoid(h.cod));
            report.merge(moncat::check_monoid_morphism(h));
        } else {
            moncat::MonoidMorphism<FinAb> h{
                moncat::parse_finab_monoid(moncat::detail::field(in, "dom")),
                moncat::parse_finab_monoid(moncat::detail::field(in, "cod")),
                moncat::parse_ab_mor(moncat::detail::field(in, "map"))};
            report.merge(moncat::check_monoid(h.dom));
            report.merge(moncat::check_monoid(h.cod));
            report.merge(moncat::check_monoid_morphism(h));
        }
        out.payload["command"] = "check";
        out.payload["subject"] = "morphism";
        out.payload["backend"] = backend;
    } else {
        const std::string backend = moncat::backend_of(in);
        if (backend == "finset")
            report = moncat::check_monoid(moncat::parse_finset_monoid(in));
        else
            report = moncat::check_monoid(moncat::parse_finab_monoid(in));
        out.payload["command"] = "check";
        out.payload["subject"] = "monoid";
        out.payload["backend"] = backend;
    }
    out.payload["report"] = moncat::describe(report);
    out.passed = report.ok();
    return out;
}

template <class B>
Outcome run_coequalize_backend(const moncat::MonoidObject<B>& m, const typename B::Mor& left,
                               const typename B::Mor& right, const std::string& backend,
                               bool full) {
    Outcome out;
    out.payload["command"] = "coequalize";
    out.payload["backend"] = backend;

    CheckReport laws = moncat::check_monoid(m);
    if (!laws.ok()) {
        out.payload["report"] = moncat::describe(laws);
        out.passed = false;
        return out;
    }
    if (!B::obj_equal(B::cod(left), m.carrier) || !B::obj_equal(B::cod(right), m.carrier) ||
        !B::obj_equal(B::dom(left), B::dom(right)))
        throw SchemaError("coequalize: left and right must form a parallel pair into the carrier");

    auto result = moncat::quotient_by_translates<B>(m, left, right);
    CheckReport report = std::move(laws);
    report.merge(result.verification);
    if (full) {
        const auto preservation =
            moncat::check_tensor_preserves_coequalizer<B>(m.carrier, result.translates);
        report.add("tensor contexts preserve the carrier coequalizer", preservation.ok,
                   preservation.detail);
    }
    out.payload["quotient"] = moncat::describe(result.quotient);
    out.payload["projection"] = moncat::describe(result.projection.map);
    out.payload["report"] = moncat::describe(report);
    out.passed = report.ok();
    return out;
}

Outcome run_coequalize(const ordered_json& in, const Options& opts) {
    const auto& monoid = moncat::detail::field(in, "monoid");
    const bool full = opts.depth == "full";
    if (moncat::backend_of(monoid) == "finset")
        return run_coequalize_backend<FinSet>(
            moncat::parse_finset_monoid(monoid),
            moncat::parse_finset_mor(moncat::detail::field(in, "left")),
            moncat::parse_finset_mor(moncat::detail::field(in, "right")), "finset", full);
    return run_coequalize_backend<FinAb>(
        moncat::parse_finab_monoid(monoid),
        moncat::parse_ab_mor(moncat::detail::field(in, "left")),
        moncat::parse_ab_mor(moncat::detail::field(in, "right")), "finab", full);
}

Outcome run_monoid_ring(const ordered_json& in, const Options& opts) {
    Outcome out;
    out.payload["command"] = "monoid-ring";
    out.payload["truncation"] = opts.truncation;

    const auto d = moncat::parse_finset_monoid(in);
    CheckReport laws = moncat::check_monoid(d);
    if (!laws.ok()) {
        out.payload["report"] = moncat::describe(laws);
        out.passed = false;
        return out;
    }

    CheckReport report = std::move(laws);
    try {
        const auto lift = moncat::monoid_ring(d, opts.truncation);
        report.merge(lift.verification);
        report.add("agrees with the direct monoid-ring construction",
                   moncat::monoid_equal<FinAb>(lift.ring, moncat::monoid_ring_direct(d)));
        if (opts.depth == "full") {
            const auto deeper = moncat::monoid_ring(d, opts.truncation + 1);
            report.add("stable one degree beyond the requested truncation",
                       moncat::monoid_equal<FinAb>(lift.ring, deeper.ring));
        }
        out.payload["ring"] = moncat::describe(lift.ring);
        out.payload["carrier_invariants"] = lift.ring.carrier.invariant_string();
        out.payload["projection"] = moncat::describe(lift.projection);
    } catch (const std::runtime_error& e) {
        report.add("monoid-ring construction completed", false, e.what());
    }
    out.payload["report"] = moncat::describe(report);
    out.passed = report.ok();
    return out;
}

Outcome run_hom_check(const ordered_json& in, const Options& opts) {
    Outcome out;
    out.payload["command"] = "hom-check";
    out.payload["truncation"] = opts.truncation;

    const auto d = moncat::parse_finset_monoid(moncat::detail::field(in, "monoid"));
    const auto a = moncat::parse_finab_monoid(moncat::detail::field(in, "ring"));
    CheckReport laws = moncat::check_monoid(d);
    laws.merge(moncat::check_monoid(a));
    if (!laws.ok()) {
        out.payload["report"] = moncat::describe(laws);
        out.passed = false;
        return out;
    }
    if (!a.carrier.is_finite())
        throw SchemaError("hom-check: the ring carrier must be finite");

    const auto result = moncat::hom_bijection_check(d, a, opts.truncation);
    out.payload["counts"] = counts_line(result.monoid_side.size(), result.ring_side.size());
    ordered_json monoid_list = ordered_json::array();
    for (const auto& h : result.monoid_side) monoid_list.push_back(h.map.table);
    out.payload["monoid_morphisms"] = std::move(monoid_list);
    ordered_json ring_list = ordered_json::array();
    for (const auto& f : result.ring_side)
        ring_list.push_back(moncat::describe_rows(f.map.matrix()));
    out.payload["ring_morphisms"] = std::move(ring_list);

    CheckReport report = std::move(laws);
    report.merge(result.verification);
    out.payload["report"] = moncat::describe(report);
    out.passed = report.ok();
    return out;
}

std::string render_text(const ordered_json& payload, bool passed) {
    std::ostringstream os;
    for (const auto& [key, value] : payload.items()) {
        if (key == "report") continue;
        if (value.is_string())
            os << key << ": " << value.get<std::string>() << '\n';
        else if (value.is_number_integer())
            os << key << ": " << value.get<long long>() << '\n';
        else if (key == "counts")
            os << "counts: monoid side " << value.at("monoid_morphisms").get<std::size_t>()
               << ", ring side " << value.at("ring_morphisms").get<std::size_t>() << '\n';
    }
    if (payload.contains("report"))
        for (const auto& line : payload.at("report").at("checks")) {
            os << (line.at("ok").get<bool>() ? "pass  " : "FAIL  ")
               << line.at("law").get<std::string>();
            const auto witness = line.at("witness").get<std::string>();
            if (!line.at("ok").get<bool>() && !witness.empty()) os << "  [" << witness << "]";
            os << '\n';
        }
    os << "result: " << (passed ? "PASS" : "FAIL") << '\n';
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    Options opts;
    CLI::App app{"Exact computations with monoids over finite-set and abelian-group backends"};
    app.add_option("--input", opts.input, "JSON payload file")->required();
    app.add_option("--command", opts.command, "One of: check, coequalize, monoid-ring, hom-check")
        ->required()
        ->check(CLI::IsMember({"check", "coequalize", "monoid-ring", "hom-check"}));
    app.add_option("--truncation", opts.truncation, "Word-degree bound for monoid-ring lifts")
        ->capture_default_str();
    app.add_option("--report", opts.report, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--verify-depth", opts.depth, "Verification effort")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::ifstream file(opts.input);
        if (!file) {
            std::cerr << "error: cannot read '" << opts.input << "'\n";
            return 2;
        }
        const ordered_json in = ordered_json::parse(file);

        Outcome out;
        if (opts.command == "check")
            out = run_check(in);
        else if (opts.command == "coequalize")
            out = run_coequalize(in, opts);
        else if (opts.command == "monoid-ring")
            out = run_monoid_ring(in, opts);
        else
            out = run_hom_check(in, opts);

        if (opts.report == "json")
            std::cout << out.payload.dump(2) << '\n';
        else
            std::cout << render_text(out.payload, out.passed);
        return out.passed ? 0 : 1;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
