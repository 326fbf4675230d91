// grpdfrob: exact-arithmetic toolkit for quantum groupoids and groupoid
// Frobenius algebras. Ingests JSON descriptions, runs the constructions and
// exhaustive checkers, and emits human-readable or JSON reports.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grpdfrob/correspondence.hpp"
#include "grpdfrob/fixtures.hpp"
#include "grpdfrob/frobenius.hpp"
#include "grpdfrob/gfa.hpp"
#include "grpdfrob/groupoid.hpp"
#include "grpdfrob/rep_cat.hpp"
#include "grpdfrob/serialize.hpp"
#include "grpdfrob/weak_hopf.hpp"

namespace {

using namespace grpdfrob;

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // (path or name, digest)
    std::vector<std::pair<std::string, std::string>> notes;
    std::vector<CheckResult> results;
    bool input_error = false;
    std::string error_message;

    int exit_code() const {
        if (input_error) return 2;
        for (const auto& r : results)
            if (!r.pass) return 1;
        return 0;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IOError", "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("IOError", "cannot write '" + path + "'");
    out << bytes;
    if (!out) throw Error("IOError", "failed writing '" + path + "'");
}

Json parse_json(const std::string& bytes, const std::string& what) {
    try {
        return Json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw Error("ParseError", "malformed JSON in " + what + ": " + e.what());
    }
}

void append(RunReport& rep, const std::string& prefix, const AxiomReport& checks) {
    for (const auto& c : checks.checks)
        rep.results.push_back({prefix.empty() ? c.name : prefix + c.name, c.pass, c.witness});
}

void print_report(const RunReport& rep, bool as_json) {
    if (as_json) {
        Json j;
        j["command"] = rep.command;
        Json inputs = Json::array();
        for (const auto& [p, d] : rep.inputs) inputs.push_back(Json{{"path", p}, {"digest", d}});
        j["inputs"] = std::move(inputs);
        Json notes = Json::object();
        for (const auto& [k, v] : rep.notes) notes[k] = v;
        j["notes"] = std::move(notes);
        Json results = Json::array();
        for (const auto& r : rep.results) {
            Json e;
            e["check"] = r.name;
            e["pass"] = r.pass;
            e["witness"] = r.pass ? Json(nullptr) : Json(r.witness);
            results.push_back(std::move(e));
        }
        j["results"] = std::move(results);
        if (rep.input_error) j["error"] = rep.error_message;
        j["exit_code"] = rep.exit_code();
        std::cout << dump_canonical(j);
        return;
    }
    std::cout << "command: " << rep.command << "\n";
    for (const auto& [p, d] : rep.inputs) std::cout << "input: " << p << " (digest " << d << ")\n";
    for (const auto& [k, v] : rep.notes) std::cout << "note: " << k << " = " << v << "\n";
    for (const auto& r : rep.results) {
        std::cout << (r.pass ? "  [pass] " : "  [FAIL] ") << r.name;
        if (!r.pass && !r.witness.empty()) std::cout << "  witness: " << r.witness;
        std::cout << "\n";
    }
    if (rep.input_error) std::cout << "error: " << rep.error_message << "\n";
    int code = rep.exit_code();
    std::cout << "result: " << (code == 0 ? "PASS" : code == 1 ? "FAIL" : "ERROR") << " (exit " << code << ")\n";
}

Groupoid load_groupoid(RunReport& rep, const std::string& path) {
    std::string bytes = read_file(path);
    rep.inputs.emplace_back(path, content_digest(bytes));
    return groupoid_from_json(parse_json(bytes, path));
}

void require_valid(const Groupoid& G) {
    AxiomReport v = validate(G);
    if (!v.all_pass())
        throw Error("InvalidGroupoid",
                    "groupoid fails '" + v.first_failure()->name + "' at " + v.first_failure()->witness);
}

void cmd_validate(RunReport& rep, const std::string& path) {
    Groupoid G = load_groupoid(rep, path);
    rep.notes.emplace_back("objects", std::to_string(G.num_objects()));
    rep.notes.emplace_back("morphisms", std::to_string(G.num_morphisms()));
    append(rep, "", validate(G));
}

void cmd_double(RunReport& rep, const std::string& path, const std::string& out) {
    Groupoid G = load_groupoid(rep, path);
    require_valid(G);
    DrinfeldDouble dd = drinfeld_double(G);
    rep.notes.emplace_back("dimension", std::to_string(dd.algebra->dim()));
    rep.notes.emplace_back("rbar_solution_space_dim", std::to_string(dd.r.solution_space_dim));
    append(rep, "", check_weak_hopf(*dd.algebra));
    append(rep, "", check_quasitriangular(*dd.algebra, dd.r));
    HopfClassification cls = classify_hopf(*dd.algebra);
    rep.notes.emplace_back("classification", cls.kind == HopfClass::Hopf ? "Hopf" : "StrictlyWeak");
    if (!out.empty()) {
        write_file(out, dump_canonical(double_to_json(dd)));
        rep.notes.emplace_back("written", out);
    }
}

void cmd_check_wha(RunReport& rep, const std::string& path) {
    std::string bytes = read_file(path);
    rep.inputs.emplace_back(path, content_digest(bytes));
    QuantumGroupoid H = quantum_groupoid_from_json(parse_json(bytes, path));
    rep.notes.emplace_back("dimension", std::to_string(H.dim()));
    AxiomReport r = check_weak_hopf(H);
    append(rep, "", r);
    if (r.all_pass()) {
        HopfClassification cls = classify_hopf(H);
        rep.notes.emplace_back("classification", cls.kind == HopfClass::Hopf ? "Hopf" : "StrictlyWeak");
    }
}

Gfa load_gfa(RunReport& rep, const std::string& path) {
    std::string bytes = read_file(path);
    rep.inputs.emplace_back(path, content_digest(bytes));
    return gfa_from_json(parse_json(bytes, path));
}

void cmd_check_gfa(RunReport& rep, const std::string& path) {
    Gfa A = load_gfa(rep, path);
    rep.notes.emplace_back("carrier_dimension", std::to_string(A.dim()));
    append(rep, "", check_gfa(A));
}

void cmd_check_frobenius(RunReport& rep, const std::string& path) {
    std::string bytes = read_file(path);
    rep.inputs.emplace_back(path, content_digest(bytes));
    FrobeniusObjectData F = frobenius_from_json(parse_json(bytes, path));
    rep.notes.emplace_back("carrier_dimension", std::to_string(F.module.dim()));
    append(rep, "", frobenius_prechecks(F));
}

void cmd_convert(RunReport& rep, const std::string& path, const std::string& direction, const std::string& out) {
    if (direction == "gfa-to-frob") {
        Gfa A = load_gfa(rep, path);
        FrobeniusObjectData F = gfa_to_frobenius(A);
        append(rep, "", frobenius_prechecks(F));
        if (!out.empty()) {
            write_file(out, dump_canonical(frobenius_to_json(F)));
            rep.notes.emplace_back("written", out);
        }
    } else if (direction == "frob-to-gfa") {
        std::string bytes = read_file(path);
        rep.inputs.emplace_back(path, content_digest(bytes));
        FrobeniusObjectData F = frobenius_from_json(parse_json(bytes, path));
        AxiomReport pre = frobenius_prechecks(F);
        append(rep, "", pre);
        if (!pre.all_pass()) return;
        Gfa A = frobenius_to_gfa(F);
        append(rep, "induced gfa: ", check_gfa(A));
        if (!out.empty()) {
            write_file(out, dump_canonical(gfa_to_json(A)));
            rep.notes.emplace_back("written", out);
        }
    } else {
        throw Error("ParseError", "direction must be gfa-to-frob or frob-to-gfa");
    }
}

void cmd_roundtrip(RunReport& rep, const std::string& path) {
    Gfa A = load_gfa(rep, path);
    EqualityReport eq = roundtrip_gfa(A);
    rep.results.push_back({"round trip is entry-exact", eq.equal(),
                           eq.equal() ? "" : eq.mismatches.front().component + " " + eq.mismatches.front().key});
    std::size_t shown = 0;
    for (const auto& mm : eq.mismatches) {
        if (++shown > 20) break;
        rep.results.push_back({"mismatch", false, mm.component + " " + mm.key + ": " + mm.lhs + " != " + mm.rhs});
    }
}

void demo_fixture(RunReport& rep, const std::string& name) {
    const std::string p = name + "/";
    Groupoid G = fixture_groupoid(name);
    rep.inputs.emplace_back("fixture:" + name, content_digest(dump_canonical(groupoid_to_json(G))));
    rep.results.push_back({p + "groupoid laws hold", validate(G).all_pass(), ""});

    QuantumGroupoid kG = groupoid_algebra(G);
    rep.results.push_back({p + "morphism algebra satisfies the weak hopf laws", check_weak_hopf(kG).all_pass(), ""});

    DrinfeldDouble dd = drinfeld_double(G);
    rep.notes.emplace_back(name + ":double_dimension", std::to_string(dd.algebra->dim()));
    rep.results.push_back({p + "double satisfies the weak hopf laws", check_weak_hopf(*dd.algebra).all_pass(), ""});
    rep.results.push_back(
        {p + "double is quasitriangular", check_quasitriangular(*dd.algebra, dd.r).all_pass(), ""});
    HopfClassification cls = classify_hopf(*dd.algebra);
    rep.notes.emplace_back(name + ":classification", cls.kind == HopfClass::Hopf ? "Hopf" : "StrictlyWeak");
    rep.results.push_back({p + "hopf exactly when one object",
                           (cls.kind == HopfClass::Hopf) == (G.num_objects() == 1), ""});

    Gfa A = groupoid_ring_gfa(G);
    rep.results.push_back({p + "groupoid ring is a graded frobenius algebra", check_gfa(A).all_pass(), ""});

    FrobeniusObjectData F = gfa_to_frobenius(A);
    rep.results.push_back({p + "induced frobenius object passes all five checks",
                           frobenius_prechecks(F).all_pass(), ""});

    Gfa B = frobenius_to_gfa(F);
    rep.results.push_back({p + "frobenius object induces a valid graded frobenius algebra",
                           check_gfa(B).all_pass(), ""});
    rep.results.push_back({p + "round trip is entry-exact", roundtrip_gfa(A).equal(), ""});
}

void cmd_demo(RunReport& rep, const std::string& name) {
    if (name == "all") {
        for (const auto& f : fixture_names()) demo_fixture(rep, f);
        return;
    }
    demo_fixture(rep, name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for quantum groupoids, Drinfeld doubles, and groupoid Frobenius algebras"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable JSON report");
    long seed = 17;
    app.add_option("--seed", seed, "seed for randomized helpers (recorded in the report)");

    std::string path, out, direction, demo_name = "all";

    auto* c_validate = app.add_subcommand("validate", "check all groupoid laws of a groupoid file");
    c_validate->add_option("path", path, "groupoid JSON file")->required();

    auto* c_double = app.add_subcommand("double", "build the Drinfeld double with R-matrix and verify it");
    c_double->add_option("path", path, "groupoid JSON file")->required();
    c_double->add_option("--out", out, "write the double (with R and Rbar) as JSON");

    auto* c_wha = app.add_subcommand("check-wha", "verify the weak hopf laws of a structure-constant algebra file");
    c_wha->add_option("path", path, "quantum groupoid JSON file")->required();

    auto* c_gfa = app.add_subcommand("check-gfa", "verify all graded Frobenius algebra laws of a GFA file");
    c_gfa->add_option("path", path, "GFA JSON file")->required();

    auto* c_frob = app.add_subcommand("check-frobenius", "verify the frobenius object checks of a frobenius file");
    c_frob->add_option("path", path, "frobenius object JSON file")->required();

    auto* c_convert = app.add_subcommand("convert", "convert between GFA and frobenius object descriptions");
    c_convert->add_option("path", path, "input JSON file")->required();
    c_convert->add_option("--direction", direction, "gfa-to-frob or frob-to-gfa")->required();
    c_convert->add_option("--out", out, "output JSON file");

    auto* c_round = app.add_subcommand("roundtrip", "run a GFA through both directions and compare entrywise");
    c_round->add_option("path", path, "GFA JSON file")->required();

    auto* c_demo = app.add_subcommand("demo", "run the full pipeline on built-in fixtures");
    c_demo->add_option("name", demo_name, "fixture name or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    RunReport rep;
    rep.notes.emplace_back("seed", std::to_string(seed));
    try {
        if (app.got_subcommand(c_validate)) {
            rep.command = "validate";
            cmd_validate(rep, path);
        } else if (app.got_subcommand(c_double)) {
            rep.command = "double";
            cmd_double(rep, path, out);
        } else if (app.got_subcommand(c_wha)) {
            rep.command = "check-wha";
            cmd_check_wha(rep, path);
        } else if (app.got_subcommand(c_gfa)) {
            rep.command = "check-gfa";
            cmd_check_gfa(rep, path);
        } else if (app.got_subcommand(c_frob)) {
            rep.command = "check-frobenius";
            cmd_check_frobenius(rep, path);
        } else if (app.got_subcommand(c_convert)) {
            rep.command = "convert";
            cmd_convert(rep, path, direction, out);
        } else if (app.got_subcommand(c_round)) {
            rep.command = "roundtrip";
            cmd_roundtrip(rep, path);
        } else if (app.got_subcommand(c_demo)) {
            rep.command = "demo";
            cmd_demo(rep, demo_name);
        }
    } catch (const Error& e) {
        if (e.code() == "ParseError" || e.code() == "IOError" || e.code() == "UnknownFixture") {
            rep.input_error = true;
            rep.error_message = e.what();
        } else {
            rep.results.push_back({e.code(), false, e.what()});
        }
    } catch (const std::exception& e) {
        rep.input_error = true;
        rep.error_message = e.what();
    }
    print_report(rep, as_json);
    return rep.exit_code();
}
