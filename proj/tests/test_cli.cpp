// End-to-end tests of the command-line tool: exit codes, report schema
// stability, and the byte-identical conversion round trip. The binary path
// comes from the GRPDFROB_CLI environment variable (set by ctest).
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "grpdfrob/fixtures.hpp"
#include "grpdfrob/serialize.hpp"

using namespace grpdfrob;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* p = std::getenv("GRPDFROB_CLI");
    REQUIRE(p != nullptr);
    return p;
}

RunResult run_cli(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) res.output.append(buf, n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "grpdfrob_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string write_temp(const std::string& name, const std::string& bytes) {
    fs::path p = temp_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << bytes;
    out.close();
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("validate: exit codes for valid, broken, and malformed input") {
    Groupoid G = fixture_groupoid("pair2");
    std::string good = write_temp("pair2.json", dump_canonical(groupoid_to_json(G)));
    CHECK(run_cli("validate " + good).exit_code == 0);

    // m1_0 ∘ m0_1 is e at x1; an explicit wrong entry overrides the
    // derivable fill and breaks the table
    Json j = groupoid_to_json(G);
    j["compose"].push_back(Json::array({"m1_0", "m0_1", "m0_0"}));
    std::string broken = write_temp("pair2_broken.json", dump_canonical(j));
    RunResult rb = run_cli("validate " + broken);
    CHECK(rb.exit_code == 1);
    CHECK(rb.output.find("witness") != std::string::npos);

    std::string malformed = write_temp("malformed.json", "{not json");
    CHECK(run_cli("validate " + malformed).exit_code == 2);
    CHECK(run_cli("validate /nonexistent/file.json").exit_code == 2);
}

TEST_CASE("double: builds, verifies and serializes; strictly weak case is noted") {
    Groupoid z2 = fixture_groupoid("z2");
    std::string z2path = write_temp("z2.json", dump_canonical(groupoid_to_json(z2)));
    fs::path out = temp_dir() / "z2_double.json";
    RunResult r = run_cli("double " + z2path + " --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("dimension = 4") != std::string::npos);
    CHECK(r.output.find("classification = Hopf") != std::string::npos);
    // the written double re-parses and carries R data
    Json dj = Json::parse(slurp(out.string()));
    CHECK(dj.contains("r"));
    CHECK(dj.contains("rbar"));
    CHECK(dj["rbar_solution_space_dim"] == 0);
    // and the algebra block passes check-wha
    std::string alg = write_temp("z2_double_algebra.json", dump_canonical(dj["algebra"]));
    CHECK(run_cli("check-wha " + alg).exit_code == 0);

    Groupoid p2 = fixture_groupoid("pair2");
    std::string p2path = write_temp("pair2g.json", dump_canonical(groupoid_to_json(p2)));
    RunResult r2 = run_cli("double " + p2path);
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("classification = StrictlyWeak") != std::string::npos);
}

TEST_CASE("check-gfa: fixture passes, mutation names the law, empty carrier passes") {
    Gfa A = groupoid_ring_gfa(fixture_groupoid("z2"));
    std::string good = write_temp("z2_gfa.json", dump_canonical(gfa_to_json(A)));
    CHECK(run_cli("check-gfa " + good).exit_code == 0);

    Json j = gfa_to_json(A);
    j["phi"]["g"][1][1] = "-1";  // negate the self-degree line
    std::string mutated = write_temp("z2_gfa_mut.json", dump_canonical(j));
    RunResult r = run_cli("check-gfa " + mutated);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("self-degree action trivial") != std::string::npos);

    Gfa empty;
    empty.groupoid = fixture_groupoid("trivial");
    empty.carrier = make_basis({});
    empty.eta = Mat(0, 0);
    empty.unit = Vec(empty.carrier);
    empty.phi.emplace(0, LinMap(make_basis({}), make_basis({})));
    std::string epath = write_temp("empty_gfa.json", dump_canonical(gfa_to_json(empty)));
    CHECK(run_cli("check-gfa " + epath).exit_code == 0);
}

TEST_CASE("convert: both directions, with a byte-identical gfa round trip") {
    Gfa A = groupoid_ring_gfa(fixture_groupoid("z2"));
    std::string gfa_path = write_temp("conv_gfa.json", dump_canonical(gfa_to_json(A)));
    fs::path frob_path = temp_dir() / "conv_frob.json";
    RunResult r1 = run_cli("convert " + gfa_path + " --direction gfa-to-frob --out " + frob_path.string());
    CHECK(r1.exit_code == 0);

    CHECK(run_cli("check-frobenius " + frob_path.string()).exit_code == 0);

    fs::path back_path = temp_dir() / "conv_back.json";
    RunResult r2 = run_cli("convert " + frob_path.string() + " --direction frob-to-gfa --out " + back_path.string());
    CHECK(r2.exit_code == 0);
    CHECK(slurp(back_path.string()) == slurp(gfa_path));

    CHECK(run_cli("convert " + gfa_path + " --direction sideways").exit_code == 2);
}

TEST_CASE("convert: a frobenius object violating the identity-sum condition exits 1") {
    Gfa A = groupoid_ring_gfa(fixture_groupoid("z2"));
    InducedModule ind = gfa_to_module(A);
    FrobeniusObjectData F = gfa_to_frobenius(A);
    const DoubleTag& tag = ind.dd.tag();
    int gidx = tag.groupoid.find_morphism("g");
    HModule twisted = ind.module;
    for (int b = 0; b < ind.dd.algebra->dim(); ++b)
        if (tag.pair_of_basis[static_cast<std::size_t>(b)].second == gidx)
            twisted.action[static_cast<std::size_t>(b)] = twisted.action_of(b) * Rat(-1);
    FrobeniusObjectData bad = make_frobenius_data(ind.dd, twisted, ind.grading, F.m, F.mu, F.delta, F.eps);
    std::string path = write_temp("bad_frob.json", dump_canonical(frobenius_to_json(bad)));
    RunResult r = run_cli("convert " + path + " --direction frob-to-gfa");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("module action sums to identity over self-paired loops") != std::string::npos);
}

TEST_CASE("roundtrip command") {
    Gfa A = groupoid_ring_gfa(fixture_groupoid("pair2"));
    std::string path = write_temp("rt_gfa.json", dump_canonical(gfa_to_json(A)));
    CHECK(run_cli("roundtrip " + path).exit_code == 0);

    // perturbing the form degrades the round trip to a mathematical failure
    Json j = gfa_to_json(A);
    j["eta"][0][0] = "2";
    std::string bad = write_temp("rt_gfa_bad.json", dump_canonical(j));
    RunResult r = run_cli("roundtrip " + bad);
    CHECK(r.exit_code == 1);
}

TEST_CASE("demo: fixtures pass, unknown name is an input error, json schema is stable") {
    RunResult z2 = run_cli("demo z2");
    CHECK(z2.exit_code == 0);
    CHECK(run_cli("demo nonsuch").exit_code == 2);

    RunResult j1 = run_cli("--json demo z2");
    RunResult j2 = run_cli("--json demo z2");
    CHECK(j1.exit_code == 0);
    CHECK(j1.output == j2.output);  // byte-stable across runs

    // reports are independent of the worker count (first-witness selection
    // is a deterministic minimum over chunks)
    RunResult t1 = run_cli("--json demo s3");
    RunResult t2 = [&] {
        std::string cmd = "GRPDFROB_THREADS=1 " + cli_path() + " --json demo s3 2>&1";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        RunResult res;
        char buf[4096];
        while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) res.output.append(buf, n);
        int status = pclose(pipe);
        res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        return res;
    }();
    CHECK(t1.exit_code == 0);
    CHECK(t2.exit_code == 0);
    CHECK(t1.output == t2.output);
    Json parsed = Json::parse(j1.output);
    CHECK(parsed["command"] == "demo");
    CHECK(parsed["exit_code"] == 0);
    CHECK(parsed.contains("inputs"));
    CHECK(parsed.contains("results"));
    for (const auto& r : parsed["results"]) {
        CHECK(r.contains("check"));
        CHECK(r.contains("pass"));
        CHECK(r.contains("witness"));
    }
}
