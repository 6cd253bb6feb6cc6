#include "skewcat/fixture_set.hpp"

#include "skewcat/corpus.hpp"
#include "support/modules.hpp"
#include "support/rnd.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace skewcat;
using testsupport::test_fields;

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SKEWCAT_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) {
    return (fs::path(SKEWCAT_FIXTURES_DIR) / name).string();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool action_equal(const StrictAction& a, const StrictAction& b) {
    return a.monoid == b.monoid && a.category == b.category && a.functors == b.functors;
}

}  // namespace

TEST_CASE("JSON round trips reproduce the in-memory values") {
    for (const auto& f : test_fields()) {
        for (const auto& [name, rho] : corpus::group_actions(f)) {
            INFO(name << " over " << f.str());
            StrictAction back = action_from_json(action_to_json(rho));
            CHECK(action_equal(back, rho));
        }
        StrictAction mono = corpus::action_proj_k2(f);
        CHECK(action_equal(action_from_json(action_to_json(mono)), mono));

        for (const auto& c : {corpus::point_complex(f, 0), corpus::cone_id(f),
                              corpus::acyclic3(f)})
            CHECK(complex_from_json(complex_to_json(c)) == c);

        DgCategory endcone = corpus::dg_endcone(f);
        CHECK(dgcat_from_json(dgcat_to_json(endcone)) == endcone);

        StrictAction rho = corpus::trivial_action(corpus::group_z2(),
                                                  corpus::algebra_k(f).as_category());
        Algebra ag = skew_group_algebra(rho);
        for (const auto& [mod_name, m] : testsupport::module_pack(ag)) {
            RightModule back = module_from_json(module_to_json(m));
            CHECK(back == m);
        }
        EquivariantModule e = from_skew_module(testsupport::module_pack(ag)[0].second, rho);
        Json ej = equivariant_to_json(e, rho.monoid, true, &rho);
        CHECK(equivariant_from_json(ej, rho) == e);
        auto embedded = embedded_action(ej);
        REQUIRE(embedded.has_value());
        CHECK(action_equal(*embedded, rho));
    }
}

TEST_CASE("scalar strings round-trip bit-exactly") {
    FieldSpec q = FieldSpec::rationals();
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 300; ++iter) {
        Scalar s = testsupport::random_scalar(q, rng);
        CHECK(Scalar::parse(q, s.str()) == s);
    }
    FieldSpec f7 = FieldSpec::prime(7);
    for (std::uint64_t r = 0; r < 7; ++r) {
        Scalar s = Scalar::from_residue(f7, r);
        CHECK(Scalar::parse(f7, s.str()) == s);
    }
}

TEST_CASE("emitted JSON is stable under a load/emit cycle") {
    for (const auto& [name, doc] : fixture_documents()) {
        INFO(name);
        Json parsed = Json::parse(doc.dump(2));
        std::string kind = json_kind(parsed);
        Json re;
        if (kind == "action")
            re = action_to_json(action_from_json(parsed));
        else if (kind == "complex")
            re = complex_to_json(complex_from_json(parsed));
        else if (kind == "dgcat")
            re = dgcat_to_json(dgcat_from_json(parsed));
        else if (kind == "module")
            re = module_to_json(module_from_json(parsed));
        else
            continue;  // equivariant needs its action context; covered above
        CHECK(re.dump(2) == doc.dump(2));
    }
}

TEST_CASE("committed fixtures match their generators byte-for-byte") {
    for (const auto& [name, doc] : fixture_documents()) {
        INFO(name);
        CHECK(slurp(fixture(name)) == doc.dump(2) + "\n");
    }
}

TEST_CASE("cli validate: exit codes follow the contract") {
    CHECK(run_cli("validate " + fixture("act_swap_k2_q.json")).exit_code == 0);
    CHECK(run_cli("validate " + fixture("cx_cone_q.json")).exit_code == 0);
    CHECK(run_cli("validate " + fixture("mod_reg_kz2_q.json")).exit_code == 0);
    CHECK(run_cli("validate " + fixture("eq_sign_k_q.json")).exit_code == 0);

    RunResult bad = run_cli("validate " + fixture("bad_assoc_m2_q.json"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("associativity") != std::string::npos);
    CHECK(bad.output.find("E12") != std::string::npos);  // witness names the triple

    CHECK(run_cli("validate " + fixture("bad_action_q.json")).exit_code == 1);
    CHECK(run_cli("validate " + fixture("bad_syntax.json")).exit_code == 2);
    CHECK(run_cli("validate /nonexistent/nope.json").exit_code == 2);
    CHECK(run_cli("validate").exit_code == 2);
    CHECK(run_cli("frobnicate x").exit_code == 2);
}

TEST_CASE("cli skew and its checks") {
    CHECK(run_cli("skew " + fixture("act_swap_k2_q.json") + " --algebra").exit_code == 0);
    CHECK(run_cli("skew " + fixture("act_triv_s3_k_q.json") + " --algebra").exit_code == 0);
    CHECK(run_cli("skew " + fixture("act_swap_2obj_q.json") +
                  " --reduce --check-equivariance --check-trivial-induced")
              .exit_code == 0);
    CHECK(run_cli("skew " + fixture("act_proj_k2_q.json")).exit_code == 0);

    RunResult nonfree = run_cli("skew " + fixture("act_triv_z2_k_q.json") +
                                " --check-trivial-induced");
    CHECK(nonfree.exit_code == 1);
    CHECK(nonfree.output.find("free on the set of objects") != std::string::npos);

    CHECK(run_cli("skew " + fixture("bad_action_q.json")).exit_code == 1);
}

TEST_CASE("cli skew -o emits files that re-validate and re-load to equal values") {
    fs::path dir = fs::temp_directory_path() / "skewcat_test_out";
    fs::remove_all(dir);
    RunResult r = run_cli("skew " + fixture("act_swap_k2_q.json") +
                          " --algebra --reduce -o " + dir.string());
    CHECK(r.exit_code == 0);
    for (const char* name : {"skew.json", "reduced.json", "algebra.json"}) {
        CAPTURE(name);
        CHECK(run_cli("validate " + (dir / name).string()).exit_code == 0);
    }
    // the emitted skew category re-loads to exactly the constructed one
    StrictAction rho = corpus::action_swap_k2(FieldSpec::rationals());
    SkewResult s = skew_group_dg_category(rho);
    CHECK(dgcat_from_json(load_json_file((dir / "skew.json").string())) == s.category);
    fs::remove_all(dir);
}

TEST_CASE("cli freeify") {
    fs::path dir = fs::temp_directory_path() / "skewcat_freeify_out";
    fs::remove_all(dir);
    RunResult r = run_cli("freeify " + fixture("act_triv_z2_k_q.json") + " -o " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(run_cli("validate " + (dir / "freeified.json").string()).exit_code == 0);
    fs::remove_all(dir);

    // monoids without inverses are refused with a semantic error
    CHECK(run_cli("freeify " + fixture("act_proj_k2_q.json")).exit_code == 1);
}

TEST_CASE("cli equiv") {
    std::string action = fixture("act_triv_z2_k_q.json");
    CHECK(run_cli("equiv " + action + " " + fixture("eq_sign_k_q.json") + " --roundtrip")
              .exit_code == 0);
    CHECK(run_cli("equiv " + action + " " + fixture("eq_triv_k_q.json") + " --roundtrip")
              .exit_code == 0);
    CHECK(run_cli("equiv " + action + " " + fixture("mod_reg_kz2_q.json") +
                  " --roundtrip --homdim " + fixture("mod_reg_kz2_q.json"))
              .exit_code == 0);
    RunResult hd = run_cli("equiv " + action + " " + fixture("eq_triv_k_q.json") +
                           " --homdim " + fixture("eq_sign_k_q.json") + " --json");
    CHECK(hd.exit_code == 0);
    Json j = Json::parse(hd.output);
    CHECK(j["outputs"]["hom_dim_equivariant"] == 0);
    CHECK(j["outputs"]["hom_dim_skew"] == 0);
}

TEST_CASE("cli orbit") {
    std::string pt = fixture("cx_point_q.json");
    RunResult laurent = run_cli("orbit " + pt + " " + pt +
                                " --period 2 --window -5 5 --laurent-check");
    CHECK(laurent.exit_code == 0);
    CHECK(laurent.output.find("degree  dim") != std::string::npos);

    // acyclic target: all zeros, so the Laurent check fails but the run is fine
    CHECK(run_cli("orbit " + pt + " " + fixture("cx_cone_q.json") +
                  " --period 1 --window -3 3")
              .exit_code == 0);
    CHECK(run_cli("orbit " + pt + " " + fixture("cx_cone_q.json") +
                  " --period 1 --window -3 3 --laurent-check")
              .exit_code == 1);

    CHECK(run_cli("orbit " + pt + " " + pt + " --period 0 --window -1 1").exit_code == 2);

    // empty window: empty table, success
    CHECK(run_cli("orbit " + pt + " " + pt + " --period 1 --window 3 2").exit_code == 0);

    RunResult js = run_cli("orbit " + pt + " " + pt +
                           " --period 3 --window -9 9 --laurent-check --json");
    CHECK(js.exit_code == 0);
    Json j = Json::parse(js.output);
    CHECK(j["status"] == "ok");
    CHECK(j["outputs"]["dims"]["0"] == 1);
    CHECK(j["outputs"]["dims"]["3"] == 1);
}

TEST_CASE("cli resolves bare names against SKEWCAT_FIXTURES") {
    setenv("SKEWCAT_FIXTURES", SKEWCAT_FIXTURES_DIR, 1);
    CHECK(run_cli("validate act_swap_k2_q.json").exit_code == 0);
    unsetenv("SKEWCAT_FIXTURES");
}
