#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fphom/cli.hpp"
#include "fphom/graded.hpp"

using namespace fphom;
using nlohmann::json;

namespace {

std::string data(const std::string& name)
{
    return std::string(FPHOM_DATA_DIR) + "/" + name;
}

RunConfig config(const std::string& input, int p, int cap, OutputFormat format = OutputFormat::json)
{
    RunConfig c;
    c.input = input.empty() ? "" : data(input);
    c.p = p;
    c.cap = cap;
    c.format = format;
    return c;
}

json run_json(const std::string& cmd, RunConfig c)
{
    c.format = OutputFormat::json;
    const auto r = run(cmd, c);
    INFO(r.error);
    REQUIRE(r.exit_code == 0);
    return json::parse(r.output);
}

std::string temp_file(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("documented CLI examples")
{
    const json w1 = run_json("free-w1", config("input_x3.json", 3, 11));
    CHECK(GradedVectorSpace::from_json(w1) == GradedVectorSpace{{0, 1}, {3, 1}, {7, 1}, {8, 1}, {10, 1}, {11, 1}});

    auto c = config("ext_x3_M3.json", 3, 12);
    c.s_max = 5;
    const json aq = run_json("aq", c);
    CHECK(aq["parity"] == "even");
    BigradedTable expected;
    for (int s = 0; s <= 5; ++s)
        expected.set(s, -3 * s, 1);
    CHECK(BigradedTable::from_json(aq["table"]) == expected);

    const auto ob = run("obstruction", config("table_even.json", 2, 12, OutputFormat::table));
    CHECK(ob.exit_code == 0);
    CHECK(ob.output.find("pass") != std::string::npos);
}

TEST_CASE("obstruction verdicts")
{
    CHECK(run("obstruction", config("table_odd.json", 2, 12)).exit_code == 1);
    const auto tr = run("obstruction", config("structure_k_z2_2.json", 2, 12));
    REQUIRE(tr.exit_code == 1);
    const json j = json::parse(tr.output);
    CHECK_FALSE(j["trivial"].get<bool>());
    CHECK(tr.output.find("x3") != std::string::npos);
}

TEST_CASE("json and csv emissions agree")
{
    struct Case {
        const char* cmd;
        const char* input;
        int p, cap;
    };
    for (const Case& k : {Case{"ext", "ext_x3_M3.json", 3, 10}, Case{"aq", "ext_x3_M3.json", 3, 10},
                          Case{"tor", "polynomial_u2_u4.json", 2, 10}, Case{"bar", "polynomial_u2.json", 5, 8},
                          Case{"hochschild", "exterior_x3_y5_regular.json", 3, 10},
                          Case{"diagram-lim", "cospan_noninjective.json", 3, 4},
                          Case{"emss", "emss_bu3_bu1.json", 2, 10}}) {
        CAPTURE(k.cmd);
        auto c = config(k.input, k.p, k.cap);
        c.s_max = 3;
        const json j = run_json(k.cmd, c);
        c.format = OutputFormat::csv;
        const auto csv = run(k.cmd, c);
        REQUIRE(csv.exit_code == 0);
        const auto from_json = BigradedTable::from_json(j["table"]);
        CHECK(from_json == BigradedTable::from_csv(csv.output));
        CHECK_FALSE(from_json.empty());
    }
}

TEST_CASE("every command runs on its bundled example")
{
    struct Case {
        const char* cmd;
        const char* input;
        int p, cap;
    };
    for (const Case& k : {Case{"free-lie", "input_x2_y3.json", 3, 8}, Case{"restricted", "input_x2_y3.json", 2, 8},
                          Case{"axioms", "input_x2_y3.json", 5, 8}, Case{"injective", "cospan_noninjective.json", 3, 4},
                          Case{"diagram-aq", "diagram_aq_span.json", 5, 10},
                          Case{"invariants", "invariants_f3_minus1.json", 3, 12},
                          Case{"lie-check", "swap_s2.json", 5, 8},
                          Case{"stanley-reisner", "complex_boundary_triangle.json", 2, 8},
                          Case{"loops", "loops_2_4.json", 3, 8}, Case{"diagram-lim", "span_algebras.json", 3, 6},
                          Case{"tor", "tor_two_sided.json", 3, 8}}) {
        CAPTURE(k.cmd);
        auto c = config(k.input, k.p, k.cap, OutputFormat::table);
        c.trials = 30;
        const auto r = run(k.cmd, c);
        CHECK(r.error.empty());
        CHECK(r.exit_code == 0);
        CHECK_FALSE(r.output.empty());
    }
    RunConfig pu;
    pu.p = 2;
    pu.cap = 14;
    pu.projective_unitary = 3;
    const json j = run_json("emss", pu);
    CHECK(GradedVectorSpace::from_json(j["totals"]) == GradedVectorSpace{{0, 1}, {3, 1}, {5, 1}, {8, 1}});
}

TEST_CASE("output is deterministic")
{
    auto c = config("input_x2_y3.json", 3, 8);
    c.trials = 40;
    c.seed = 17;
    CHECK(run("axioms", c).output == run("axioms", c).output);
    auto e = config("emss_bu3_bu1.json", 2, 10);
    CHECK(run("emss", e).output == run("emss", e).output);
}

TEST_CASE("exit codes for bad input")
{
    CHECK(run("nonsense", config("input_x3.json", 3, 8)).exit_code == 2);
    CHECK(run("free-w1", config("", 3, 8)).exit_code == 2);
    CHECK(run("free-w1", config("does_not_exist.json", 3, 8)).exit_code == 2);
    RunConfig bad;
    bad.input = temp_file("fphom_malformed.json", "{\"generators\": [");
    CHECK(run("free-w1", bad).exit_code == 2);
    CHECK(run("ext", config("ext_x3_M3.json", 4, 8)).exit_code == 2);
    CHECK(run("ext", config("ext_x3_M3.json", 3, 65)).exit_code == 2);
    CHECK(run("injective", config("cospan_noninjective.json", 3, 4, OutputFormat::csv)).exit_code == 2);
    // the input says p = 3
    CHECK(run("invariants", config("invariants_f3_minus1.json", 5, 8)).exit_code == 2);
    auto implicit = config("invariants_f3_minus1.json", 2, 8);
    implicit.p_given = false;
    CHECK(run("invariants", implicit).exit_code == 0);
    RunConfig module;
    module.p = 3;
    module.input = temp_file("fphom_module.json", R"({"algebra":{"kind":"exterior","generators":[{"name":"x","degree":3}]},
        "module":{"kind":"actions","dims":{"0":1,"3":1},"actions":{"y":{"0":[[1]]}}}})");
    CHECK(run("ext", module).exit_code == 2);
}

TEST_CASE("module with a generator action")
{
    // Lambda(x3) acting on k{0} + k{3} by x: e0 -> e3 is the regular module
    RunConfig c;
    c.p = 3;
    c.cap = 10;
    c.s_max = 3;
    c.input = temp_file("fphom_regular.json", R"({"algebra":{"kind":"exterior","generators":[{"name":"x","degree":3}]},
        "module":{"kind":"actions","dims":{"0":1,"3":1},"actions":{"x":{"0":[[1]]}}}})");
    const json j = run_json("ext", c);
    BigradedTable expected;
    expected.set(0, 3, 1);
    CHECK(BigradedTable::from_json(j["table"]) == expected);
}

TEST_CASE("report written to a file")
{
    auto c = config("loops_2_4.json", 2, 6);
    c.output = (std::filesystem::temp_directory_path() / "fphom_loops.json").string();
    const auto r = run("loops", c);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(c.output);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == r.output);
    CHECK(GradedVectorSpace::from_json(json::parse(ss.str())) == GradedVectorSpace{{0, 1}, {1, 1}, {3, 1}, {4, 1}});
}
