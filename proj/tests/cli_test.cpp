#include "support.hpp"

#include "weaktile/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace wt_test;
using weaktile::io::Json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "weaktile");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = weaktile::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string inst(const std::string& name) { return std::string(WEAKTILE_INSTANCES) + "/" + name; }

std::string slurp(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::string tmp(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("weaktile_cli_" + name)).string();
}

Rational R(const Json& j) { return weaktile::io::rational_from_json(j, "$"); }

}  // namespace

TEST(Cli, CheckGapObstruction)
{
    const auto o = run({"check", "--omega", "0,1;5/2,7/2"});
    EXPECT_EQ(o.code, 2);
    const auto j = o.json();
    EXPECT_EQ(j["verdict"], "NonWeakTiler");
    EXPECT_EQ(R(j["gap_condition"]["entries"][0]["gap_length"]), Q("3/2"));
    EXPECT_TRUE(j["gap_condition"]["entries"][0]["representation"].is_null());
    EXPECT_NE(o.err.find("3/2"), std::string::npos);
}

TEST(Cli, CheckPassesNecessaryConditions)
{
    const auto o = run({"check", "--omega", "[[0,1],[\"2\",\"3\"]]"});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.json()["verdict"], "NecessaryConditionsPass");
    EXPECT_EQ(run({"check", "--omega", inst("two_intervals.json")}).code, 0);
    EXPECT_EQ(run({"check", "--omega", inst("gap_obstruction.json")}).code, 2);
    EXPECT_EQ(run({"check", "--omega", "3,4"}).json()["single_interval"]["step"], Json({{"n", "1"}, {"d", "1"}}));
}

TEST(Cli, SolveTwoIntervals)
{
    const auto o = run({"solve", "--omega", "0,1;2,3", "--period", "4"});
    ASSERT_EQ(o.code, 0);
    const auto atoms = o.json()["solutions"][0]["atoms"];
    ASSERT_EQ(atoms.size(), 2u);
    EXPECT_EQ(R(atoms[0][0]), Q("0"));
    EXPECT_EQ(R(atoms[0][1]), Q("1"));
    EXPECT_EQ(R(atoms[1][0]), Q("1"));
    EXPECT_EQ(R(atoms[1][1]), Q("1"));
    EXPECT_EQ(o.json()["solutions"][0]["kind"], "Proper");
}

TEST(Cli, SolveExitCodes)
{
    EXPECT_EQ(run({"solve", "--omega", "0,1;5/2,7/2", "--sweep-periods", "1..3"}).code, 2);
    // necessary conditions pass but no solution with this period
    const auto o = run({"solve", "--omega", "0,1;2,4", "--period", "7/2"});
    EXPECT_EQ(o.code, 3);
    EXPECT_EQ(o.json()["verdict"], "NotFound");
    const auto p = run({"solve", "--omega", "0,1;2,3", "--sweep-periods", "1..2", "--dense-grid", "2", "--proper"});
    EXPECT_EQ(p.code, 0);
    EXPECT_EQ(p.json()["runs"].size(), 2u);
    EXPECT_TRUE(p.json()["runs"][1].contains("proper"));
}

TEST(Cli, DecomposeAndDensity)
{
    const auto d = run({"decompose", "--omega", "0,1;2,3", "--solution", inst("mixed_solution.json")});
    ASSERT_EQ(d.code, 0);
    EXPECT_EQ(d.json()["result"], "Decomposed");
    EXPECT_EQ(R(d.json()["terms"][0]["coefficient"]), Q("1/2"));
    const auto n = run({"decompose", "--omega", "0,1;2,3", "--solution", inst("mixed_solution.json"), "--grid",
                        "0,1,4,5"});
    EXPECT_EQ(n.code, 3);
    EXPECT_EQ(n.json()["result"], "NotDecomposable");

    const auto s = run({"solve", "--omega", "0,1;2,3", "--period", "4"});
    const std::string path = tmp("solve.json");
    std::ofstream(path) << s.out;
    const auto a = run({"decompose", "--omega", "0,1;2,3", "--solution", path});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.json()["result"], "AlreadyProper");
    const auto den = run({"density", "--omega", "0,1;2,3", "--solution", path});
    EXPECT_EQ(den.code, 0);
    EXPECT_EQ(den.json()["max_atoms_per_unit_window"], 1);
}

TEST(Cli, SolutionThatIsNotATilingIsRejected)
{
    const std::string path = tmp("bad_solution.json");
    std::ofstream(path) << R"({"period": "4", "atoms": [["0", "1"], ["2", "1"]]})";
    const auto o = run({"density", "--omega", "0,1;2,3", "--solution", path});
    EXPECT_EQ(o.code, 64);
    EXPECT_TRUE(o.json().contains("error"));
}

TEST(Cli, Semigroup)
{
    const auto o = run({"semigroup", "--gens", "3,5", "--member", "8", "--enumerate", "12", "--frobenius"});
    ASSERT_EQ(o.code, 0);
    const auto j = o.json();
    EXPECT_EQ(j["member"]["representation"], Json({1, 1}));
    EXPECT_EQ(j["enumerate"]["elements"].size(), 9u);
    EXPECT_EQ(R(j["frobenius"]["value"]), Q("7"));
    EXPECT_EQ(run({"semigroup", "--gens", "2,4", "--frobenius"}).json()["frobenius"]["kind"], "Lattice");
    EXPECT_EQ(run({"semigroup", "--gens", "0"}).code, 64);
}

TEST(Cli, Scan)
{
    const auto ok = run({"scan", inst("scan_cover.json"), "--svg", tmp("scan.svg")});
    ASSERT_EQ(ok.code, 0);
    EXPECT_EQ(ok.json()["result"], "cover");
    EXPECT_TRUE(ok.json()["endpoints_in_semigroup"].get<bool>());
    EXPECT_TRUE(ok.json()["derivative_identity"].get<bool>());
    EXPECT_TRUE(std::filesystem::exists(tmp("scan.svg")));
    const auto bad = run({"scan", inst("scan_gap.json")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_EQ(bad.json()["error"]["kind"], "CoverDeficit");
    EXPECT_EQ(R(bad.json()["error"]["point"]), Q("2"));
}

TEST(Cli, PolytopeCheck)
{
    const auto cube = run({"polytope", "check", inst("cube.json")});
    EXPECT_EQ(cube.code, 0);
    EXPECT_TRUE(cube.json()["tiles_by_translation"].get<bool>());
    for (const auto& c : {"i_convex", "ii_centrally_symmetric", "iii_facets_symmetric", "iv_belts_4_or_6"}) {
        EXPECT_TRUE(cube.json()["conditions"][c].get<bool>()) << c;
    }
    const auto tri = run({"polytope", "check", inst("triangle.json")});
    EXPECT_EQ(tri.code, 2);
    EXPECT_FALSE(tri.json()["conditions"]["ii_centrally_symmetric"].get<bool>());
}

TEST(Cli, PolytopeFtProbeWitness)
{
    const auto ft = run({"polytope", "ft", inst("square.json"), "--xi", "0,0"});
    ASSERT_EQ(ft.code, 0);
    EXPECT_EQ(ft.json()["value"]["re"].get<std::string>().substr(0, 4), "1.00");
    const auto pr = run({"polytope", "probe", inst("square.json"), "--v", "1,0", "--R", "1", "--eps", "1/10",
                         "--nmax", "2", "--samples", "4"});
    ASSERT_EQ(pr.code, 0);
    EXPECT_TRUE(pr.json()["near_zero_found"].get<bool>());
    const auto w = run({"polytope", "witness", inst("triangle.json"), "--v", "1,1", "--R", "2", "--eps", "1/2",
                        "--N", "1,100", "--samples", "32"});
    ASSERT_EQ(w.code, 0);
    EXPECT_FALSE(w.json()["reports"][0]["inequality_violated"].get<bool>());
    EXPECT_TRUE(w.json()["reports"][1]["inequality_violated"].get<bool>());
    EXPECT_EQ(w.json()["threshold"], 18);
}

TEST(Cli, UsageAndInstanceErrors)
{
    EXPECT_EQ(run({}).code, 64);
    EXPECT_EQ(run({"frobnicate"}).code, 64);
    EXPECT_EQ(run({"check"}).code, 64);
    const auto flt = run({"check", "--omega", "[[0, 1.5]]"});
    EXPECT_EQ(flt.code, 64);
    EXPECT_EQ(flt.json()["error"]["path"], "omega[0][1]");
    const auto key = run({"check", "--omega", R"({"omega": [[0, 1]], "colour": "red"})"});
    EXPECT_EQ(key.code, 64);
    EXPECT_EQ(key.json()["error"]["path"], "$.colour");
    EXPECT_EQ(run({"check", "--omega", "0,1;2"}).code, 64);
    EXPECT_EQ(run({"check", "--omega", "/nonexistent/file.json"}).code, 64);
    EXPECT_EQ(run({"solve", "--omega", "0,1"}).code, 64);
    EXPECT_EQ(run({"solve", "--omega", "0,1", "--period", "1", "--sweep-periods", "1..2"}).code, 64);
    EXPECT_EQ(run({"solve", "--omega", "0,1", "--sweep-periods", "3..1"}).code, 64);
    EXPECT_EQ(run({"polytope", "ft", inst("square.json"), "--xi", "1,2,3"}).code, 64);
    EXPECT_EQ(run({"polytope", "witness", inst("square.json"), "--v", "1,0", "--R", "1", "--eps", "1/2"}).code, 64);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutputIsDeterministic)
{
    const auto a = run({"solve", "--omega", "0,1;2,4", "--sweep-periods", "1..3", "--svg", tmp("a.svg")});
    const auto b = run({"solve", "--omega", "0,1;2,4", "--sweep-periods", "1..3", "--svg", tmp("b.svg")});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(slurp(tmp("a.svg")), slurp(tmp("b.svg")));
}

TEST(Svg, ConstantStepFunctionGolden)
{
    const auto s = weaktile::svg::step_function(weaktile::StepFunction::indicator(omega("0,1")),
                                                weaktile::Window(Q("0"), Q("1")));
    EXPECT_EQ(s, slurp(std::string(WEAKTILE_GOLDEN) + "/step_constant.svg"));
}

TEST(Svg, TwoIntervalStripGolden)
{
    const auto sol = weaktile::weak_tiling_lp(omega("0,1;2,3"), Q("4"));
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(weaktile::svg::tiling_strip(omega("0,1;2,3"), *sol),
              slurp(std::string(WEAKTILE_GOLDEN) + "/strip_two_intervals.svg"));
}

TEST(Svg, EmptyMeasureIsAxisOnly)
{
    const auto s = weaktile::svg::measure(weaktile::AtomicMeasure(), weaktile::Window(Q("-1"), Q("2")));
    EXPECT_EQ(s, slurp(std::string(WEAKTILE_GOLDEN) + "/empty_measure.svg"));
    EXPECT_EQ(s.find("#e15759"), std::string::npos);
    EXPECT_EQ(s.find("<rect x=\"40"), std::string::npos);
}
