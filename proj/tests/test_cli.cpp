#include "lcmlat/cli.hpp"

#include "lcmlat/json_io.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace lcmlat;
using namespace testutil;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(const std::vector<std::string>& args, const std::string& stdin_data = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_data);
    int code = cli_run(args, out, err, in);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/lcmlat_test_") + name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path;
}

const char* kPathLatticeJson =
    R"({"n":4,"sets":[[],[1],[2],[3],[4],[1,2],[2,3],[3,4],[1,2,3,4]]})";

} // namespace

TEST_CASE("cli enumerate count") {
    auto r = run({"ln", "enumerate", "-n", "4", "--count-only"});
    CHECK(r.code == 0);
    CHECK(r.out == "545\n");
    auto r3 = run({"ln", "enumerate", "-n", "3", "--count-only", "--jobs", "2"});
    CHECK(r3.out == "8\n");
    auto r6 = run({"ln", "enumerate", "-n", "6", "--count-only"});
    CHECK(r6.code == 2);
    CHECK(r6.err.find("66960965307") != std::string::npos);
}

TEST_CASE("cli enumerate stream is deterministic across job counts") {
    auto a = run({"ln", "enumerate", "-n", "3", "--jobs", "1"});
    auto b = run({"ln", "enumerate", "-n", "3", "--jobs", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    // 8 lines, first is the minimal lattice
    std::istringstream lines(a.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 8);
}

TEST_CASE("cli coordinatize reproduces the worked ideals") {
    std::string figure = write_temp(
        "figure.json", R"({"n":4,"sets":[[],[1],[2],[3],[4],[1,2],[2,3],[3,4],[1,2,3],[1,2,3,4]]})");
    auto eccv = run({"coordinatize", "--scheme", "eccv", "--letters", figure});
    CHECK(eccv.code == 0);
    CHECK(eccv.out == "bc^2d^2e^2f^2, ade^2f^2, a^2b^2cf, a^3b^3c^3d^3e\n");
}

TEST_CASE("cli betti on the path lattice") {
    std::string path = write_temp("path.json", kPathLatticeJson);
    auto r = run({"betti", "--via", "both", path});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["total"] == Json::array({1, 4, 3}));
    auto rt = run({"betti", "--format", "text", path});
    CHECK(rt.out.find("total: 1 4 3") != std::string::npos);
    // accepts an ideal too, through its lcm lattice
    auto ri = run({"betti", "-"}, "x*y, y*z, x*z");
    Json ji = Json::parse(ri.out);
    CHECK(ji["total"] == Json::array({1, 3, 2}));
}

TEST_CASE("cli lattice validate verdict and exit codes") {
    std::string good = write_temp("good.json", kPathLatticeJson);
    auto r = run({"lattice", "validate", good});
    CHECK(r.code == 0);
    std::string bad = write_temp("bad.json", R"({"n":3,"sets":[[],[1],[2],[3],[1,2],[1,3]]})");
    auto rb = run({"lattice", "validate", bad});
    CHECK(rb.code == 1);
    Json j = Json::parse(rb.out);
    CHECK(j["valid"] == false);
    CHECK(j["code"] == "MissingRequiredSet");
    auto rc = run({"lattice", "validate", "/tmp/definitely_missing_file.json"});
    CHECK(rc.code == 2);
}

TEST_CASE("cli lcm, roundtrip, scarf, rank, hasse") {
    auto lcm = run({"lcm", "-"}, "cdf, def, bef, abce");
    CHECK(lcm.code == 0);
    Json j = Json::parse(lcm.out);
    CHECK(j["lattice"]["n"] == 4);
    CHECK(j["lattice"]["sets"].size() == 10);

    auto rt = run({"roundtrip", "-"}, "cdf, def, bef, abce");
    CHECK(rt.code == 0);

    std::string path = write_temp("path.json", kPathLatticeJson);
    auto sc = run({"scarf", path});
    Json sj = Json::parse(sc.out);
    CHECK(sj["facets"].size() == 3);

    auto rk = run({"ln", "rank", path});
    CHECK(rk.out == "3\n");

    auto hd = run({"lattice", "hasse", path});
    CHECK(hd.out.find("digraph") != std::string::npos);
    CHECK(hd.out == run({"lattice", "hasse", path}).out);
}

TEST_CASE("cli deform and universal-family") {
    std::string b3 = write_temp("b3.json",
                                lattice_to_json(FiniteAtomicLattice::boolean_lattice(3)).dump());
    std::string m3 = write_temp("m3.json",
                                lattice_to_json(FiniteAtomicLattice::minimal_lattice(3)).dump());
    auto r = run({"deform", "--from", m3, "--to", b3});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    Deformation d = deformation_from_json(j["deformation"]);
    CHECK(is_valid_deformation(d).valid);
    CHECK(ideal_from_json(j["m_p"]) == apply(d));

    auto u = run({"universal-family", m3, "--to", b3});
    CHECK(u.code == 0);
    Json uj = Json::parse(u.out);
    CHECK(lcm_lattice(ideal_from_json(uj["deformed"])).lattice ==
          FiniteAtomicLattice::boolean_lattice(3));
}

TEST_CASE("cli verify scarf-filter and support-check") {
    std::string path = write_temp("path.json", kPathLatticeJson);
    auto r = run({"verify", "scarf-filter", "--mode", "betti", path});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["counterexamples"].empty());

    Json input;
    input["lattice"] = Json::parse(kPathLatticeJson);
    Json complex;
    complex["vertices"] = Json::array({"1", "2", "3", "4"});
    Json facets = Json::array();
    facets.push_back(Json::array({"1", "2"}));
    facets.push_back(Json::array({"2", "3"}));
    facets.push_back(Json::array({"3", "4"}));
    complex["facets"] = facets;
    input["complex"] = complex;
    std::string sc = write_temp("support.json", input.dump());
    auto rs = run({"support-check", sc});
    CHECK(rs.code == 0);
    Json cj = Json::parse(rs.out);
    CHECK(cj["supports"] == true);
    CHECK(cj["minimal"] == true);
}

TEST_CASE("cli usage errors exit with 2") {
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"ln"}).code == 2);
    CHECK(run({}).code == 2);
    // out-of-range atoms are rejected, not undefined behavior
    auto r = run({"lattice", "validate", "-"}, R"({"n":3,"sets":[[],[1],[2],[3],[99],[1,2,3]]})");
    CHECK(r.code == 2);
    CHECK(r.err.find("99") != std::string::npos);
}

TEST_CASE("cli support-check with explicit vertex elements") {
    // label the two endpoints of a segment by the atoms of a 2-atom lattice
    Json input;
    input["lattice"] = Json::parse(R"({"n":2,"sets":[[],[1],[2],[1,2]]})");
    Json complex;
    complex["vertices"] = Json::array({"u", "v"});
    complex["facets"] = Json::array({Json::array({"u", "v"})});
    input["complex"] = complex;
    input["vertex_elements"] = Json::array({Json::array({1}), Json::array({2})});
    auto r = run({"support-check", "-"}, input.dump());
    CHECK(r.code == 0);
    Json cj = Json::parse(r.out);
    CHECK(cj["supports"] == true);
    CHECK(cj["minimal"] == true);
}

TEST_CASE("cli json outputs round trip through the parsers") {
    std::string path = write_temp("path.json", kPathLatticeJson);
    auto r = run({"lattice", "hasse", path, "--format", "json"});
    CHECK(lattice_from_json(Json::parse(r.out)) == path_lattice());
    auto sc = run({"scarf", path});
    auto X = complex_from_json(Json::parse(sc.out));
    CHECK(X.facets().size() == 3);

    auto lb = run({"coordinatize", "--scheme", "min-squarefree", "--labeling", path});
    Labeling lab = labeling_from_json(Json::parse(lb.out));
    CHECK(lab.variables.size() == 5);
    CHECK(validate_labeling(lab).valid);
    CHECK(labeling_to_json(lab) == Json::parse(lb.out));

    auto lc = run({"lcm", "-"}, "x*y, y*z, x*z");
    Json lj = Json::parse(lc.out);
    CHECK(lattice_from_json(lj["lattice"]) == FiniteAtomicLattice::minimal_lattice(3));
    CHECK(lj["multidegrees"]["1,2,3"] == Json::array({1, 1, 1}));
}
