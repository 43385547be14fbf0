#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kBin = HG_BIN;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_path = "/tmp/hg_cli_test_out.txt";
    const std::string cmd = kBin + " " + args + " > " + out_path + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WEXITSTATUS(raw);
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

std::string write_file(const std::string& name, const std::string& text) {
    const std::string path = "/tmp/hg_cli_" + name;
    std::ofstream f(path);
    f << text;
    return path;
}

const char* kEdge22 =
    "vertex a h=2\nvertex b h=2\nedge a b\n";
const char* kEdge33 =
    "vertex a h=3\nvertex b h=3\nedge a b\n";
const char* kDirC3 =
    "vertex a h=2\nvertex b h=2\nvertex c h=2\narc a b\narc b c\narc c a\n";

}  // namespace

TEST_CASE("solve exit codes") {
    const std::string win = write_file("win.hgf", kEdge22);
    const std::string lose = write_file("lose.hgf", kEdge33);
    CHECK(run("solve " + win).code == 0);
    CHECK(run("solve " + lose).code == 1);
    SUBCASE("oracle and classify methods agree") {
        CHECK(run("solve --method oracle " + win).code == 0);
        CHECK(run("solve --method classify " + win).code == 0);
        CHECK(run("solve --method oracle " + lose).code == 1);
    }
    SUBCASE("output names the verdict") {
        RunResult r = run("solve " + win);
        CHECK(r.out.find("winnable") != std::string::npos);
    }
}

TEST_CASE("usage and parse errors") {
    CHECK(run("no-such-command").code == 64);
    CHECK(run("solve").code == 64);
    const std::string bad = write_file("bad.hgf", "vertex a h=1\n");
    CHECK(run("solve " + bad).code == 65);
    const std::string garbled = write_file("garbled.hgf", "vertx a h=2\n");
    CHECK(run("solve " + garbled).code == 65);
    CHECK(run("solve /tmp/hg_cli_does_not_exist.hgf").code == 65);
}

TEST_CASE("certificates round-trip through verify") {
    const std::string win = write_file("win.hgf", kEdge22);
    const std::string cert = "/tmp/hg_cli_cert.txt";
    CHECK(run("solve --method oracle --certificate " + cert + " " + win).code == 0);
    CHECK(run("verify --strategy " + cert + " " + win).code == 0);
    SUBCASE("a deliberately bad strategy is rejected") {
        const std::string bad = write_file(
            "bad_strategy.txt",
            "plan a order=b\n0 -> 0\n1 -> 0\nplan b order=a\n0 -> 0\n1 -> 0\n");
        RunResult r = run("verify --strategy " + bad + " " + win);
        CHECK(r.code == 1);
        CHECK(r.out.find("disprover") != std::string::npos);
    }
}

TEST_CASE("classify reports rules") {
    const std::string c3 = write_file("c3.hgf", kDirC3);
    RunResult r = run("classify " + c3);
    CHECK(r.code == 0);
    const std::string c5 = write_file(
        "c5.hgf",
        "vertex a h=3\nvertex b h=3\nvertex c h=3\nvertex d h=3\nvertex e "
        "h=3\nedge a b\nedge b c\nedge c d\nedge d e\nedge e a\n");
    CHECK(run("classify " + c5).code == 1);
}

TEST_CASE("reduce emits the residual game") {
    const std::string path52 = write_file(
        "path52.hgf", "vertex a h=5\nvertex b h=2\nedge a b\n");
    const std::string emitted = "/tmp/hg_cli_residual.hgf";
    RunResult r = run("reduce --emit " + emitted + " " + path52);
    CHECK(r.code == 1);  // fully reduced away: unwinnable
    CHECK_FALSE(r.out.empty());
}

TEST_CASE("report json contains the expected fields") {
    const std::string lose = write_file("lose.hgf", kEdge33);
    RunResult r = run("report --format json " + lose);
    CHECK(r.code == 1);
    CHECK(r.out.find("\"verdict\"") != std::string::npos);
    CHECK(r.out.find("unwinnable") != std::string::npos);
    CHECK(r.out.find("\"trace\"") != std::string::npos);
    CHECK(r.out.find("\"stats\"") != std::string::npos);
}

TEST_CASE("pack golden cases") {
    RunResult unsat = run("pack --dims 2,2 --prism 1,1 --count 5 --overlap 1");
    CHECK(unsat.code == 1);
    CHECK(unsat.out.find("unsat") != std::string::npos);
    RunResult sat = run("pack --dims 2,2 --prism 1,1 --count 4 --overlap 1");
    CHECK(sat.code == 0);
}

TEST_CASE("bound prints thresholds") {
    const std::string lose =
        write_file("five2.hgf", "vertex a h=5\nvertex b h=5\nedge a b\n");
    RunResult r = run("bound " + lose);
    CHECK(r.code == 1);
    CHECK(r.out.find("local-lemma unwinnable") != std::string::npos);
    const std::string win = write_file("win.hgf", kEdge22);
    CHECK(run("bound " + win).code == 2);  // lemma stays silent: unknown
}

TEST_CASE("poly evaluates the acyclicity polynomial") {
    const std::string c3 = write_file("c3.hgf", kDirC3);
    RunResult r = run("poly --weights 1/2,1/2,1/2 " + c3);
    CHECK(r.code == 0);
    CHECK(r.out.find("1/4") != std::string::npos);
}

TEST_CASE("construct runs an attachment") {
    const std::string win = write_file("win.hgf", kEdge22);
    const std::string cert = "/tmp/hg_cli_cert.txt";
    REQUIRE(run("solve --method oracle --certificate " + cert + " " + win).code == 0);
    const std::string emitted = "/tmp/hg_cli_built.hgf";
    const std::string built_cert = "/tmp/hg_cli_built_cert.txt";
    RunResult r = run("construct --op attach_vertex_clique --in " + win +
                      " --strategy " + cert +
                      " --args ys=a+b,hx=2,gx=1,x=x --emit " + emitted +
                      " --certificate " + built_cert);
    CHECK(r.code == 0);
    CHECK(run("verify --strategy " + built_cert + " " + emitted).code == 0);
}
