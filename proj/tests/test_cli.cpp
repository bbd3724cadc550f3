#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "faultdom/io.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

const std::string kData = FAULTDOM_DATA_DIR;

// stdout only unless `merge`; the banner goes to stderr.
Run run(const std::string& args, bool merge = false, const std::string& env = "") {
    const std::string cmd = env + " '" + std::string(FAULTDOM_CLI) + "' " + args + (merge ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (const auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& rel) { return "'" + kData + "/" + rel + "'"; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("solve and verify examples") {
    const auto solve = run("-q solve -g " + data("graphs/petersen.el") + " --variant err");
    CHECK(solve.code == 0);
    CHECK(first_line(solve.out).rfind("ERR_LD 9 proved ", 0) == 0);

    const auto verify = run("-q verify -g " + data("graphs/c4.el") + " -s " + data("sets/all.ds") + " --variant err");
    CHECK(verify.code == 1);
    CHECK(first_line(verify.out) == "VIOLATION ERR_LD ii 0 2 1");

    const auto ok = run("-q verify --family petersen -s " + data("sets/petersen_minus0.ds"));
    CHECK(ok.code == 0);
    CHECK(ok.out == "OK\n");

    const auto none = run("-q solve --family cycle:3");
    CHECK(none.code == 1);
    CHECK(none.out == "NO_SOLUTION ERR_LD\n");

    CHECK(run("-q exists --family cycle:4").code == 1);
    CHECK(run("-q exists --family cycle:5").out == "EXISTS ERR_LD\n");
}

TEST_CASE("grid commands") {
    const auto cert = run("-q grid-certify -p " + data("patterns/sq.pat"));
    CHECK(cert.code == 0);
    CHECK(cert.out == "OK density 2/3 torus 6x6\n");

    const auto search = run("-q grid-search --lattice SQ --max-rows 3 --max-cols 3");
    CHECK(search.code == 0);
    CHECK(first_line(search.out) == "FOUND density 2/3 cell 2x3");

    const auto dot = run("-q export-dot -p " + data("patterns/ladder.pat"));
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("graph LADDER {", 0) == 0);
}

TEST_CASE("reduction commands") {
    const auto dir = std::filesystem::temp_directory_path() / "faultdom_cli_test";
    std::filesystem::create_directories(dir);
    const auto out = (dir / "r.el").string();
    const auto reduce = run("-q reduce -f " + data("cnf/example.cnf") + " -o '" + out + "'");
    CHECK(reduce.code == 0);
    CHECK(reduce.out == "REDUCED vertices 87 edges 123 mandatory 77\n");
    CHECK(first_line(faultdom::read_file(out)) == "87 123");
    CHECK(std::filesystem::exists(dir / "r.labels"));
    CHECK(std::filesystem::exists(dir / "r.mandatory.ds"));
    std::filesystem::remove_all(dir);

    const auto rt = run("-q roundtrip -f " + data("cnf/single.cnf"));
    CHECK(rt.code == 0);
    CHECK(rt.out == "PASS sat 1 threshold 38 optimum 38 proved\n");
}

TEST_CASE("localization commands") {
    const std::string pet = "-g " + data("graphs/petersen.el") + " -s " + data("sets/petersen_minus0.ds");
    const auto sim = run("-q simulate " + pet + " --intruder 0 --fault 1:0");
    CHECK(sim.code == 0);
    CHECK(sim.out == "1:0\n2:0\n3:0\n4:1\n5:1\n6:0\n7:0\n8:0\n9:0\n");

    const auto sweep = run("-q sweep " + pet + " --jobs 2");
    CHECK(sweep.code == 0);
    CHECK(sweep.out == "scenarios=209 correct=209 disagreements=0\n");
    CHECK(run("-q sweep -g " + data("graphs/c5.el") + " -s " + data("sets/c5_all.ds"), false, "FAULTDOM_JOBS=3").out ==
          "scenarios=66 correct=66 disagreements=0\n");

    const auto bad = run("-q sweep -g " + data("graphs/c4.el") + " -s " + data("sets/all.ds"));
    CHECK(bad.code == 1);
    CHECK(first_line(bad.out) == "NOT_ERR_LD");
    CHECK(bad.out.find("WITNESS intruder=0") != std::string::npos);
}

TEST_CASE("exit codes, banner and determinism") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("verify --bogus -s x").code == 2);
    CHECK(run("-q verify -g /nonexistent.el -s " + data("sets/all.ds")).code == 2);
    CHECK(run("-q verify -g " + data("patterns/sq.pat") + " -s " + data("sets/all.ds")).code == 2);
    CHECK(run("-q simulate --family cycle:5 -s " + data("sets/c5_all.ds") + " --fault 0:9").code == 2);
    CHECK(run("-q sweep --family cycle:5 -s " + data("sets/c5_all.ds"), false, "FAULTDOM_JOBS=zero").code == 2);
    CHECK(run("--help").code == 0);

    const std::string args = "solve --family petersen --variant det";
    CHECK(run(args, true).out.rfind("faultdom ", 0) == 0);
    CHECK(run("-q " + args, true).out.rfind("DET_LD 6 proved", 0) == 0);
    CHECK(run("-q " + args).out == run("-q " + args).out);
}
