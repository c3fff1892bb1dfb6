#include "zacyclic/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string cli = ZACYCLIC_CLI_PATH;

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    fs::path tmp = fs::temp_directory_path() / "zacyclic_cli_out.txt";
    std::string cmd = cli + " " + args + " > " + tmp.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (fs::exists(tmp)) {
        r.out = zac::read_file(tmp.string());
        fs::remove(tmp);
    }
    return r;
}

fs::path workdir() {
    auto d = fs::temp_directory_path() / "zacyclic_cli_work";
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("build writes complexes and prints f-vectors") {
    auto dir = workdir();
    auto path = (dir / "c23.complex").string();
    auto r = run("build complex23 -o " + path);
    CHECK(r.code == 0);
    CHECK(r.out == "f-vector: (23, 76, 54)\n");
    auto K = zac::read_complex(zac::read_file(path));
    CHECK(K.f_vector() == std::vector<std::size_t>{23, 76, 54});

    CHECK(run("build shaded -o " + (dir / "shaded.complex").string()).out ==
          "f-vector: (22, 54, 30)\n");
    CHECK(run("build dunce-hat -o " + (dir / "dunce.complex").string()).code == 0);
    CHECK(run("build cone-K5 -o " + (dir / "k5.complex").string()).code == 0);
    CHECK(run("build cone-K33 -o " + (dir / "k33.complex").string()).code == 0);
    CHECK(run("build dodecahedral-quotient -o " + (dir / "quot.complex").string()).code == 0);
}

TEST_CASE("unknown build name exits 2") {
    CHECK(run("build nosuch").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("").code == 2);
}

TEST_CASE("analyze homology and collapse") {
    auto dir = workdir();
    auto c23 = (dir / "c23.complex").string();
    REQUIRE(run("build complex23 -o " + c23).code == 0);
    auto r = run("analyze " + c23 + " homology");
    CHECK(r.code == 0);
    CHECK(r.out.find("Z-acyclic: true") != std::string::npos);

    auto dunce = (dir / "dunce.complex").string();
    REQUIRE(run("build dunce-hat -o " + dunce).code == 0);
    auto c = run("analyze " + dunce + " collapse");
    CHECK(c.code == 0);
    CHECK(c.out == "free faces: 0; collapsed: false\n");

    CHECK(run("analyze " + c23 + " nonsense").code == 2);
    CHECK(run("analyze /nonexistent homology").code == 2);
}

TEST_CASE("analyze pi1 on the 23-vertex complex") {
    auto dir = workdir();
    auto c23 = (dir / "c23.complex").string();
    REQUIRE(run("build complex23 -o " + c23).code == 0);
    auto r = run("analyze " + c23 + " pi1");
    CHECK(r.code == 0);
    CHECK(r.out.find("abelianization: 0") != std::string::npos);
    CHECK(r.out.find("a5-epimorphism: (") != std::string::npos);
    CHECK(r.out.find("order: 120") != std::string::npos);
}

TEST_CASE("search then verify round trip, exit codes") {
    auto dir = workdir();
    auto shaded = (dir / "shaded.complex").string();
    auto coords = (dir / "shaded.coords").string();
    REQUIRE(run("build shaded -o " + shaded).code == 0);

    auto s = run("search " + shaded + " --box 4");
    REQUIRE(s.code == 0);
    zac::write_file(coords, s.out);

    auto v = run("verify " + shaded + " " + coords);
    CHECK(v.code == 0);
    CHECK(v.out.find("verdict: pass") != std::string::npos);

    // swap two coordinates to force a violation
    auto c = zac::read_coordinates(s.out);
    auto p = c.assignment.at("F");
    c.assignment.at("F") = c.assignment.at("G");
    c.assignment.at("G") = p;
    auto broken = (dir / "broken.coords").string();
    zac::write_file(broken, zac::write_coordinates(c));
    auto bad = run("verify " + shaded + " " + broken);
    CHECK(bad.code == 1);
    CHECK(bad.out.find("verdict: fail") != std::string::npos);

    // missing vertex is a format problem
    c.assignment.erase("F");
    zac::write_file(broken, zac::write_coordinates(c));
    CHECK(run("verify " + shaded + " " + broken).code == 2);
}

TEST_CASE("link subcommand") {
    auto dir = workdir();
    auto c1 = (dir / "hopf1.curve").string();
    auto c2 = (dir / "hopf2.curve").string();
    auto c3 = (dir / "split.curve").string();
    zac::write_file(c1, "dim: 3\nw0: 2 2 0\nw1: -2 2 0\nw2: -2 -2 0\nw3: 2 -2 0\n");
    zac::write_file(c2, "dim: 3\nw0: 0 0 -1\nw1: 4 0 -1\nw2: 4 0 1\nw3: 0 0 1\n");
    zac::write_file(c3, "dim: 3\nw0: 2 2 9\nw1: -2 2 9\nw2: -2 -2 9\nw3: 2 -2 9\n");
    auto hopf = run("link " + c1 + " " + c2);
    CHECK(hopf.code == 0);
    CHECK((hopf.out == "lk: 1\n" || hopf.out == "lk: -1\n"));
    auto split = run("link " + c1 + " " + c3);
    CHECK(split.code == 0);
    CHECK(split.out == "lk: 0\n");
    CHECK(run("link " + c1 + " /nonexistent").code == 2);
}

TEST_CASE("report pipeline with the in-repo fixtures") {
    auto dir = workdir() / "report";
    fs::create_directories(dir);
    auto rep = (dir / "report.txt").string();
    // run from the source root so the models/ fixtures are picked up
    std::string cd = "cd " + std::string(ZACYCLIC_SOURCE_DIR) + " && ";
    fs::path tmp = fs::temp_directory_path() / "zacyclic_cli_out.txt";
    int status = std::system((cd + cli + " report -o " + rep + " > " + tmp.string() +
                              " 2>/dev/null").c_str());
    CHECK(WEXITSTATUS(status) == 0);
    auto text = zac::read_file(rep);
    CHECK(text.find("complexName: complex23\n") != std::string::npos);
    CHECK(text.find("fVector: (23, 76, 54)\n") != std::string::npos);
    CHECK(text.find("acyclic: true\n") != std::string::npos);
    CHECK(text.find("pi1.order: 120\n") != std::string::npos);
    CHECK(text.find("embedding.verdict: pass\n") != std::string::npos);
    CHECK(text.find("embedding4.verdict: pass\n") != std::string::npos);
    CHECK(text.find("linkedPair.lk:") != std::string::npos);
    CHECK(text.find("flagged:") == std::string::npos);

    // the emitted model files re-verify
    CHECK(run("verify " + (dir / "shaded.complex").string() + " " +
              (dir / "shaded-r3.coords").string()).code == 0);
    CHECK(run("verify " + (dir / "complex23.complex").string() + " " +
              (dir / "full-r4.coords").string()).code == 0);

    // the shipped fixtures verify as-is
    std::string models = std::string(ZACYCLIC_SOURCE_DIR) + "/models";
    CHECK(run("verify " + (dir / "shaded.complex").string() + " " + models +
              "/shaded-r3").code == 0);
    CHECK(run("verify " + (dir / "complex23.complex").string() + " " + models +
              "/full-r4").code == 0);
    fs::remove(tmp);
}
