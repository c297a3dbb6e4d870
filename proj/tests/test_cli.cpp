#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fanplan/canonical.hpp"
#include "fanplan/format.hpp"
#include "helpers.hpp"

using namespace fanplan;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(FANPLAN_FPD_BIN) + " " + args + " 2>&1";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string temp_fixture(const std::string& name) {
    std::string path = std::filesystem::temp_directory_path() / (name + ".fpd");
    write_drawing_file(path, canonical(name));
    return path;
}

} // namespace

TEST_CASE("check: fig1b with --fan exits 1 and prints the SF1 witness") {
    RunResult r = run("check " + temp_fixture("fig1b") + " --fan --configs");
    CHECK(r.code == 1);
    CHECK(r.out.find("fan-planar: no") != std::string::npos);
    CHECK(r.out.find("no-common-endpoint") != std::string::npos);
    CHECK(r.out.find("SF1") != std::string::npos);
}

TEST_CASE("check: planar K4 with --simple exits 0") {
    RunResult r = run("check " + temp_fixture("planar_k4") + " --simple");
    CHECK(r.code == 0);
    CHECK(r.out.find("simple: yes") != std::string::npos);
}

TEST_CASE("check: malformed file exits 2") {
    std::string path = std::filesystem::temp_directory_path() / "broken.fpd";
    std::ofstream(path) << "not a drawing\n";
    RunResult r = run("check " + path);
    CHECK(r.code == 2);
}

TEST_CASE("simplify: fig3a_k3 emits a crossing-free drawing") {
    std::string out = std::filesystem::temp_directory_path() / "fig3a_simplified.fpd";
    RunResult r = run("simplify " + temp_fixture("fig3a_k3") + " -o " + out + " --trace");
    CHECK(r.code == 0);
    Drawing d = read_drawing_file(out);
    CHECK(d.crossing_count() == 0);
    CHECK(r.out.find("->") != std::string::npos); // trace lines
}

TEST_CASE("simplify: fig1d exits 1 with the violation") {
    RunResult r = run("simplify " + temp_fixture("fig1d"));
    CHECK(r.code == 1);
    CHECK(r.out.find("inconsistent-sides") != std::string::npos);
}

TEST_CASE("fuzz: identical parameters give byte-identical corpora") {
    auto dir1 = std::filesystem::temp_directory_path() / "fpd_corpus1";
    auto dir2 = std::filesystem::temp_directory_path() / "fpd_corpus2";
    std::filesystem::remove_all(dir1);
    std::filesystem::remove_all(dir2);
    RunResult r1 = run("fuzz --seed 1 --n 7 --moves 4 --count 3 -o " + dir1.string());
    RunResult r2 = run("fuzz --seed 1 --n 7 --moves 4 --count 3 -o " + dir2.string());
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    for (int i = 1; i <= 3; ++i) {
        std::ifstream f1(dir1 / ("fuzz-" + std::to_string(i) + ".fpd"));
        std::ifstream f2(dir2 / ("fuzz-" + std::to_string(i) + ".fpd"));
        std::string a((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
        std::string b((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
        CHECK(a == b);
        CHECK_FALSE(a.empty());
    }
}

TEST_CASE("render: planar K4 emits valid SVG") {
    std::string out = std::filesystem::temp_directory_path() / "k4.svg";
    RunResult r = run("render " + temp_fixture("planar_k4") + " -o " + out);
    CHECK(r.code == 0);
    std::ifstream f(out);
    std::string svg((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(svg.find("<svg") == 0);
    size_t paths = 0, pos = 0;
    while ((pos = svg.find("<path", pos)) != std::string::npos) paths++, pos++;
    CHECK(paths == 6);
}

TEST_CASE("fixture files on disk match the canonical instances") {
    for (const std::string& name : canonical_names()) {
        std::string path = std::string(FANPLAN_FIXTURE_DIR) + "/" + name + ".fpd";
        INFO(path);
        Drawing from_disk = read_drawing_file(path);
        CHECK(from_disk == canonical(name));
    }
}
