// End-to-end tests of the command-line binary: exit codes, report formats,
// stored files, and the rule that thread count never changes output bytes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef LP3_CLI_PATH
#error "LP3_CLI_PATH must point at the built command-line binary"
#endif

namespace {

std::string fresh_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / ("lp3_cli_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir.string();
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out << text;
}

// Runs the binary with the given arguments; fills captured stdout/stderr.
int run_cli(const std::vector<std::string>& args, std::string* out = nullptr,
            std::string* err = nullptr) {
    static int counter = 0;
    const std::string base =
        (std::filesystem::temp_directory_path() / ("lp3_cli_io_" + std::to_string(counter++)))
            .string();
    std::string cmd = std::string("'") + LP3_CLI_PATH + "'";
    for (const std::string& a : args) cmd += " '" + a + "'";
    cmd += " > '" + base + ".out' 2> '" + base + ".err'";
    const int status = std::system(cmd.c_str());
    if (out) *out = read_text(base + ".out");
    if (err) *err = read_text(base + ".err");
    std::filesystem::remove(base + ".out");
    std::filesystem::remove(base + ".err");
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
    std::size_t n = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) == 0) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("usage errors exit 2 with help text") {
    std::string out, err;
    CHECK(run_cli({}, &out, &err) == 2);
    CHECK(err.find("Subcommands") != std::string::npos);

    CHECK(run_cli({"--bogus"}, &out, &err) == 2);
    CHECK(run_cli({"enumerate"}, &out, &err) == 2);  // --out is required
    CHECK(err.find("--out") != std::string::npos);

    CHECK(run_cli({"--help"}, &out, &err) == 0);
    CHECK(out.find("enumerate") != std::string::npos);
    CHECK(out.find("verify") != std::string::npos);
}

TEST_CASE("validation failures exit 1 and name the broken invariant") {
    std::string out, err;
    CHECK(run_cli({"enumerate", "--max-size", "4", "--out", fresh_dir("v1")}, &out, &err) == 1);
    CHECK(err.find("max-size must be at least 5") != std::string::npos);

    CHECK(run_cli({"oracle", "--size", "9"}, &out, &err) == 1);
    CHECK(err.find("size must be 5, 6, or 7") != std::string::npos);

    CHECK(run_cli({"verify", "--in", fresh_dir("v2")}, &out, &err) == 1);
    CHECK(err.find("no census files") != std::string::npos);

    CHECK(run_cli({"oracle", "--size", "5", "--threads", "0"}, &out, &err) == 1);
    CHECK(err.find("threads must be at least 1") != std::string::npos);

    CHECK(run_cli({"oracle", "--size", "5", "--volume-bound", "10"}, &out, &err) == 1);
    CHECK(err.find("BoundTooSmall") != std::string::npos);
}

TEST_CASE("oracle prints or stores the exhaustive small census") {
    std::string out, err;
    CHECK(run_cli({"oracle", "--size", "5"}, &out, &err) == 0);
    CHECK(count_lines_starting(out, "5 ") == 9);
    CHECK(out.rfind("#LP3 1\n", 0) == 0);

    // An over-bound scan finds the same classes.
    std::string over;
    CHECK(run_cli({"oracle", "--size", "5", "--volume-bound", "25"}, &over, &err) == 0);
    CHECK(count_lines_starting(over, "5 ") == 9);

    const std::string dir = fresh_dir("oracle");
    const std::string file = dir + "/size5.lp3";
    CHECK(run_cli({"oracle", "--size", "5", "--out", file}, &out, &err) == 0);
    CHECK(out == "9 records written to " + file + "\n");
    CHECK(count_lines_starting(read_text(file), "5 ") == 9);
}

TEST_CASE("canon maps equivalent inputs to identical lines") {
    const std::string dir = fresh_dir("canon");
    // One class, written as a loose list and as a transformed copy of itself
    // (translated by (1,1,1) after the linear map x,y,z -> x, x+y, z).
    write_text(dir + "/a.txt", "0 0 0  1 0 0  0 1 0  0 0 1  1 1 2\n");
    write_text(dir + "/b.txt", "1 1 1  2 2 1  1 2 1  1 1 2  2 3 3\n");
    std::string out_a, out_b, err;
    CHECK(run_cli({"canon", dir + "/a.txt"}, &out_a, &err) == 0);
    CHECK(run_cli({"canon", dir + "/b.txt"}, &out_b, &err) == 0);
    CHECK(out_a == out_b);
    CHECK(count_lines_starting(out_a, "5 ") == 1);

    // Same again for the size-6 class that no generator reaches, under the
    // unimodular map x,y,z -> x+z, y, z followed by a shift of (1,0,0).
    write_text(dir + "/e1.txt", "-1 -2 -3  -1 -1 0  0 0 0  0 1 0  1 0 0  1 2 3\n");
    write_text(dir + "/e2.txt", "-3 -2 -3  0 -1 0  1 0 0  1 1 0  2 0 0  5 2 3\n");
    std::string out_e1, out_e2;
    CHECK(run_cli({"canon", dir + "/e1.txt"}, &out_e1, &err) == 0);
    CHECK(run_cli({"canon", dir + "/e2.txt"}, &out_e2, &err) == 0);
    CHECK(out_e1 == out_e2);
    CHECK(count_lines_starting(out_e1, "6 ") == 1);

    // The canonical output re-reads cleanly in strict mode once given the
    // database header; the loose list does not.
    write_text(dir + "/canon.lp3", "#LP3 1\n" + out_a);
    std::string again;
    CHECK(run_cli({"canon", dir + "/canon.lp3", "--strict"}, &again, &err) == 0);
    CHECK(again == out_a);
    CHECK(run_cli({"canon", dir + "/a.txt", "--strict"}, &again, &err) == 1);
}

TEST_CASE("diff compares by canonical class") {
    const std::string dir = fresh_dir("diff");
    std::string oracle5, err;
    REQUIRE(run_cli({"oracle", "--size", "5", "--out", dir + "/a.lp3"}, &oracle5, &err) == 0);

    // Same records, permuted and translated: no differences.
    const std::string text = read_text(dir + "/a.lp3");
    std::vector<std::string> records;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') records.push_back(line);
    }
    REQUIRE(records.size() == 9);
    std::string shuffled;
    for (std::size_t i = records.size(); i-- > 0;) shuffled += records[i] + "\n";
    write_text(dir + "/b.txt", shuffled);
    std::string out;
    CHECK(run_cli({"diff", dir + "/a.lp3", dir + "/b.txt"}, &out, &err) == 0);
    CHECK(out.empty());

    // Dropping one record shows up on the left side only.
    std::string truncated;
    for (std::size_t i = 1; i < records.size(); ++i) truncated += records[i] + "\n";
    write_text(dir + "/c.txt", truncated);
    CHECK(run_cli({"diff", dir + "/a.lp3", dir + "/c.txt"}, &out, &err) == 1);
    CHECK(count_lines_starting(out, "< ") == 1);
    CHECK(count_lines_starting(out, "> ") == 0);
}

TEST_CASE("enumerate, verify, and classify work end to end") {
    const std::string dir = fresh_dir("flow");
    std::string out, err;
    REQUIRE(run_cli({"enumerate", "--max-size", "7", "--out", dir}, &out, &err) == 0);
    CHECK(out.find("enumeration_summary") != std::string::npos);
    CHECK(out.find("7\t496\t50\t446\tcomputed") != std::string::npos);
    for (int n = 5; n <= 7; ++n) {
        CHECK(std::filesystem::exists(dir + "/classes_size" + std::to_string(n) + ".lp3"));
    }
    CHECK(std::filesystem::exists(dir + "/summary.tsv"));

    // A second run refuses to overwrite, then resumes cleanly from disk.
    CHECK(run_cli({"enumerate", "--max-size", "7", "--out", dir}, &out, &err) == 1);
    CHECK(err.find("--resume") != std::string::npos);
    CHECK(run_cli({"enumerate", "--max-size", "7", "--out", dir, "--resume"}, &out, &err) == 0);
    CHECK(out.find("7\t496\t50\t446\tdisk") != std::string::npos);

    CHECK(run_cli({"verify", "--in", dir}, &out, &err) == 0);
    CHECK(out.find("PASS census by size and vertices :: size 7 total = 496\n") !=
          std::string::npos);
    CHECK(out.find(" 0 failed") != std::string::npos);
    CHECK(out.find("FAIL") == std::string::npos);
    CHECK(out.find("SKIPPED") != std::string::npos);  // sizes 8..11 not in this run

    const std::string report = fresh_dir("flow_report");
    CHECK(run_cli({"classify", "--in", dir, "--report", report}, &out, &err) == 0);
    CHECK(out.find("census_by_vertices") != std::string::npos);
    CHECK(out.find("volume_extremes") != std::string::npos);
    const std::string main_table = read_text(report + "/census_by_vertices.tsv");
    CHECK(main_table.find("7\t103\t296\t97\t496") != std::string::npos);
}

TEST_CASE("thread count changes no output byte") {
    const std::string d1 = fresh_dir("t1");
    const std::string d3 = fresh_dir("t3");
    std::string out1, out3, err;
    REQUIRE(run_cli({"enumerate", "--max-size", "7", "--out", d1, "--threads", "1"}, &out1, &err) ==
            0);
    REQUIRE(run_cli({"enumerate", "--max-size", "7", "--out", d3, "--threads", "3"}, &out3, &err) ==
            0);
    CHECK(out1 == out3);
    for (int n = 5; n <= 7; ++n) {
        const std::string name = "/classes_size" + std::to_string(n) + ".lp3";
        CHECK(read_text(d1 + name) == read_text(d3 + name));
    }
    CHECK(read_text(d1 + "/summary.tsv") == read_text(d3 + "/summary.tsv"));

    std::string v1, v3;
    CHECK(run_cli({"verify", "--in", d1, "--threads", "3"}, &v1, &err) == 0);
    CHECK(run_cli({"verify", "--in", d3, "--threads", "1"}, &v3, &err) == 0);
    CHECK(v1 == v3);
}
