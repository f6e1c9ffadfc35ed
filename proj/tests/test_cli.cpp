#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "app.hpp"
#include "halfstat/engine.hpp"
#include "report.hpp"

using namespace halfstat;
using namespace halfstat::cli;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult invoke(std::vector<std::string> args) {
    std::vector<const char*> argv{"halfstat"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code =
        run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/halfstat_test_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

}  // namespace

TEST_CASE("table1 csv matches the closed forms") {
    const auto res =
        invoke({"table1", "--theta", "0.78539816339744828", "--format",
                "csv"});
    REQUIRE(res.code == 0);
    CHECK(res.err.empty());
    std::stringstream ss(res.out);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "observable,classical,boson,fermion,residual");
    std::vector<std::vector<std::string>> rows;
    while (std::getline(ss, line)) rows.push_back(split_csv_line(line));
    REQUIRE(rows.size() == 3);
    const double expected[3][3] = {{1, 1, 1}, {0.5, 1, 0}, {0.5, 0, 1}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            CHECK(std::stod(rows[r][c + 1]) ==
                  doctest::Approx(expected[r][c]).epsilon(1e-10));
}

TEST_CASE("verify on a circuit file") {
    const auto path = write_temp(
        "modelb.mp",
        "dim 3\nbs 2 3 theta=0.78539816339744828\n"
        "bs 1 3 theta=0.78539816339744828\n");
    const auto res = invoke({"verify", "--circuit", path, "--input", "2,3",
                             "--observable", "P:1,3", "--format", "json"});
    REQUIRE(res.code == 0);
    CHECK(res.err.empty());
    const auto rep = parse_report_json(res.out);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].residual <= 1e-10);
    CHECK(rep.rows[0].classical == doctest::Approx(0.125));
}

TEST_CASE("fermionic same-mode input is refused") {
    const auto res = invoke({"expect", "--theta", "0.5", "--input", "1,1",
                             "--observable", "n:1", "--stats", "fermion"});
    CHECK(res.code == 3);
    CHECK(res.err.find("same mode") != std::string::npos);
}

TEST_CASE("circuit parse errors carry location and exit 3") {
    const auto path = write_temp("bad.mp", "dim 2\nbs 1 3 theta=0.1\n");
    const auto res = invoke({"validate", "--circuit", path});
    CHECK(res.code == 3);
    CHECK(res.err.find("mode 3 exceeds dim 2") != std::string::npos);
    CHECK(res.err.find("line 2") != std::string::npos);
}

TEST_CASE("validate accepts a good circuit") {
    const auto path =
        write_temp("good.mp", "dim 2\nbs 1 2 theta=0.785398163\n");
    const auto res = invoke({"validate", "--circuit", path});
    CHECK(res.code == 0);
    CHECK(res.out.find("ok") == 0);
    CHECK(res.err.empty());
}

TEST_CASE("usage errors exit 2") {
    CHECK(invoke({"expect", "--theta", "0.5"}).code == 2);
    CHECK(invoke({"bogus-command"}).code == 2);
    CHECK(invoke({"table1"}).code == 2);  // --theta required
    CHECK(invoke({"validate", "--circuit", "/nonexistent/file.mp"}).code ==
          2);
}

TEST_CASE("json report round trip") {
    const auto report = from_table("table2", table2(0.9),
                                   {{"theta", "0.9"}});
    const auto parsed =
        parse_report_json(render_report(report, Format::Json));
    CHECK(report_equal(report, parsed));

    const auto rep2 = from_hom_scan(hom_scan({0.1, 0.2}), {});
    CHECK(report_equal(rep2,
                       parse_report_json(render_report(rep2, Format::Json))));
}

TEST_CASE("csv cells round trip at full precision") {
    const auto report = from_table("table1", table1(0.9), {});
    const auto csv = render_report(report, Format::Csv);
    std::stringstream ss(csv);
    std::string line;
    std::getline(ss, line);  // header
    std::size_t row = 0;
    while (std::getline(ss, line)) {
        const auto cells = split_csv_line(line);
        REQUIRE(cells.size() == 5);
        CHECK(std::stod(cells[1]) == report.rows[row].classical);
        CHECK(std::stod(cells[2]) == report.rows[row].boson);
        CHECK(std::stod(cells[3]) == report.rows[row].fermion);
        CHECK(std::stod(cells[4]) == report.rows[row].residual);
        ++row;
    }
    CHECK(row == report.rows.size());
}

TEST_CASE("hom-scan csv schema") {
    const auto res = invoke({"hom-scan", "--points", "2", "--format", "csv"});
    REQUIRE(res.code == 0);
    std::stringstream ss(res.out);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "theta,boson,classical,fermion");
}

TEST_CASE("pretty table carries the statistics headers") {
    const auto res = invoke({"table1", "--theta", "0.785398163"});
    REQUIRE(res.code == 0);
    CHECK(res.out.find("Classical") != std::string::npos);
    CHECK(res.out.find("Bosonic") != std::string::npos);
    CHECK(res.out.find("Fermionic") != std::string::npos);
}

TEST_CASE("randomized verify run is deterministic given the seed") {
    const auto a = invoke({"verify", "--random-trials", "5", "--dim", "3",
                           "--seed", "7"});
    const auto b = invoke({"verify", "--random-trials", "5", "--dim", "3",
                           "--seed", "7"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}
