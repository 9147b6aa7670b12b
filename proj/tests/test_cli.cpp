#include "chenruan/cli.hpp"

#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace chenruan;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_command(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("constants and betti") {
    const auto c = run({"constants", "--genus", "2"});
    CHECK(c.status == kExitOk);
    CHECK(c.out == "genus: 2\nthaddeus_number: 4\nv: 1/4\n");
    CHECK(run({"constants", "--genus", "3"}).out == "genus: 3\nthaddeus_number: 224\nv: 7/2\n");

    CHECK(run({"betti", "--genus", "2", "--format", "csv"}).out == "1,0,16,4,16,0,1\n");
    CHECK(run({"betti", "--genus", "2"}).out == "1,0,16,4,16,0,1\n");
    const auto json = run({"betti", "--genus", "2", "--format", "json"}).out;
    CHECK(json.find("\"betti\": [1, 0, 16, 4, 16, 0, 1]") != std::string::npos);
    CHECK(json.find("\"euler_characteristic\": 30") != std::string::npos);
    const auto latex = run({"betti", "--genus", "2", "--format", "latex"}).out;
    CHECK(latex.find("\\begin{tabular}") == 0);
    CHECK(latex.find("$b_i$ & 1 & 0 & 16 & 4 & 16 & 0 & 1") != std::string::npos);
}

TEST_CASE("products, pairings and triples") {
    CHECK(run({"product", "--genus", "2", "--lhs", "[1000;1]", "--rhs", "[1000;1]"}).out == "8*k^2\n");
    CHECK(run({"product", "--genus", "2", "--lhs", "k", "--rhs", "[1000]"}).out == "2*[1000; e1.f1]\n");
    CHECK(run({"product", "--genus", "2", "--lhs", "[1000]", "--rhs", "[0100]"}).out == "1/4*[1100; e1.f1]\n");
    CHECK(run({"pair", "--genus", "2", "--lhs", "k", "--rhs", "k^2"}).out == "1/4\n");
    CHECK(run({"triple", "--genus", "2", "[1000]", "[1000]", "k"}).out == "2\n");
    CHECK(run({"triple", "--genus", "2", "[1000]", "[0100]", "[1100]"}).out == "1/4\n");
}

TEST_CASE("sector description") {
    const auto r = run({"sector", "--genus", "3", "--label", "100000"});
    CHECK(r.status == kExitOk);
    CHECK(r.out.find("degree_shift: 2\n") != std::string::npos);
    CHECK(r.out.find("fixed_locus_complex_dim: 2\n") != std::string::npos);
    CHECK(r.out.find("covering_genus: 5\n") != std::string::npos);
    CHECK(r.out.find("betti: 1,0,6,0,1\n") != std::string::npos);
    CHECK(r.out.find("eigenvalues: (0, 2) (1/2, 4)\n") != std::string::npos);
    const auto o = run({"sector", "--genus", "2", "--label", "O"});
    CHECK(o.out.find("degree_shift: 0\n") != std::string::npos);
}

TEST_CASE("verify exit codes") {
    const auto r = run({"verify", "--genus", "2", "--suite", "all"});
    CHECK(r.status == kExitOk);
    CHECK(r.out.find("associativity g=2 mode=exhaustive checked=39304 violations=0") != std::string::npos);
    const auto s = run({"verify", "--genus", "3", "--suite", "frobenius", "--samples", "50", "--seed", "9"});
    CHECK(s.status == kExitOk);
    CHECK(s.out == run({"verify", "--genus", "3", "--suite", "frobenius", "--samples", "50", "--seed", "9"}).out);
}

TEST_CASE("usage errors") {
    CHECK(run({}).status == kExitUsage);
    CHECK(run({"constants"}).status == kExitUsage);
    CHECK(run({"constants", "--genus", "1"}).status == kExitUsage);
    CHECK(run({"betti", "--genus", "2", "--format", "xml"}).status == kExitUsage);
    const auto bad = run({"product", "--genus", "2", "--lhs", "[01; e1]", "--rhs", "k"});
    CHECK(bad.status == kExitUsage);
    CHECK(bad.err.find("column 2") != std::string::npos);
    CHECK(run({"verify", "--genus", "2", "--suite", "bogus"}).status == kExitUsage);
    CHECK(run({"table", "--genus", "4", "--out", "/tmp/x.json"}).status == kExitUsage);
    CHECK(run({"--help"}).status == kExitOk);
}

TEST_CASE("table export") {
    const std::string path = "chenruan_cli_table_test.json";
    const auto r = run({"table", "--genus", "2", "--out", path});
    CHECK(r.status == kExitOk);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("\"thaddeus_number\": \"4\"") != std::string::npos);
    std::remove(path.c_str());
}
