#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bruns/io.hpp"

using namespace bruns;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string tmp_path(const std::string& name) {
    return std::string("io_test_") + name + ".txt";
}

}  // namespace

TEST_CASE("golden parse of the header example") {
    std::string text =
        "ring 32003 x,y,z grevlex\n"
        "matrix f1 1 3\n"
        "x, y, z;\n";
    SessionDocument doc = parse_document(text);
    CHECK(doc.ring->characteristic == 32003);
    CHECK(doc.ring->variables == std::vector<std::string>{"x", "y", "z"});
    REQUIRE(doc.matrices.size() == 1);
    const PolyMatrix& f = doc.matrix("f1");
    CHECK(f.rows() == 1);
    CHECK(f.cols() == 3);
    CHECK(f.at(0, 1) == parse_poly(doc.ring, "y"));
}

TEST_CASE("validation errors carry line information") {
    CHECK_THROWS_WITH_AS(parse_document(""), "empty document: missing ring header",
                         error);
    CHECK_THROWS_AS(parse_document("ring 4 x,y grevlex\n"), error);   // not prime
    CHECK_THROWS_AS(parse_document("ring 101 x,y sideways\n"), error);
    CHECK_THROWS_AS(parse_document("ring 101 x,y grevlex\nmatrix f 1 1\nx\n"), error);
    CHECK_THROWS_AS(parse_document("ring 101 x,y grevlex\nmatrix f 1 2\nx;\n"), error);
    CHECK_THROWS_AS(parse_document("ring 101 x,y grevlex\nwat f 1 2\n"), error);
    CHECK_THROWS_AS(parse_document("ring 101 x,y grevlex\nmatrix f 1 1\nq;\n"), error);
    try {
        parse_document("ring 101 x,y grevlex\nmatrix f 1 1\nq;\n");
    } catch (const error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("complexes are validated on load") {
    std::string good =
        "ring 101 x,y grevlex\n"
        "matrix f1 1 2\n"
        "x, y;\n"
        "matrix f2 2 1\n"
        "-y;\nx;\n"
        "complex K = f1 f2\n";
    SessionDocument doc = parse_document(good);
    ResolutionData res = doc.complex_data("K");
    CHECK(res.length() == 2);
    CHECK(res.differentials[0].source().graded());

    std::string not_composable =
        "ring 101 x,y grevlex\n"
        "matrix f1 1 2\n"
        "x, y;\n"
        "matrix f2 1 1\n"
        "x;\n"
        "complex K = f1 f2\n";
    CHECK_THROWS_AS(parse_document(not_composable), error);

    std::string not_complex =
        "ring 101 x,y grevlex\n"
        "matrix f1 1 2\n"
        "x, y;\n"
        "matrix f2 2 1\n"
        "x;\ny;\n"
        "complex K = f1 f2\n";
    CHECK_THROWS_AS(parse_document(not_complex), error);

    std::string unknown_ref =
        "ring 101 x,y grevlex\n"
        "complex K = nope\n";
    CHECK_THROWS_AS(parse_document(unknown_ref), error);
}

TEST_CASE("emit and parse round-trip to a fixed point") {
    std::string text =
        "ring 101 x,y grevlex\n"
        "matrix f1 1 2\n"
        "  x ,  y ;\n"
        "matrix f2 2 1\n"
        "-y;\nx;\n"
        "complex K = f1 f2\n"
        "ideal a = x, y\n";
    std::string canonical = emit_document(parse_document(text));
    CHECK(emit_document(parse_document(canonical)) == canonical);
    CHECK(canonical.find("100*y") != std::string::npos);  // -y normalized mod 101
}

TEST_CASE("grading inference falls back to ungraded") {
    std::string mixed =
        "ring 101 x,y grevlex\n"
        "matrix f1 1 1\n"
        "x^2+x;\n";
    SessionDocument doc = parse_document(mixed);
    ResolutionData res = infer_grading(doc.ring, {doc.matrix("f1")});
    CHECK_FALSE(res.differentials[0].source().graded());
}

TEST_CASE("run_command pipeline: koszul then check") {
    std::string out = tmp_path("k3");
    CHECK(run_command({"koszul", "--p", "32003", "--vars", "x,y,z", "--out", out}) == 0);
    CHECK(run_command({"check", "--in", out, "--complex", "K"}) == 0);
    // R/(x,y,z) is all torsion, so the level-1 certification must refuse it
    CHECK(run_command({"check", "--in", out, "--complex", "K", "--torsionless", "1"}) ==
          2);
    CHECK(run_command({"check", "--in", out, "--complex", "K", "--torsionless", "0"}) ==
          0);
    std::remove(out.c_str());
}

TEST_CASE("run_command exit codes distinguish failure kinds") {
    CHECK(run_command({"koszul", "--vars", "x,y"}) == 1);  // missing --out
    CHECK(run_command({"check", "--in", "does_not_exist.txt", "--complex", "K"}) == 1);

    // R/(x) is not 1-torsionless: certification exit code
    std::string doc = tmp_path("rx");
    {
        std::ofstream f(doc);
        f << "ring 101 x,y grevlex\nmatrix f1 1 1\nx;\ncomplex C = f1\n";
    }
    CHECK(run_command({"check", "--in", doc, "--complex", "C", "--torsionless", "1"}) ==
          2);
    CHECK(run_command({"check", "--in", doc, "--complex", "C"}) == 0);
    std::remove(doc.c_str());
}

TEST_CASE("run_command resolve and pdmod emit reusable documents") {
    std::string in = tmp_path("col"), out = tmp_path("res");
    {
        std::ofstream f(in);
        f << "ring 101 x,y,z grevlex\nmatrix f1 1 3\nx, y, z;\n";
    }
    CHECK(run_command({"resolve", "--in", in, "--matrix", "f1", "--out", out}) == 0);
    SessionDocument doc = parse_document(slurp(out));
    CHECK(doc.complex_data("res").free_ranks() == std::vector<int>{1, 3, 3, 1});
    std::remove(in.c_str());
    std::remove(out.c_str());

    std::string pd = tmp_path("pd");
    CHECK(run_command({"pdmod", "--s", "1", "--m", "1", "--out", pd}) == 0);
    std::string text = slurp(pd);
    CHECK(text.find("matrix f1 2 1") != std::string::npos);
    CHECK(text.find("x;") != std::string::npos);
    CHECK(text.find("y;") != std::string::npos);
    std::remove(pd.c_str());
}

TEST_CASE("seed flag wins over BRUNS_SEED and outputs are deterministic") {
    std::string a = tmp_path("pd_a"), b = tmp_path("pd_b"), c = tmp_path("pd_c");
    CHECK(run_command({"pdmod", "--s", "2", "--m", "1", "--seed", "9", "--out", a}) == 0);
    setenv("BRUNS_SEED", "9", 1);
    CHECK(run_command({"pdmod", "--s", "2", "--m", "1", "--out", b}) == 0);
    setenv("BRUNS_SEED", "12345", 1);
    CHECK(run_command({"pdmod", "--s", "2", "--m", "1", "--seed", "9", "--out", c}) == 0);
    unsetenv("BRUNS_SEED");
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) == slurp(c));

    setenv("BRUNS_SEED", "not_a_number", 1);
    CHECK(run_command({"pdmod", "--s", "2", "--m", "1", "--out", b}) == 1);
    unsetenv("BRUNS_SEED");
    std::remove(a.c_str());
    std::remove(b.c_str());
    std::remove(c.c_str());
}

TEST_CASE("certificate JSON carries every rank and grade") {
    std::string out = tmp_path("k2");
    REQUIRE(run_command({"koszul", "--p", "101", "--vars", "x,y", "--out", out}) == 0);
    SessionDocument doc = parse_document(slurp(out));
    ResolutionData res = doc.complex_data("K");
    ExactnessCertificate cert = check_exactness(res);
    std::string json = certificate_json(cert, nullptr);
    CHECK(json.find("\"pass\": true") != std::string::npos);
    CHECK(json.find("\"rank_module\"") != std::string::npos);
    CHECK(json.find("\"grade\"") != std::string::npos);
    std::remove(out.c_str());
}
