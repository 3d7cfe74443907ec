#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "omega/algebra_file.hpp"
#include "omega/catalog.hpp"
#include "omega/cli.hpp"
#include "support.hpp"

using namespace omega;

namespace {

const std::string kData = OMEGA_DATA_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("omegaz-test-" + name);
    std::ofstream(path) << text;
    return path.string();
}

ErrorKind parse_kind(const std::string& text, std::string* message = nullptr) {
    try {
        parse_algebra_file(text);
    } catch (const Error& e) {
        if (message) *message = e.what();
        return e.kind();
    }
    ADD_FAILURE() << "parsed";
    return ErrorKind::GuardExceeded;
}

}  // namespace

TEST(AlgebraFile, RoundTripsEveryCatalogAlgebra) {
    for (const auto& e : build_catalog()) {
        const auto h = e.construct();
        const std::string text = serialize_algebra(h);
        EXPECT_EQ(parse_algebra_file(text), h) << e.name;
        const std::string messy = "# " + e.name + "\n\n" + std::string("  ") + text + "\n# trailing\n";
        EXPECT_EQ(serialize_algebra(parse_algebra_file(messy)), normalize_algebra_file(messy)) << e.name;
    }
}

TEST(AlgebraFile, CommentsAndSpacing) {
    const auto h = parse_algebra_file(
        "algebra  z2   # name\n"
        "size 2\n\n"
        "add\n"
        "0 1   # row 0\n"
        "1\t0\n"
        "op dbl 1\n"
        "0 0\n");
    EXPECT_EQ(h.name(), "z2");
    EXPECT_EQ(h.operation(0).name, "dbl");
}

TEST(AlgebraFile, ShortSectionIsAParseError) {
    std::string message;
    EXPECT_EQ(parse_kind("algebra z4\nsize 4\nadd\n0 1 2 3\n1 2 3 0\n2 3 0 1\nop mul 2\n", &message),
              ErrorKind::ParseError);
    EXPECT_NE(message.find("line 7"), std::string::npos) << message;
    EXPECT_NE(message.find("3 rows, expected 4"), std::string::npos) << message;
}

TEST(AlgebraFile, ErrorsNameLineAndColumn) {
    const std::vector<std::pair<std::string, ErrorKind>> cases{
        {"", ErrorKind::ParseError},
        {"algebra\nsize 2\nadd\n0 1\n1 0\n", ErrorKind::ParseError},
        {"algebra a\nsize two\nadd\n0 1\n1 0\n", ErrorKind::ParseError},
        {"algebra a\nsize 2\nadd\n0 1 1\n1 0\n", ErrorKind::ParseError},
        {"algebra a\nsize 2\nadd\n0 1\n1 2\n", ErrorKind::MalformedTable},
        {"algebra a\nsize 2\nadd\n1 0\n0 1\n", ErrorKind::NotAGroup},
        {"algebra a\nsize 2\nadd\n0 1\n1 0\nop w 1\n1 0\n", ErrorKind::OmegaZeroViolation},
        {"algebra a\nsize 2\nadd\n0 1\n1 0\nop w 4\n", ErrorKind::ArityMismatch},
        {"algebra a\nsize 2\nadd\n0 1\n1 0\nop add 1\n0 0\n", ErrorKind::MalformedTable},
        {"algebra a\nsize 2\nadd\n0 1\n1 0\nmul\n", ErrorKind::ParseError},
    };
    for (const auto& [text, kind] : cases) {
        std::string message;
        EXPECT_EQ(parse_kind(text, &message), kind) << text;
        EXPECT_NE(message.find("line "), std::string::npos) << message;
        EXPECT_NE(message.find("column "), std::string::npos) << message;
    }
}

TEST(AlgebraFile, ZeroViolationPointsAtTheRow) {
    std::string message;
    parse_kind("algebra a\nsize 2\nadd\n0 1\n1 0\nop w 2\n1 0\n0 0\n", &message);
    EXPECT_NE(message.find("line 7, column 1"), std::string::npos) << message;
}

TEST(AlgebraFile, ShippedDataFilesMatchTheCatalog) {
    for (const auto& [file, name] : std::vector<std::pair<std::string, std::string>>{
             {"z3-ring.alg", "Z3-ring"}, {"z4-ring.alg", "Z4-ring"}, {"m2f2.alg", "M2(F2)"}, {"s3.alg", "S3"}}) {
        EXPECT_EQ(read_algebra_file(kData + "/" + file), oracle::catalog_algebra(name)) << file;
    }
    EXPECT_THROW(read_algebra_file(kData + "/missing.alg"), Error);
}

TEST(Dispatch, DocumentedExamples) {
    const Result ed = run({"check", kData + "/z3-ring.alg", "--property", "equational-domain"});
    EXPECT_EQ(ed.code, 0);
    EXPECT_NE(ed.out.find("equational-domain: true\n"), std::string::npos);

    const Result domain = run({"check", kData + "/z4-ring.alg", "--property", "domain"});
    EXPECT_EQ(domain.code, 1);
    EXPECT_NE(domain.out.find("\nzero-divisors: (2,2)\n"), std::string::npos) << domain.out;

    const Result solve = run({"solve", kData + "/z3-ring.alg", "--vars", "2", "--eq", "mul(x1,x2)"});
    EXPECT_EQ(solve.code, 0);
    EXPECT_NE(solve.out.find("count: 5\npoint: (0,0)\npoint: (0,1)\npoint: (0,2)\npoint: (1,0)\npoint: (2,0)\n"),
              std::string::npos)
        << solve.out;
}

TEST(Dispatch, WitnessRecipesReproduceTheWitness) {
    const Result domain = run({"check", kData + "/z4-ring.alg", "--property", "domain"});
    const auto at = domain.out.find("verify: omegaz ");
    ASSERT_NE(at, std::string::npos);
    // verify: omegaz closure <file> --vars 2 --points "<axes>" # lists (2,2)
    const std::string rest = domain.out.substr(at + 15);
    const std::string points = rest.substr(rest.find('"') + 1, rest.find('"', rest.find('"') + 1) - rest.find('"') - 1);
    const Result closure = run({"closure", kData + "/z4-ring.alg", "--vars", "2", "--points", points});
    EXPECT_EQ(closure.code, 0);
    EXPECT_NE(closure.out.find("added: (2,2)\n"), std::string::npos) << closure.out;

    const Result f5 = run({"check", kData + "/m2f2.alg", "--property", "formula5"});
    EXPECT_EQ(f5.code, 1);
    EXPECT_NE(f5.out.find("annihilating-pair: (1,8)"), std::string::npos);
    const Result solve = run({"solve", kData + "/m2f2.alg", "--vars", "2", "--eq", "mul(x1,x2)", "--eq", "mul(x2,x1)"});
    EXPECT_NE(solve.out.find("point: (1,8)\n"), std::string::npos);
}

TEST(Dispatch, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"check", kData + "/z3-ring.alg"}).code, 2);
    EXPECT_EQ(run({"check", kData + "/z3-ring.alg", "--property", "nope"}).code, 2);
    EXPECT_EQ(run({"check", kData + "/s3.alg", "--property", "formula5"}).code, 2);
    EXPECT_EQ(run({"check", kData + "/z3-ring.alg", "--property", "remark1"}).code, 2);
    EXPECT_EQ(run({"check", kData + "/s3.alg", "--property", "remark1"}).code, 0);
    EXPECT_EQ(run({"check", kData + "/z5-ring.alg", "--property", "formula5"}).code, 0);
    EXPECT_EQ(run({"validate", kData + "/missing.alg"}).code, 2);
    EXPECT_EQ(run({"solve", kData + "/z3-ring.alg", "--vars", "2", "--eq", "mul(x1,"}).code, 2);
    EXPECT_EQ(run({"closure", kData + "/z3-ring.alg", "--vars", "2", "--points", "0,3"}).code, 2);
    EXPECT_EQ(run({"--max-points", "10", "solve", kData + "/z4-ring.alg", "--vars", "2", "--eq", "x1"}).code, 2);
    EXPECT_EQ(run({"lattice", kData + "/m2f2.alg"}).code, 2);
    EXPECT_EQ(run({"validate", kData + "/z3-ring.alg"}).code, 0);
    EXPECT_EQ(run({"--help"}).code, 0);
    const std::string bad = temp_file("bad.alg", "algebra a\nsize 2\nadd\n1 0\n0 1\n");
    const Result r = run({"validate", bad});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("NotAGroup: line 3"), std::string::npos) << r.err;
}

TEST(Dispatch, JsonOutputs) {
    const Result solve = run({"solve", kData + "/z3-ring.alg", "--vars", "2", "--eq", "mul(x1,x2)", "--format", "json"});
    const auto j = nlohmann::json::parse(solve.out);
    EXPECT_EQ(j["count"], 5);
    EXPECT_EQ(j["points"][3], nlohmann::json::array({1, 0}));
    const Result lattice = run({"lattice", kData + "/z3-ring.alg", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(lattice.out)["join-is-union"], true);
    const Result check = run({"--format", "json", "check", kData + "/z4-ring.alg", "--property", "domain"});
    EXPECT_EQ(check.code, 1);
    EXPECT_EQ(nlohmann::json::parse(check.out)["zero-divisors"]["a"], 2);
}

TEST(Dispatch, CatalogAndExport) {
    const Result a = run({"catalog", "--format", "json"});
    const Result b = run({"catalog", "--format", "json"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, 1);  // the matrix-ring violations
    const Result text = run({"catalog", "--max-zariski-size", "4"});
    EXPECT_NE(text.out.find("max-zariski-size: 4"), std::string::npos);
    const Result exported = run({"export", "Z4-ring"});
    EXPECT_EQ(exported.code, 0);
    EXPECT_EQ(parse_algebra_file(exported.out), oracle::catalog_algebra("Z4-ring"));
    EXPECT_EQ(run({"export", "nope"}).code, 2);
}

TEST(Dispatch, ClosureNoMemoMatches) {
    const std::string pts = "0,0;0,1;0,2;0,3;1,0;2,0;3,0";
    const Result memo = run({"closure", kData + "/z4-ring.alg", "--vars", "2", "--points", pts});
    const Result plain = run({"closure", kData + "/z4-ring.alg", "--vars", "2", "--points", pts, "--no-memo"});
    EXPECT_EQ(memo.out, plain.out);
    EXPECT_NE(memo.out.find("algebraic: false"), std::string::npos);
}
