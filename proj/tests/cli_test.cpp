#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "test_support.hpp"
#include "uecsm/decide.hpp"
#include "uecsm/fixtures.hpp"
#include "uecsm_cli/commands.hpp"
#include "uecsm_cli/matrix_io.hpp"
#include "uecsm_cli/report.hpp"

namespace uecsm::cli {
namespace {

// --- parse_matrix --------------------------------------------------------

TEST(ParseMatrix, SemicolonRows) {
    const MatrixDocument d = parse_matrix("0 7 0; 0 1 -5; 0 0 6");
    EXPECT_EQ(d.n(), 3u);
    EXPECT_EQ(d.matrix, fixtures::triangular_uecsm());
}

TEST(ParseMatrix, NewlineRowsCommasAndComments) {
    const MatrixDocument d = parse_matrix("# T1\n0, 7, 0\n0, 1, -5   # middle\n\n0, 0, 6\n");
    EXPECT_EQ(d.matrix, fixtures::triangular_uecsm());
}

TEST(ParseMatrix, SingleComplexEntry) {
    const MatrixDocument d = parse_matrix("1+2i");
    ASSERT_EQ(d.n(), 1u);
    EXPECT_EQ(d.matrix(0, 0), Complex(1, 2));
}

TEST(ParseMatrix, SpacedSigns) {
    const MatrixDocument d = parse_matrix("1 + 2i  3 - i; -i  4");
    EXPECT_EQ(d.matrix, (ComplexMatrix{{Complex(1, 2), Complex(3, -1)}, {Complex(0, -1), 4.0}}));
}

TEST(ParseMatrix, NonSquare) {
    try {
        (void)parse_matrix("1 2; 3");
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_EQ(e.kind(), InputErrorKind::NonSquare);
    }
}

TEST(ParseMatrix, ReportsPositionOfBadToken) {
    try {
        (void)parse_matrix("1 2\n3 x4");
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_EQ(e.kind(), InputErrorKind::Parse);
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 3u);
    }
}

TEST(ParseMatrix, RejectsGarbage) {
    for (const char* text : {"", "   ", "# only a comment", "1 +", "nan", "inf", "1e999", "1ii", "2 3i+"}) {
        EXPECT_THROW((void)parse_matrix(text), InputError) << text;
    }
}

TEST(ParseMatrix, Json) {
    const MatrixDocument d = parse_matrix(R"({"n": 2, "re": [[1, 2], [3, 4]], "im": [[0, -1], [0.5, 0]]})");
    EXPECT_EQ(d.matrix, (ComplexMatrix{{1.0, Complex(2, -1)}, {Complex(3, 0.5), 4.0}}));
    EXPECT_EQ(parse_matrix(R"({"n": 1, "re": [[3]]})").matrix, ComplexMatrix{{3.0}});
}

TEST(ParseMatrix, JsonErrors) {
    EXPECT_THROW((void)parse_matrix(R"({"n": 2, "re": [[1, 2]], "im": [[0, 0]]})"), InputError);
    EXPECT_THROW((void)parse_matrix(R"({"n": 2, "re": [[1, 2], [3]]})"), InputError);
    EXPECT_THROW((void)parse_matrix(R"({"n": 1, "re": [["x"]]})"), InputError);
    EXPECT_THROW((void)parse_matrix(R"({"n": 1,)"), InputError);
    EXPECT_THROW((void)parse_matrix("1 2; 3 4", InputFormat::Json), InputError);
}

TEST(ParseComplex, Forms) {
    EXPECT_EQ(parse_complex("i"), kI);
    EXPECT_EQ(parse_complex("-i"), -kI);
    EXPECT_EQ(parse_complex("+2.5i"), Complex(0, 2.5));
    EXPECT_EQ(parse_complex("1e-3-2E+2i"), Complex(1e-3, -200));
    EXPECT_EQ(parse_complex("-4"), Complex(-4, 0));
}

TEST(FormatMatrixText, RoundTripsBitExactly) {
    RandomStream rng(401);
    for (int trial = 0; trial < 200; ++trial) {
        ComplexMatrix m = sample_ginibre(1 + trial % 5, rng);
        if (trial % 3 == 0) m *= 1e-200;
        if (trial % 7 == 0) m(0, 0) = Complex(-0.0, 1.0 / 3.0);
        EXPECT_EQ(parse_matrix(format_matrix_text(m)).matrix, m);
    }
    const ComplexMatrix extremes{{std::numeric_limits<double>::max(), std::numeric_limits<double>::denorm_min()},
                                 {Complex(0, -std::numeric_limits<double>::min()), std::numbers::pi}};
    EXPECT_EQ(parse_matrix(format_matrix_text(extremes)).matrix, extremes);
}

TEST(MatrixJson, RoundTripsBitExactly) {
    RandomStream rng(402);
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix m = sample_ginibre(1 + trial % 5, rng);
        const auto j = matrix_to_json(m);
        EXPECT_EQ(j.at("n").get<std::size_t>(), m.dim());
        EXPECT_EQ(parse_matrix(j.dump()).matrix, m);
    }
}

// --- report serialization -----------------------------------------------

TEST(Report, JsonRoundTrip) {
    RandomStream rng(411);
    Tolerances tol;
    tol.real = 3e-7;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const ComplexMatrix t = trial % 2 ? sample_ginibre(n, rng) : testing::known_uecsm(n, rng);
        Report r{t, test_generic(t, tol), tol};
        const Report back = report_from_json(nlohmann::json::parse(report_to_json(r).dump(2)));
        EXPECT_EQ(back, r) << trial;
    }
}

TEST(Report, JsonShape) {
    const ComplexMatrix t = fixtures::triangular_not_uecsm();
    const auto j = report_to_json({t, test_generic(t), Tolerances{}});
    EXPECT_EQ(j.at("verdict").at("status"), "NotUECSM");
    EXPECT_EQ(j.at("verdict").at("branch"), "RealityTest");
    EXPECT_TRUE(j.at("verdict").at("witness").is_array());
    EXPECT_TRUE(j.at("certificate").is_null());
    EXPECT_EQ(j.at("input").at("n"), 3);
}

TEST(Certificate, JsonSchema) {
    const Certificate c = fixtures::worked_example_reference_certificate();
    const auto j = certificate_to_json(c);
    for (const char* key : {"U", "K", "S", "residuals"}) EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(certificate_from_json(j), c);
    EXPECT_EQ(certificate_from_json(nlohmann::json{{"certificate", j}}), c);
    EXPECT_THROW((void)certificate_from_json(nlohmann::json{{"U", 1}}), InputError);
}

// --- run() ---------------------------------------------------------------

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

class TempDir : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("uecsm_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::string write(const std::string& name, const std::string& body) {
        const auto p = dir_ / name;
        std::ofstream(p) << body;
        return p.string();
    }
    std::filesystem::path dir_;
};

TEST(Run, TestExitCodes) {
    EXPECT_EQ(run_cli({"test"}, "0 7 0; 0 1 -5; 0 0 6").code, kExitUecsm);
    EXPECT_EQ(run_cli({"test"}, "0 7 0; 0 1 -5; 0 0 3").code, kExitNotUecsm);
    EXPECT_EQ(run_cli({"test", "-", "--format", "json"}, "0 7 0; 0 1 -5; 0 0 3").code, kExitNotUecsm);
}

TEST(Run, DegenerateFiveByFiveIsInconclusive) {
    RandomStream rng(421);
    const ComplexMatrix w = testing::unitary_qr(5, rng);
    const ComplexMatrix t = adjoint(w) * ComplexMatrix::diagonal(std::vector<double>{1, 1, 2, 3, 4}) * w +
                            kI * testing::random_hermitian(5, rng);
    EXPECT_EQ(run_cli({"test"}, format_matrix_text(t)).code, kExitInconclusive);
}

TEST(Run, JsonReportParses) {
    const Outcome o = run_cli({"certify", "--format", "json"}, "0 7 0; 0 1 -5; 0 0 6");
    EXPECT_EQ(o.code, 0);
    const Report r = report_from_json(nlohmann::json::parse(o.out));
    EXPECT_EQ(r.verdict.status, Status::UECSM);
    ASSERT_TRUE(r.verdict.certificate.has_value());
    const auto t = run_cli({"test", "--format", "json"}, "0 7 0; 0 1 -5; 0 0 6");
    EXPECT_TRUE(nlohmann::json::parse(t.out).at("certificate").is_null());
}

TEST(Run, ToleranceFlagsAreHonoured) {
    // A tolerance loose enough to accept every ratio lets the negative
    // example through the ratio test; its certificate then fails.
    const Outcome loose = run_cli({"test", "--tol-real", "10"}, "0 7 0; 0 1 -5; 0 0 3");
    EXPECT_EQ(loose.code, kExitInconclusive);
    EXPECT_NE(loose.out.find("certificate failed verification"), std::string::npos);
    const Outcome o = run_cli({"test", "--format", "json", "--tol-zero", "1e-6", "--tol-eig-gap", "1e-5"}, "1 2; 3 4");
    const Report r = report_from_json(nlohmann::json::parse(o.out));
    EXPECT_EQ(r.tolerances.zero, 1e-6);
    EXPECT_EQ(r.tolerances.eig_gap, 1e-5);
}

TEST(Run, UsageAndParseErrors) {
    EXPECT_GE(run_cli({}).code, 64);
    EXPECT_GE(run_cli({"frobnicate"}).code, 64);
    EXPECT_GE(run_cli({"test", "--format", "xml"}, "1").code, 64);
    EXPECT_GE(run_cli({"test"}, "1 2; 3").code, 64);
    EXPECT_GE(run_cli({"test"}, "1 q").code, 64);
    EXPECT_GE(run_cli({"test", "/nonexistent/matrix.txt"}).code, 64);
    EXPECT_GE(run_cli({"search", "--n", "3", "--rank", "4", "--trials", "1"}).code, 64);
    EXPECT_GE(run_cli({"search", "--trials", "0"}).code, 64);
    EXPECT_GE(run_cli({"search", "--ensemble", "haar"}).code, 64);
    EXPECT_GE(run_cli({"examples", "--name", "nope"}).code, 64);
    EXPECT_GE(run_cli({"verify", "only-one-arg"}).code, 64);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(TempDir, CertifyThenVerifyAlwaysSucceeds) {
    RandomStream rng(431);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const ComplexMatrix t = testing::known_uecsm(n, rng);
        const std::string text = format_matrix_text(t);
        const std::string mpath = write("m.txt", text);
        const std::string cpath = (dir_ / "c.json").string();
        const Outcome c = run_cli({"certify", mpath, "--format", "json", "--output", cpath});
        ASSERT_EQ(c.code, 0) << c.err;
        const Outcome v = run_cli({"verify", mpath, cpath});
        EXPECT_EQ(v.code, 0) << v.out << v.err;
    }
}

TEST_F(TempDir, VerifyReferenceAndTamperedCertificates) {
    const std::string m = write("worked.json", matrix_to_json(fixtures::worked_example()).dump());
    const auto cert = certificate_to_json(fixtures::worked_example_reference_certificate());
    const std::string good = write("good.json", cert.dump());
    EXPECT_EQ(run_cli({"verify", m, good}).code, kExitUecsm);

    Certificate bad = fixtures::worked_example_reference_certificate();
    bad.k(0, 1) += 1e-3;
    const std::string tampered = write("bad.json", certificate_to_json(bad).dump());
    EXPECT_EQ(run_cli({"verify", m, tampered}).code, kExitNotUecsm);

    RandomStream rng(432);
    const ComplexMatrix sym = testing::random_symmetric(3, rng);
    const std::string sm = write("sym.txt", format_matrix_text(sym));
    const std::string idc =
        write("id.json", certificate_to_json(make_certificate(sym, ComplexMatrix::identity(3))).dump());
    EXPECT_EQ(run_cli({"verify", sm, idc}).code, kExitUecsm);

    const std::string junk = write("junk.json", "{not json");
    EXPECT_GE(run_cli({"verify", m, junk}).code, 64);
    const std::string two = write("two.txt", "1 0; 0 1");
    EXPECT_EQ(run_cli({"verify", two, good}).code, kExitNotUecsm);
}

TEST_F(TempDir, OutputFlagWritesReport) {
    const std::string path = (dir_ / "r.json").string();
    const Outcome o = run_cli({"test", "--format", "json", "--output", path}, "0 7 0; 0 1 -5; 0 0 3");
    EXPECT_EQ(o.code, kExitNotUecsm);
    std::ifstream f(path);
    const auto j = nlohmann::json::parse(f);
    EXPECT_EQ(j.at("verdict").at("status"), "NotUECSM");
}

TEST(Run, SearchIsReproducible) {
    const std::vector<std::string> args{"search", "--ensemble", "ginibre", "--n", "3", "--trials", "1000",
                                        "--seed", "1", "--format", "json"};
    const auto a = nlohmann::json::parse(run_cli(args).out);
    const auto b = nlohmann::json::parse(run_cli(args).out);
    EXPECT_EQ(a.at("status"), b.at("status"));
    EXPECT_EQ(a.at("measure_histogram"), b.at("measure_histogram"));
    EXPECT_EQ(a.at("status").at("NotUECSM"), 1000);
    EXPECT_TRUE(a.contains("borderline"));
}

TEST(Run, SearchRankZero) {
    const auto j = nlohmann::json::parse(
        run_cli({"search", "--n", "4", "--rank", "0", "--trials", "10", "--format", "json"}).out);
    EXPECT_EQ(j.at("status").at("UECSM"), 10);
}

TEST(Run, ExamplesPrintParsableMatrices) {
    const Outcome all = run_cli({"examples"});
    EXPECT_EQ(all.code, 0);
    for (const auto& f : fixtures::all()) {
        EXPECT_NE(all.out.find(f.name), std::string::npos);
        const Outcome one = run_cli({"examples", "--name", f.name});
        EXPECT_EQ(parse_matrix(one.out).matrix, f.matrix) << f.name;
        const Outcome js = run_cli({"examples", "--name", f.name, "--format", "json"});
        EXPECT_EQ(parse_matrix(js.out).matrix, f.matrix) << f.name;
    }
    const Outcome jordan = run_cli({"examples", "--name", "jordan", "--a", "0.5"});
    EXPECT_EQ(parse_matrix(jordan.out).matrix, fixtures::jordan_with_parameter(0.5));
    const Outcome cert = run_cli({"examples", "--name", "worked", "--certificate"});
    EXPECT_EQ(certificate_from_json(nlohmann::json::parse(cert.out)),
              fixtures::worked_example_reference_certificate());
}

}  // namespace
}  // namespace uecsm::cli
