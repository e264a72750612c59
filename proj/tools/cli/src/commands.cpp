#include "uecsm_cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "uecsm/campaign.hpp"
#include "uecsm/decide.hpp"
#include "uecsm/errors.hpp"
#include "uecsm/fixtures.hpp"
#include "uecsm_cli/matrix_io.hpp"
#include "uecsm_cli/report.hpp"

namespace uecsm::cli {

namespace {

class NoInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input = "-";
    std::string certificate;
    std::string format = "text";
    std::string output;
    Tolerances tol;

    std::size_t n = 4;
    std::size_t rank = 2;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    std::string ensemble = "partial-isometry";
    unsigned workers = 1;

    std::string name;
    std::string a = "2";
    bool reference_certificate = false;
};

std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw NoInput("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void emit(const Options& opt, const std::string& body, std::ostream& out, const std::string& summary) {
    if (opt.output.empty()) {
        out << body;
        if (!body.empty() && body.back() != '\n') out << '\n';
        return;
    }
    std::ofstream f(opt.output, std::ios::binary);
    if (!f) throw NoInput("cannot write '" + opt.output + "'");
    f << body;
    if (!body.empty() && body.back() != '\n') f << '\n';
    out << summary << " (written to " << opt.output << ")\n";
}

void add_tolerance_flags(CLI::App* sub, Tolerances& tol) {
    sub->add_option("--tol-real", tol.real, "Relative imaginary-part tolerance for the ratio test");
    sub->add_option("--tol-zero", tol.zero, "Overlap entries at or below this are zero");
    sub->add_option("--tol-eig-gap", tol.eig_gap, "Relative gap below which eigenvalues are repeated");
    sub->add_option("--tol-parallel", tol.parallel, "1 - |<g,h>| below this means a shared eigenvector");
    sub->add_option("--tol-normal", tol.normal, "Relative ||TT* - T*T|| below this means normal");
}

void add_format_flags(CLI::App* sub, Options& opt) {
    sub->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", opt.output, "Write the report to this path instead of stdout");
}

int cmd_decide(const Options& opt, bool with_certificate, std::istream& in, std::ostream& out) {
    const MatrixDocument doc = parse_matrix(read_source(opt.input, in));
    Report report{doc.matrix, test_generic(doc.matrix, opt.tol), opt.tol};
    if (!with_certificate) report.verdict.certificate.reset();
    const std::string body = opt.format == "json" ? report_to_json(report).dump(2) : report_to_text(report);
    emit(opt, body, out, std::string(to_string(report.verdict.status)));
    return exit_code_for(report.verdict.status);
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out) {
    const MatrixDocument doc = parse_matrix(read_source(opt.input, in));
    nlohmann::json cert_json;
    try {
        cert_json = nlohmann::json::parse(read_source(opt.certificate, in));
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(InputErrorKind::Parse, std::string("invalid certificate JSON: ") + e.what());
    }
    const VerificationReport rep = verify_certificate(doc.matrix, certificate_from_json(cert_json), opt.tol);
    const std::string body =
        opt.format == "json" ? verification_to_json(rep).dump(2) : verification_to_text(rep);
    emit(opt, body, out, rep.pass ? "verified" : "rejected");
    return rep.pass ? kExitUecsm : kExitNotUecsm;
}

int cmd_search(const Options& opt, std::ostream& out) {
    CampaignConfig cfg;
    cfg.n = opt.n;
    cfg.rank = opt.rank;
    cfg.trials = opt.trials;
    cfg.seed = opt.seed;
    cfg.tolerances = opt.tol;
    cfg.workers = opt.workers;
    cfg.ensemble = parse_ensemble(opt.ensemble).value_or(Ensemble::PartialIsometry);
    if (cfg.n == 0) throw UsageError("--n must be positive");
    if (cfg.trials == 0) throw UsageError("--trials must be positive");
    if (cfg.ensemble == Ensemble::PartialIsometry && cfg.rank > cfg.n) {
        throw UsageError("--rank must not exceed --n");
    }
    if (cfg.ensemble != Ensemble::PartialIsometry) cfg.rank = 0;
    const CampaignStats stats = run_campaign(cfg);
    const std::string json = stats_to_json(stats, cfg).dump(2);
    if (!opt.output.empty()) {
        std::ofstream f(opt.output, std::ios::binary);
        if (!f) throw NoInput("cannot write '" + opt.output + "'");
        f << json << '\n';
    }
    if (opt.format == "json") {
        out << json << '\n';
    } else {
        out << stats_to_text(stats, cfg) << json << '\n';
    }
    return kExitUecsm;
}

int cmd_examples(const Options& opt, std::ostream& out) {
    auto fixtures = fixtures::all();
    if (opt.name.empty()) {
        for (const auto& f : fixtures) {
            out << "# " << f.name << ": " << f.description << '\n' << format_matrix_text(f.matrix) << '\n';
        }
        return kExitUecsm;
    }
    if (opt.reference_certificate) {
        if (opt.name != "worked") throw UsageError("a reference certificate is only available for 'worked'");
        out << certificate_to_json(fixtures::worked_example_reference_certificate()).dump(2) << '\n';
        return kExitUecsm;
    }
    std::optional<ComplexMatrix> m;
    if (opt.name == "jordan") {
        m = fixtures::jordan_with_parameter(parse_complex(opt.a));
    } else {
        for (const auto& f : fixtures)
            if (f.name == opt.name) m = f.matrix;
    }
    if (!m) throw UsageError("unknown example '" + opt.name + "'");
    out << (opt.format == "json" ? matrix_to_json(*m).dump(2) + "\n" : format_matrix_text(*m));
    return kExitUecsm;
}

}  // namespace

int exit_code_for(Status s) noexcept {
    switch (s) {
        case Status::UECSM: return kExitUecsm;
        case Status::NotUECSM: return kExitNotUecsm;
        case Status::Inconclusive: return kExitInconclusive;
    }
    return kExitInternal;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide unitary equivalence to a complex symmetric matrix", "uecsm"};
    app.require_subcommand(1);
    Options opt;

    auto* test = app.add_subcommand("test", "Decide whether a matrix is UECSM (exit 0 yes, 1 no, 2 inconclusive)");
    test->add_option("input", opt.input, "Matrix file, or - for stdin");
    add_format_flags(test, opt);
    add_tolerance_flags(test, opt.tol);

    auto* certify = app.add_subcommand("certify", "Like test, and print the certificate (U, K, S)");
    certify->add_option("input", opt.input, "Matrix file, or - for stdin");
    add_format_flags(certify, opt);
    add_tolerance_flags(certify, opt.tol);

    auto* verify = app.add_subcommand("verify", "Check a certificate against a matrix (exit 0 iff valid)");
    verify->add_option("matrix", opt.input, "Matrix file")->required();
    verify->add_option("certificate", opt.certificate, "Certificate or certify report (JSON)")->required();
    add_format_flags(verify, opt);
    add_tolerance_flags(verify, opt.tol);

    auto* search = app.add_subcommand("search", "Monte Carlo campaign over a random ensemble");
    search->add_option("--n", opt.n, "Dimension")->capture_default_str();
    search->add_option("--rank", opt.rank, "Rank of the partial isometry")->capture_default_str();
    search->add_option("--trials", opt.trials, "Number of samples")->capture_default_str();
    search->add_option("--seed", opt.seed, "Campaign seed")->capture_default_str();
    search->add_option("--ensemble", opt.ensemble, "Random ensemble")
        ->check(CLI::IsMember({"partial-isometry", "ginibre", "unitary"}))
        ->capture_default_str();
    search->add_option("--workers", opt.workers, "Worker threads (results do not depend on it)")
        ->check(CLI::Range(1u, 256u));
    add_format_flags(search, opt);
    add_tolerance_flags(search, opt.tol);

    auto* examples = app.add_subcommand("examples", "Print the built-in example matrices");
    examples->add_option("--name", opt.name, "jordan, jordan-unimodular, worked, triangular-yes, triangular-no");
    examples->add_option("--a", opt.a, "Parameter a for 'jordan' (complex literal)")->capture_default_str();
    examples->add_flag("--certificate", opt.reference_certificate, "Print the reference certificate (worked)");
    examples->add_option("--format", opt.format, "Matrix format")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> argv_storage{"uecsm"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*test) return cmd_decide(opt, false, in, out);
        if (*certify) return cmd_decide(opt, true, in, out);
        if (*verify) return cmd_verify(opt, in, out);
        if (*search) return cmd_search(opt, out);
        if (*examples) return cmd_examples(opt, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InputError& e) {
        err << (e.kind() == InputErrorKind::NonSquare ? "non-square matrix: " : "parse error: ") << e.what() << '\n';
        return kExitDataError;
    } catch (const NoInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitNoInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace uecsm::cli
