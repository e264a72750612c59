#include "uecsm_cli/report.hpp"

#include <cstdio>
#include <sstream>

#include "uecsm_cli/matrix_io.hpp"

namespace uecsm::cli {

using nlohmann::json;

namespace {

json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }
Complex complex_from_json(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", x);
    return buf;
}

}  // namespace

json tolerances_to_json(const Tolerances& t) {
    return {{"eig_gap", t.eig_gap},     {"zero", t.zero},
            {"real", t.real},           {"parallel", t.parallel},
            {"normal", t.normal},       {"hermitian", t.hermitian},
            {"cert_unitary", t.cert_unitary}, {"cert_symmetric", t.cert_symmetric}};
}

Tolerances tolerances_from_json(const json& j) {
    Tolerances t;
    t.eig_gap = j.value("eig_gap", t.eig_gap);
    t.zero = j.value("zero", t.zero);
    t.real = j.value("real", t.real);
    t.parallel = j.value("parallel", t.parallel);
    t.normal = j.value("normal", t.normal);
    t.hermitian = j.value("hermitian", t.hermitian);
    t.cert_unitary = j.value("cert_unitary", t.cert_unitary);
    t.cert_symmetric = j.value("cert_symmetric", t.cert_symmetric);
    return t;
}

json residuals_to_json(const Residuals& r) {
    return {{"unitarity", r.unitarity},
            {"kernel_symmetry", r.kernel_symmetry},
            {"involution", r.involution},
            {"form_symmetry", r.form_symmetry},
            {"c_symmetry", r.c_symmetry},
            {"kernel_consistency", r.kernel_consistency},
            {"form_consistency", r.form_consistency}};
}

Residuals residuals_from_json(const json& j) {
    Residuals r;
    r.unitarity = j.value("unitarity", 0.0);
    r.kernel_symmetry = j.value("kernel_symmetry", 0.0);
    r.involution = j.value("involution", 0.0);
    r.form_symmetry = j.value("form_symmetry", 0.0);
    r.c_symmetry = j.value("c_symmetry", 0.0);
    r.kernel_consistency = j.value("kernel_consistency", 0.0);
    r.form_consistency = j.value("form_consistency", 0.0);
    return r;
}

json certificate_to_json(const Certificate& c) {
    return {{"U", matrix_to_json(c.u)},
            {"K", matrix_to_json(c.k)},
            {"S", matrix_to_json(c.s)},
            {"residuals", residuals_to_json(c.residuals)}};
}

Certificate certificate_from_json(const json& j) {
    if (j.is_object() && j.contains("certificate")) {
        if (j.at("certificate").is_null()) throw InputError(InputErrorKind::Parse, "report carries no certificate");
        return certificate_from_json(j.at("certificate"));
    }
    try {
        Certificate c;
        c.u = matrix_from_json(j.at("U"));
        c.k = matrix_from_json(j.at("K"));
        c.s = matrix_from_json(j.at("S"));
        if (j.contains("residuals")) c.residuals = residuals_from_json(j.at("residuals"));
        return c;
    } catch (const json::exception& e) {
        throw InputError(InputErrorKind::Parse, std::string("bad certificate JSON: ") + e.what());
    }
}

json report_to_json(const Report& r) {
    const Verdict& v = r.verdict;
    json verdict = {{"status", std::string(to_string(v.status))},
                    {"branch", std::string(to_string(v.branch))},
                    {"measure", v.measure},
                    {"threshold", v.threshold},
                    {"margin", v.margin},
                    {"borderline", v.borderline},
                    {"reason", v.reason}};
    verdict["witness"] = v.witness ? json::array({v.witness->first, v.witness->second}) : json(nullptr);
    verdict["witness_ratio"] = v.witness_ratio ? complex_to_json(*v.witness_ratio) : json(nullptr);
    return {{"input", matrix_to_json(r.input)},
            {"verdict", std::move(verdict)},
            {"tolerances", tolerances_to_json(r.tolerances)},
            {"certificate", v.certificate ? certificate_to_json(*v.certificate) : json(nullptr)}};
}

Report report_from_json(const json& j) {
    try {
        Report r;
        r.input = matrix_from_json(j.at("input"));
        r.tolerances = tolerances_from_json(j.at("tolerances"));
        const json& v = j.at("verdict");
        const auto status = parse_status(v.at("status").get<std::string>());
        const auto branch = parse_branch(v.at("branch").get<std::string>());
        if (!status || !branch) throw InputError(InputErrorKind::Parse, "unknown status or branch");
        r.verdict.status = *status;
        r.verdict.branch = *branch;
        r.verdict.measure = v.at("measure").get<double>();
        r.verdict.threshold = v.at("threshold").get<double>();
        r.verdict.margin = v.at("margin").get<double>();
        r.verdict.borderline = v.at("borderline").get<bool>();
        r.verdict.reason = v.value("reason", std::string{});
        if (const auto& w = v.at("witness"); !w.is_null()) {
            r.verdict.witness = std::pair{w.at(0).get<std::size_t>(), w.at(1).get<std::size_t>()};
        }
        if (const auto& q = v.at("witness_ratio"); !q.is_null()) r.verdict.witness_ratio = complex_from_json(q);
        if (j.contains("certificate") && !j.at("certificate").is_null()) {
            r.verdict.certificate = certificate_from_json(j.at("certificate"));
        }
        return r;
    } catch (const json::exception& e) {
        throw InputError(InputErrorKind::Parse, std::string("bad report JSON: ") + e.what());
    }
}

std::string report_to_text(const Report& r) {
    const Verdict& v = r.verdict;
    std::ostringstream os;
    os << "status:     " << to_string(v.status) << '\n'
       << "branch:     " << to_string(v.branch) << '\n'
       << "measure:    " << sci(v.measure) << " (threshold " << sci(v.threshold) << ", margin "
       << sci(v.margin) << ")\n"
       << "borderline: " << (v.borderline ? "yes" : "no") << '\n';
    if (v.witness) {
        os << "witness:    (" << v.witness->first << ", " << v.witness->second << ") (0-based, properized overlap)\n";
    }
    if (v.witness_ratio) {
        os << "ratio:      " << format_complex(*v.witness_ratio) << " (imaginary part "
           << sci(v.witness_ratio->imag()) << ")\n";
    }
    if (!v.reason.empty()) os << "reason:     " << v.reason << '\n';
    const Tolerances& t = r.tolerances;
    os << "tolerances: eig_gap=" << sci(t.eig_gap) << " zero=" << sci(t.zero) << " real=" << sci(t.real)
       << " parallel=" << sci(t.parallel) << " normal=" << sci(t.normal) << '\n';
    os << "input (n=" << r.input.dim() << "):\n" << format_matrix_text(r.input, "  ");
    if (v.certificate) {
        const Certificate& c = *v.certificate;
        os << "U:\n" << format_matrix_text(c.u, "  ") << "K (Cx = K conj(x)):\n" << format_matrix_text(c.k, "  ")
           << "S = U*TU:\n" << format_matrix_text(c.s, "  ");
        const Residuals& res = c.residuals;
        os << "residuals:  unitarity=" << sci(res.unitarity) << " kernel_symmetry=" << sci(res.kernel_symmetry)
           << " involution=" << sci(res.involution) << " form_symmetry=" << sci(res.form_symmetry)
           << " c_symmetry=" << sci(res.c_symmetry) << '\n';
    }
    return os.str();
}

json verification_to_json(const VerificationReport& v) {
    return {{"pass", v.pass},
            {"residuals", residuals_to_json(v.residuals)},
            {"unitary_threshold", v.unitary_threshold},
            {"symmetric_threshold", v.symmetric_threshold}};
}

std::string verification_to_text(const VerificationReport& v) {
    std::ostringstream os;
    const Residuals& r = v.residuals;
    auto line = [&](const char* name, double value, double thr) {
        os << "  " << name << ' ' << sci(value) << (value <= thr ? "  ok" : "  FAIL") << '\n';
    };
    os << (v.pass ? "certificate verified" : "certificate REJECTED") << '\n';
    line("||U*U - I||         ", r.unitarity, v.unitary_threshold);
    line("||K - K^t||         ", r.kernel_symmetry, v.unitary_threshold);
    line("||K conj(K) - I||   ", r.involution, v.unitary_threshold);
    line("||K - UU^t||        ", r.kernel_consistency, v.unitary_threshold);
    line("||S - S^t||         ", r.form_symmetry, v.symmetric_threshold);
    line("||K T^t conj(K) - T||", r.c_symmetry, v.symmetric_threshold);
    line("||S - U*TU||        ", r.form_consistency, v.symmetric_threshold);
    return os.str();
}

json stats_to_json(const CampaignStats& s, const CampaignConfig& cfg) {
    json status = json::object();
    for (std::size_t i = 0; i < kStatusCount; ++i)
        status[std::string(to_string(static_cast<Status>(i)))] = s.status_counts[i];
    json branch = json::object();
    for (std::size_t i = 0; i < kBranchCount; ++i)
        branch[std::string(to_string(static_cast<Branch>(i)))] = s.branch_counts[i];
    json reasons = json::object();
    for (const auto& [reason, count] : s.inconclusive_reasons) reasons[reason] = count;
    return {{"config",
             {{"n", cfg.n},
              {"rank", cfg.rank},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"ensemble", std::string(to_string(cfg.ensemble))},
              {"workers", cfg.workers},
              {"tolerances", tolerances_to_json(cfg.tolerances)}}},
            {"trials", s.trials},
            {"status", std::move(status)},
            {"branch", std::move(branch)},
            {"measure_histogram", s.histogram},
            {"borderline", s.borderline},
            {"inconclusive_reasons", std::move(reasons)},
            {"elapsed_seconds", s.elapsed_seconds}};
}

std::string stats_to_text(const CampaignStats& s, const CampaignConfig& cfg) {
    std::ostringstream os;
    os << "ensemble " << to_string(cfg.ensemble) << ", n=" << cfg.n;
    if (cfg.ensemble == Ensemble::PartialIsometry) os << ", rank=" << cfg.rank;
    os << ", trials=" << s.trials << ", seed=" << cfg.seed << '\n';
    for (std::size_t i = 0; i < kStatusCount; ++i) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "  %-13s %10llu / %llu\n", std::string(to_string(static_cast<Status>(i))).c_str(),
                      static_cast<unsigned long long>(s.status_counts[i]),
                      static_cast<unsigned long long>(s.trials));
        os << buf;
    }
    os << "branches:\n";
    for (std::size_t i = 0; i < kBranchCount; ++i) {
        if (s.branch_counts[i] == 0) continue;
        os << "  " << to_string(static_cast<Branch>(i)) << ": " << s.branch_counts[i] << '\n';
    }
    os << "borderline: " << s.borderline << '\n';
    os << "decision measure histogram (log10 bins):\n";
    for (std::size_t b = 0; b < kHistogramBins; ++b) {
        if (s.histogram[b] == 0) continue;
        std::string label;
        if (b == 0) {
            label = "< 1e-18";
        } else if (b == kHistogramBins - 1) {
            label = ">= 1e2";
        } else {
            const int lo = static_cast<int>(b) - 19;
            label = "[1e" + std::to_string(lo) + ", 1e" + std::to_string(lo + 1) + ")";
        }
        os << "  " << label << ": " << s.histogram[b] << '\n';
    }
    for (const auto& [reason, count] : s.inconclusive_reasons) os << "inconclusive: " << count << " x " << reason << '\n';
    char buf[64];
    std::snprintf(buf, sizeof(buf), "elapsed: %.3f s\n", s.elapsed_seconds);
    os << buf;
    return os.str();
}

}  // namespace uecsm::cli
