#include "bicoeff/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace bicoeff {

using nlohmann::json;

std::string double_repr(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return std::string(buf, ptr);
}

namespace {

json complex_json(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json to_json(const ClassParams& params) {
    return json{{"lambda", to_string(params.lambda)},
                {"mu", to_string(params.mu)},
                {"delta", to_string(params.delta)},
                {"xi", to_string(params.xi())}};
}

json to_json(const FamilySpec& family) {
    return json{{"family", std::string(family.name())}, {"order", to_string(family.order)}};
}

json to_json(const BoundReport& report) {
    json j = to_json(report.family);
    j["params"] = to_json(report.params);
    j["a2_bound"] = report.a2_bound;
    j["a3_bound"] = report.a3_bound;
    j["branch_taken"] = report.branch_taken;
    j["radicand"] = report.radicand;
    return j;
}

json to_json(const ConditionReport& report) {
    return json{{"satisfied", report.satisfied},
                {"worst_margin", report.worst_margin},
                {"worst_point", complex_json(report.worst_point)},
                {"grid_radii", report.grid_radii},
                {"grid_angles", report.grid_angles},
                {"truncation_order", report.truncation_order}};
}

json to_json(const SchwarzSpec& spec) {
    json j{{"kind", spec.kind == SchwarzSpec::Kind::blaschke ? "blaschke" : "monomial"},
           {"eta", complex_json(spec.eta)}};
    if (spec.kind == SchwarzSpec::Kind::blaschke)
        j["c"] = complex_json(spec.c);
    else
        j["power"] = spec.power;
    return j;
}

json to_json(const SampleRecord& record) {
    json coeffs = json::array();
    for (const auto& c : record.coefficients) coeffs.push_back(complex_json(c));
    json j = to_json(record.family);
    j["trial"] = record.trial;
    j["params"] = to_json(record.params);
    j["schwarz"] = to_json(record.schwarz);
    j["order"] = record.solve_order;
    j["coefficients"] = coeffs;
    j["condition_z"] = to_json(record.condition_z);
    j["condition_w"] = to_json(record.condition_w);
    j["status"] = std::string(trial_status_name(record.status));
    j["accepted"] = record.accepted();
    j["a2_abs"] = record.a2_abs;
    j["a3_abs"] = record.a3_abs;
    j["a2_bound"] = record.a2_bound;
    j["a3_bound"] = record.a3_bound;
    j["violation"] = record.violation;
    return j;
}

json to_json(const IdentityVerdict& verdict) {
    json failures = json::array();
    for (const auto& f : verdict.failures)
        failures.push_back(json{{"point", f.point}, {"residual", f.residual}});
    return json{{"id", verdict.id},
                {"samples", verdict.samples},
                {"passed", verdict.passed()},
                {"failures", failures}};
}

json to_json(const SampleSummary& summary) {
    return json{{"trials", summary.trials},
                {"accepted", summary.accepted},
                {"rejected", summary.rejected},
                {"inconclusive", summary.inconclusive},
                {"violations", summary.violations}};
}

std::string bound_report_text(const BoundReport& report) {
    std::ostringstream out;
    out << "family: " << report.family.name() << " (" << report.family.describe() << ")\n"
        << "params: " << report.params.describe() << " xi=" << to_string(report.params.xi())
        << "\n"
        << "a2_bound: " << double_repr(report.a2_bound) << "\n"
        << "a3_bound: " << double_repr(report.a3_bound) << "\n"
        << "branch: " << report.branch_taken << "\n"
        << "radicand: " << double_repr(report.radicand) << "\n";
    return out.str();
}

std::string sample_csv(const std::vector<SampleRecord>& records) {
    std::ostringstream out;
    out << "trial,family,lambda,mu,delta,order,a2_abs,a3_abs,a2_bound,a3_bound,accepted,"
           "margin_z,margin_w,violation\n";
    for (const auto& r : records) {
        out << r.trial << ',' << r.family.name() << ',' << to_string(r.params.lambda) << ','
            << to_string(r.params.mu) << ',' << to_string(r.params.delta) << ',' << r.solve_order
            << ',' << double_repr(r.a2_abs) << ',' << double_repr(r.a3_abs) << ','
            << double_repr(r.a2_bound) << ',' << double_repr(r.a3_bound) << ','
            << (r.accepted() ? "true" : "false") << ',' << double_repr(r.condition_z.worst_margin)
            << ',' << double_repr(r.condition_w.worst_margin) << ','
            << (r.violation ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string summary_line(const SampleSummary& s) {
    std::ostringstream out;
    out << "trials=" << s.trials << " accepted=" << s.accepted << " rejected=" << s.rejected
        << " inconclusive=" << s.inconclusive << " violations=" << s.violations;
    return out.str();
}

std::string verdict_table(const std::vector<IdentityVerdict>& verdicts) {
    std::ostringstream out;
    std::size_t width = 0;
    for (const auto& v : verdicts) width = std::max(width, v.id.size());
    for (const auto& v : verdicts) {
        out << (v.passed() ? "[PASS] " : "[FAIL] ") << v.id
            << std::string(width - v.id.size() + 2, ' ') << "samples=" << v.samples;
        if (!v.passed()) out << " failures=" << v.failures.size();
        out << '\n';
        if (!v.passed()) {
            const std::size_t show = std::min<std::size_t>(v.failures.size(), 5);
            for (std::size_t i = 0; i < show; ++i)
                out << "       at " << v.failures[i].point
                    << "\n       residual: " << v.failures[i].residual << '\n';
            if (v.failures.size() > show)
                out << "       ... " << (v.failures.size() - show) << " more\n";
        }
    }
    return out.str();
}

}  // namespace bicoeff
