#include "bicoeff/bounds.hpp"
#include "bicoeff/report.hpp"
#include "bicoeff/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace bicoeff;
using nlohmann::json;

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitBadArguments = 2;

Rational parse_rational(const std::string& text, const char* what) {
    try {
        return rational_from_string(text);
    } catch (const std::invalid_argument&) {
        throw std::domain_error(std::string(what) + " must be a rational or decimal number, got '" +
                                text + "'");
    }
}

ClassParams parse_params(const std::string& lambda, const std::string& mu,
                         const std::string& delta) {
    return ClassParams::checked(parse_rational(lambda, "lambda"), parse_rational(mu, "mu"),
                                parse_rational(delta, "delta"));
}

FamilySpec parse_family(const std::string& family, const std::optional<std::string>& alpha,
                        const std::optional<std::string>& beta) {
    if (family == "alpha") {
        if (beta) throw std::domain_error("--beta does not apply to the alpha family");
        if (!alpha) throw std::domain_error("the alpha family needs --alpha");
        return FamilySpec::arg_family(parse_rational(*alpha, "alpha"));
    }
    if (family == "beta") {
        if (alpha) throw std::domain_error("--alpha does not apply to the beta family");
        if (!beta) throw std::domain_error("the beta family needs --beta");
        return FamilySpec::re_family(parse_rational(*beta, "beta"));
    }
    throw std::domain_error("family must be 'alpha' or 'beta'");
}

void write_output(const std::optional<std::string>& path, const std::string& content) {
    if (!path) {
        std::cout << content;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + *path + "'");
    out << content;
    if (!out.good()) throw std::runtime_error("write failed for '" + *path + "'");
}

DiskGrid make_grid(const std::optional<std::string>& radii_csv, int angles) {
    DiskGrid grid = DiskGrid::standard();
    grid.angles = angles;
    if (radii_csv) {
        grid.radii.clear();
        std::istringstream in(*radii_csv);
        std::string piece;
        while (std::getline(in, piece, ','))
            if (!piece.empty()) grid.radii.push_back(std::stod(piece));
    }
    grid.validate();
    return grid;
}

int run_bounds(const std::string& family, const std::optional<std::string>& alpha,
               const std::optional<std::string>& beta, const std::string& lambda,
               const std::string& mu, const std::string& delta, const std::string& format,
               const std::optional<std::string>& out_path) {
    const ClassParams params = parse_params(lambda, mu, delta);
    const FamilySpec spec = parse_family(family, alpha, beta);
    const BoundReport report = evaluate_bounds(params, spec);
    if (format == "json")
        write_output(out_path, to_json(report).dump(2) + "\n");
    else
        write_output(out_path, bound_report_text(report));
    return 0;
}

int run_verify(const std::string& suite, int trials, std::uint64_t seed, int grid,
               const std::string& format, const std::optional<std::string>& out_path) {
    std::vector<IdentityVerdict> verdicts;
    auto append = [&](std::vector<IdentityVerdict> more) {
        for (auto& v : more) verdicts.push_back(std::move(v));
    };

    if (suite == "inverse" || suite == "all") append(verify_inverse_expansion());
    if (suite == "identities" || suite == "all") {
        append(verify_coefficient_equations(FamilyKind::Arg, trials, seed));
        append(verify_coefficient_equations(FamilyKind::Re, trials, seed));
        append(verify_derived_identities(FamilyKind::Arg, trials, seed));
        append(verify_derived_identities(FamilyKind::Re, trials, seed));
    }
    if (suite == "corollaries" || suite == "all") append(verify_corollary_reductions(grid));
    if (suite == "caratheodory" || suite == "all")
        verdicts.push_back(verify_caratheodory(std::max(trials, 1000), seed));
    if (verdicts.empty())
        throw std::domain_error(
            "verify suite must be one of: inverse, identities, corollaries, caratheodory, all");

    if (format == "json") {
        json j = json::array();
        for (const auto& v : verdicts) j.push_back(to_json(v));
        write_output(out_path, j.dump(2) + "\n");
    } else {
        write_output(out_path, verdict_table(verdicts));
    }
    return all_passed(verdicts) ? 0 : kExitChecksFailed;
}

int run_sample(const std::string& family, const std::optional<std::string>& alpha,
               const std::optional<std::string>& beta, const std::string& lambda,
               const std::string& mu, const std::string& delta, int trials, std::uint64_t seed,
               int order, int cond_order, const std::optional<std::string>& radii, int angles,
               const std::optional<std::string>& probe, const std::string& format,
               const std::optional<std::string>& out_path) {
    const ClassParams params = parse_params(lambda, mu, delta);
    const FamilySpec spec = parse_family(family, alpha, beta);
    const DiskGrid grid = make_grid(radii, angles);

    std::optional<SchwarzSpec> forced;
    if (probe) {
        if (*probe == "zero")
            forced = SchwarzSpec::zero();
        else if (*probe == "extremal")
            forced = SchwarzSpec::rotation({1.0, 0.0}, 1);
        else
            throw std::domain_error("--probe must be 'zero' or 'extremal'");
    }

    const auto records = sample_members(spec, params, trials, seed, grid, order, cond_order,
                                        forced ? &*forced : nullptr);
    const SampleSummary summary = summarize(records);

    if (format == "json") {
        json j;
        j["family"] = to_json(spec);
        j["params"] = to_json(params);
        j["seed"] = seed;
        j["records"] = json::array();
        for (const auto& r : records) j["records"].push_back(to_json(r));
        j["summary"] = to_json(summary);
        write_output(out_path, j.dump(2) + "\n");
    } else {
        write_output(out_path, sample_csv(records));
    }
    std::cout << summary_line(summary) << "\n";
    return summary.violations == 0 ? 0 : kExitChecksFailed;
}

int run_table(int grid, const std::string& lambda, const std::string& mu,
              const std::optional<std::string>& only, const std::string& format,
              const std::optional<std::string>& out_path) {
    const Rational lam = parse_rational(lambda, "lambda");
    const Rational m = parse_rational(mu, "mu");

    std::vector<CorollaryId> ids = {
        CorollaryId::alpha_srivastava, CorollaryId::alpha_frasin,
        CorollaryId::alpha_caglar,     CorollaryId::alpha_strongly_bistarlike,
        CorollaryId::beta_srivastava,  CorollaryId::beta_frasin,
        CorollaryId::beta_caglar,      CorollaryId::beta_bistarlike};
    if (only) ids = {corollary_from_name(*only)};

    std::ostringstream out;
    const bool csv = format == "csv";
    if (csv)
        out << "corollary,param,lambda,mu,general_a2,corollary_a2,diff_a2,general_a3,"
               "corollary_a3,diff_a3\n";

    for (CorollaryId id : ids) {
        const ClassParams params = corollary_params(id, lam, m);
        if (!csv)
            out << "# " << corollary_name(id) << "  (" << params.describe() << ")\n"
                << "  param    general_a2    corollary_a2  diff_a2     general_a3    "
                   "corollary_a3  diff_a3\n";
        for (int k = corollary_is_alpha(id) ? 1 : 0; k <= (corollary_is_alpha(id) ? grid : grid - 1);
             ++k) {
            const Rational param(k, grid);
            const CorollaryValues cv = corollary_formula(id, param, lam, m);
            double general_a2, general_a3;
            if (corollary_is_alpha(id)) {
                general_a2 = bound_a2_alpha(params, param).value;
                general_a3 = bound_a3_alpha(params, param);
            } else {
                general_a2 = bound_a2_beta(params, param).value;
                general_a3 = bound_a3_beta(params, param).value;
            }
            if (csv) {
                out << corollary_name(id) << ',' << to_string(param) << ','
                    << to_string(params.lambda) << ',' << to_string(params.mu) << ','
                    << double_repr(general_a2) << ',' << double_repr(cv.a2) << ','
                    << double_repr(general_a2 - cv.a2) << ',' << double_repr(general_a3) << ','
                    << double_repr(cv.a3) << ',' << double_repr(general_a3 - cv.a3) << '\n';
            } else {
                char line[160];
                std::snprintf(line, sizeof line,
                              "  %-8s %-13.10g %-13.10g %-11.3e %-13.10g %-13.10g %-.3e\n",
                              to_string(param).c_str(), general_a2, cv.a2, general_a2 - cv.a2,
                              general_a3, cv.a3, general_a3 - cv.a3);
                out << line;
            }
        }
        if (!csv) out << '\n';
    }
    write_output(out_path, out.str());
    return 0;
}

int run_invert(const std::string& coeffs_csv, std::optional<int> order, const std::string& format,
               const std::optional<std::string>& out_path) {
    std::vector<Rational> tail;
    std::istringstream in(coeffs_csv);
    std::string piece;
    while (std::getline(in, piece, ','))
        if (!piece.empty()) tail.push_back(parse_rational(piece, "coefficient"));
    if (tail.empty()) throw std::domain_error("--coeffs needs at least a2");

    const int N = order.value_or(static_cast<int>(tail.size()) + 1);
    if (N < static_cast<int>(tail.size()) + 1)
        throw std::domain_error("--order too small for the given coefficients");
    const auto f = NormalizedSeries<Rational>::from_tail(tail, N);
    const auto g = reversion(f);

    if (format == "json") {
        json j;
        j["order"] = N;
        json list = json::array();
        for (int n = 2; n <= N; ++n) list.push_back(to_string(g.coeff(n)));
        j["coefficients"] = list;
        write_output(out_path, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        for (int n = 2; n <= N; ++n)
            out << "b" << n << " = " << to_string(g.coeff(n)) << "\n";
        write_output(out_path, out.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coefficient-bound toolkit for two operator-defined bi-univalent families"};
    app.require_subcommand(1);

    std::string family, lambda = "1", mu = "1", delta = "0";
    std::optional<std::string> alpha, beta, out_path, radii, probe, only;
    std::string format = "text";
    int trials = 120, grid = 101, order = 8, cond_order = 32, angles = 720;
    std::uint64_t seed = 2024;
    std::string suite = "all", coeffs;
    std::optional<int> invert_order;

    auto add_family_flags = [&](CLI::App* cmd) {
        cmd->add_option("--family", family, "alpha | beta")->required();
        cmd->add_option("--alpha", alpha, "argument-family order, 0 < alpha <= 1");
        cmd->add_option("--beta", beta, "real-part-family order, 0 <= beta < 1");
        cmd->add_option("--lambda", lambda, "operator weight, >= 1 (default 1)");
        cmd->add_option("--mu", mu, "power of f/z, >= 0 (default 1)");
        cmd->add_option("--delta", delta, "curvature-term weight, >= 0 (default 0)");
    };

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate the |a2| and |a3| bounds");
    add_family_flags(bounds_cmd);
    bounds_cmd->add_option("--format", format, "text | json");
    bounds_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("suite", suite, "inverse | identities | corollaries | caratheodory | all");
    verify_cmd->add_option("--trials", trials, "parameter samples per identity (default 120)");
    verify_cmd->add_option("--seed", seed, "random seed (default 2024)");
    verify_cmd->add_option("--grid", grid, "grid points for corollary reductions (default 101)");
    verify_cmd->add_option("--format", format, "text | json");
    verify_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* sample_cmd = app.add_subcommand("sample", "sample candidate members and test bounds");
    add_family_flags(sample_cmd);
    sample_cmd->add_option("--trials", trials, "number of trials (default 120)");
    sample_cmd->add_option("--seed", seed, "random seed (default 2024)");
    sample_cmd->add_option("--order", order, "solve order for a2..aN (default 8)");
    sample_cmd->add_option("--cond-order", cond_order, "order for condition checks (default 32)");
    sample_cmd->add_option("--radii", radii, "comma-separated grid radii (default 0.1..0.9,0.95)");
    sample_cmd->add_option("--angles", angles, "grid angle count (default 720)");
    sample_cmd->add_option("--probe", probe, "force the Schwarz draw: zero | extremal");
    sample_cmd->add_option("--format", format, "csv | json");
    sample_cmd->add_option("--out", out_path, "write records to file");

    int table_grid = 10;
    CLI::App* table_cmd = app.add_subcommand("table", "corollary comparison table");
    table_cmd->add_option("--grid", table_grid, "points across the order-parameter range (default 10)");
    table_cmd->add_option("--lambda", lambda, "lambda for the frasin/caglar rows (default 1)");
    table_cmd->add_option("--mu", mu, "mu for the caglar rows (default 1)");
    table_cmd->add_option("--corollary", only, "restrict to one corollary id");
    table_cmd->add_option("--format", format, "text | csv");
    table_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* invert_cmd = app.add_subcommand("invert", "series reversion utility");
    invert_cmd->add_option("--coeffs", coeffs, "comma-separated a2,a3,... (exact rationals)")
        ->required();
    invert_cmd->add_option("--order", invert_order, "truncation order (default: len(coeffs)+1)");
    invert_cmd->add_option("--format", format, "text | json");
    invert_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bounds_cmd->parsed())
            return run_bounds(family, alpha, beta, lambda, mu, delta, format, out_path);
        if (verify_cmd->parsed()) return run_verify(suite, trials, seed, grid, format, out_path);
        if (sample_cmd->parsed())
            return run_sample(family, alpha, beta, lambda, mu, delta, trials, seed, order,
                              cond_order, radii, angles, probe, format, out_path);
        if (table_cmd->parsed()) return run_table(table_grid, lambda, mu, only, format, out_path);
        if (invert_cmd->parsed()) return run_invert(coeffs, invert_order, format, out_path);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }
    return kExitBadArguments;
}
