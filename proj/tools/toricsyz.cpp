// Command-line surface over the exact-table, oracle and asymptotics modules.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toricsyz/asymptotics.hpp"
#include "toricsyz/errors.hpp"
#include "toricsyz/reconcile.hpp"
#include "toricsyz/report.hpp"

namespace {

using namespace toricsyz;

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    try {
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) out.push_back(std::stol(item));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--d-list", "expected comma-separated integers");
    }
    return out;
}

FormulaVariant parse_variant(const std::string& text) {
    // "<n1>,<kappa>[,<s>]" with n1 in {algebraic, interior, height1}
    std::stringstream ss(text);
    std::string n1;
    std::string kappa;
    std::string s;
    std::getline(ss, n1, ',');
    std::getline(ss, kappa, ',');
    std::getline(ss, s, ',');

    FormulaVariant v = validated_variant();
    if (n1 == "algebraic")
        v.n1_interpretation = N1Interpretation::AlgebraicClosedForm;
    else if (n1 == "interior")
        v.n1_interpretation = N1Interpretation::GeometricInterior;
    else if (n1 == "height1")
        v.n1_interpretation = N1Interpretation::HeightOne;
    else
        throw CLI::ValidationError("--variant", "n1 must be algebraic, interior or height1");
    try {
        if (!kappa.empty()) v.q2_max_shift = std::stoi(kappa);
        if (!s.empty()) v.q1_coeff_shift = std::stoi(s);
        validate(v);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--variant", e.what());
    }
    return v;
}

std::vector<SurfaceSpec> parse_grid(const std::string& text) {
    // "delta,d;delta,d;..."
    std::vector<SurfaceSpec> out;
    std::stringstream ss(text);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        auto nums = parse_long_list(pair);
        if (nums.size() != 2) throw CLI::ValidationError("--grid", "expected delta,d pairs");
        out.push_back({nums[0], nums[1]});
    }
    return out;
}

OracleOptions oracle_options_from_env() {
    OracleOptions options;
    if (const char* env = std::getenv("TORICSYZ_ORACLE_MAX_ENTRIES")) {
        options.entry_limit = std::strtoull(env, nullptr, 10);
        if (options.entry_limit == 0)
            throw CLI::ValidationError("TORICSYZ_ORACLE_MAX_ENTRIES", "must be a positive integer");
    }
    return options;
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit OutputTarget(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        os = &file;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graded Betti tables of a trapezoidal toric surface family,\n"
                 "their Koszul-cohomology ground truth, and Gaussian-profile checks"};
    app.require_subcommand(1);

    long delta = 0;
    long d = 0;
    int q = 1;
    std::string d_list_text;
    std::string variant_text = "interior,3,2";
    std::string grid_text = "0,1;0,2;1,1;1,2;2,1;2,2";
    std::string out_path;
    std::string format = "text";
    double a_window = 2.0;
    long clt_r = 100;
    long clt_p = -1;
    long clt_c1 = 0;
    long clt_c2 = 0;
    std::uint32_t prime = kOraclePrime;

    auto add_common = [&](CLI::App* cmd, bool needs_d) {
        cmd->add_option("--delta", delta, "ray parameter delta (default 0)");
        auto* opt = cmd->add_option("--d", d, "degree parameter d");
        if (needs_d) opt->required();
        cmd->add_option("--variant", variant_text,
                        "formula variant: <algebraic|interior|height1>,<kappa>[,<s>]");
        cmd->add_option("--out", out_path, "write output to this file instead of stdout");
        cmd->add_option("--format", format, "output format: text or csv")
            ->check(CLI::IsMember({"text", "csv"}));
    };

    auto* table_cmd = app.add_subcommand("table", "print the exact Betti table");
    add_common(table_cmd, true);

    auto* row_cmd = app.add_subcommand("row", "emit one row in normal coordinates as CSV");
    add_common(row_cmd, true);
    row_cmd->add_option("--q", q, "row index, 1 or 2")->required()->check(CLI::Range(1, 2));
    row_cmd->add_option("--a-window", a_window, "restrict to |a_eff| <= window for large r");

    auto* figure_cmd =
        app.add_subcommand("figure", "emit both rows normalized by row maxima as CSV");
    add_common(figure_cmd, false);
    figure_cmd->add_option("--d-list", d_list_text, "comma-separated d values (default 3,5,10,20)");

    auto* oracle_cmd = app.add_subcommand("oracle", "print the Koszul-cohomology table");
    add_common(oracle_cmd, true);
    oracle_cmd->add_option("--prime", prime, "working prime (default 32003)");

    auto* clt_cmd = app.add_subcommand("clt", "emit scaled-binomial samples as CSV");
    clt_cmd->add_option("--r", clt_r, "row width r")->required();
    clt_cmd->add_option("--p", clt_p, "single column p (default: sweep the a-window)");
    clt_cmd->add_option("--c1", clt_c1, "upper-index shift");
    clt_cmd->add_option("--c2", clt_c2, "lower-index shift");
    clt_cmd->add_option("--a-window", a_window, "sweep window when --p is not given");
    clt_cmd->add_option("--out", out_path, "write output to this file instead of stdout");

    auto* reconcile_cmd =
        app.add_subcommand("reconcile", "match formula variants against the oracle");
    reconcile_cmd->add_option("--grid", grid_text, "semicolon-separated delta,d pairs");
    reconcile_cmd->add_option("--out", out_path, "write output to this file instead of stdout");
    reconcile_cmd->add_option("--format", format, "output format: text or csv")
        ->check(CLI::IsMember({"text", "csv"}));

    auto* check_cmd = app.add_subcommand("check", "run the Gaussian-profile checks per row");
    check_cmd->add_option("--delta", delta, "ray parameter delta (default 0)");
    check_cmd->add_option("--d-list", d_list_text,
                          "comma-separated d values (default 50,100,200,400,800)");
    check_cmd->add_option("--a-window", a_window, "central window in a_eff units (default 2)");
    check_cmd->add_option("--variant", variant_text, "formula variant");
    check_cmd->add_option("--out", out_path, "write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        OutputTarget target(out_path);
        std::ostream& os = *target.os;
        const FormulaVariant variant = parse_variant(variant_text);

        if (*table_cmd) {
            const auto table = betti_table(SurfaceSpec{delta, d}, variant);
            if (format == "csv")
                write_betti_table_csv(os, table);
            else
                write_betti_table_text(os, table);
        } else if (*row_cmd) {
            ScaledRowOptions opts;
            if (row_cmd->count("--a-window")) opts.a_window = a_window;
            write_row_csv(os, scaled_row(SurfaceSpec{delta, d}, q, variant, opts));
        } else if (*figure_cmd) {
            auto d_list = d_list_text.empty() ? std::vector<long>{3, 5, 10, 20}
                                              : parse_long_list(d_list_text);
            write_figure_csv(os, delta, d_list, variant);
        } else if (*oracle_cmd) {
            auto options = oracle_options_from_env();
            options.prime = prime;
            const auto result = oracle_table_full(SurfaceSpec{delta, d}, options);
            for (size_t p = 0; p < result.row3.size(); ++p)
                if (result.row3[p] != 0)
                    throw std::logic_error("oracle row q=3 is nonzero at p=" + std::to_string(p));
            if (format == "csv")
                write_betti_table_csv(os, result.table);
            else
                write_betti_table_text(os, result.table);
            os << "# oracle elapsed_seconds: " << format_double(result.elapsed_seconds) << "\n";
        } else if (*clt_cmd) {
            std::vector<CltSample> samples;
            if (clt_cmd->count("--p")) {
                samples.push_back(clt_value(clt_r, clt_p, clt_c1, clt_c2));
            } else {
                const double w = a_window * std::sqrt(static_cast<double>(clt_r));
                const long lo = std::max(0L, static_cast<long>((clt_r - w) / 2));
                const long hi = std::min(clt_r, static_cast<long>((clt_r + w) / 2));
                for (long p = lo; p <= hi; ++p)
                    samples.push_back(clt_value(clt_r, p, clt_c1, clt_c2));
            }
            write_clt_csv(os, samples);
        } else if (*reconcile_cmd) {
            const auto report = reconcile(parse_grid(grid_text), oracle_options_from_env());
            if (format == "csv")
                write_reconcile_csv(os, report);
            else
                write_reconcile_text(os, report);
        } else if (*check_cmd) {
            auto d_list = d_list_text.empty() ? std::vector<long>{50, 100, 200, 400, 800}
                                              : parse_long_list(d_list_text);
            const auto report = theorem_check(delta, d_list, a_window, variant);
            write_theorem_report_text(os, report);
            const bool q1_ok = report.q1_errors_decreasing && report.q1_decay &&
                               report.q1_decay->slope <= -0.3 && report.q1_decay->slope >= -1.3;
            os << "q=1 Gaussian-profile criterion (decreasing, slope in [-1.3,-0.3]): "
               << (q1_ok ? "PASS" : "FAIL") << "\n";
            bool q2_ok = true;
            for (const auto& s : report.q2_support)
                if (s.d >= report.q2_vanishing_threshold_d && !s.central_zero) q2_ok = false;
            os << "q=2 central-vanishing criterion: " << (q2_ok ? "PASS" : "FAIL") << "\n";
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
