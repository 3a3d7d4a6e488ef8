#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "szego/banded_closed_form.hpp"
#include "szego/errors.hpp"
#include "szego/inverse_assembly.hpp"
#include "szego/io.hpp"
#include "szego/oracle_validation.hpp"
#include "szego/spectral_density.hpp"
#include "szego/szego_transform.hpp"

namespace szego::cli {

namespace {

using io::json;

struct RunConfig {
    std::optional<double> fgn;
    std::optional<std::string> banded;
    std::optional<std::string> tridiagonal;
    std::optional<int> order;  // N
    double tol = 1e-10;
    int block = 5;
    std::optional<int> oracle_m;
    double bound = 1e-6;
    bool closed_form = false;
    std::string format = "json";
    std::string out_path;
    std::optional<double> gap_tol;
    std::vector<int> gap_lags;
};

// Thrown for configuration problems detected here (exit code 2).
class ConfigError : public Error {
  public:
    using Error::Error;
};

struct Density {
    std::unique_ptr<SpectralDensity> density;
    std::optional<TridiagonalSpec> tridiagonal;  // set when the band has order 1
    int default_order = 0;
    int default_oracle_m = 0;
};

std::vector<double> parse_reals(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw ConfigError("cannot parse '" + item + "' as a real number");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw ConfigError("cannot parse '" + item + "' as a real number");
        values.push_back(v);
    }
    if (values.empty()) throw ConfigError("expected a comma-separated list of reals");
    return values;
}

// --banded accepts: "identity"; a path to a density spec file; an inline JSON
// spec object; an inline JSON array of q_k; or comma-separated real q_k.
std::unique_ptr<SpectralDensity> banded_from_argument(const std::string& arg) {
    if (arg == "identity") return std::make_unique<BandedDensity>(std::vector<std::complex<double>>{});
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '{') return io::parse_density_spec(arg);
    if (first != std::string::npos && arg[first] == '[')
        return io::parse_density_spec("{\"kind\":\"banded\",\"q\":" + arg + "}");
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return io::load_density_spec_file(arg);
    std::vector<std::complex<double>> q;
    for (double v : parse_reals(arg)) q.emplace_back(v, 0.0);
    return std::make_unique<BandedDensity>(std::move(q));
}

Density resolve_density(const RunConfig& cfg) {
    const int given = int(cfg.fgn.has_value()) + int(cfg.banded.has_value()) + int(cfg.tridiagonal.has_value());
    if (given != 1) throw ConfigError("exactly one of --fgn, --banded, --tridiagonal is required");
    Density out;
    if (cfg.fgn) {
        out.density = std::make_unique<FgnDensity>(*cfg.fgn);
    } else if (cfg.banded) {
        out.density = banded_from_argument(*cfg.banded);
    } else {
        const auto parts = parse_reals(*cfg.tridiagonal);
        if (parts.size() > 2) throw ConfigError("--tridiagonal takes re[,im]");
        const std::complex<double> q(parts[0], parts.size() > 1 ? parts[1] : 0.0);
        out.density = std::make_unique<BandedDensity>(std::vector<std::complex<double>>{q});
    }
    if (const auto band = out.density->band_order()) {
        out.default_order = 4 * *band + 16;
        out.default_oracle_m = 100;
        if (*band == 1) {
            const auto q = dynamic_cast<const BandedDensity&>(*out.density).q()[0];
            if (std::abs(q) < 0.5 - 1e-12) out.tridiagonal.emplace(q);
        }
    } else {
        out.default_order = 256;
        out.default_oracle_m = 1000;
    }
    return out;
}

// block_needs_order: the block is assembled from a_0..a_{N} (invert, validate).
void validate_common(const RunConfig& cfg, int order, bool block_needs_order) {
    if (!(cfg.tol > 0.0)) throw ConfigError("--tol must be positive");
    if (cfg.block < 1) throw ConfigError("--block must be at least 1");
    if (block_needs_order && !cfg.closed_form && order < cfg.block - 1)
        throw ConfigError("--N must be at least block - 1 (= " + std::to_string(cfg.block - 1) + ")");
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "table")
        throw ConfigError("--format must be one of json, csv, table");
}

std::string format_g(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string render_block(const InverseBlock& block, const std::string& format, const json& extra = {}) {
    std::ostringstream os;
    if (format == "json") {
        json j = io::block_to_json(block);
        for (const auto& [key, value] : extra.items()) j[key] = value;
        os << io::dump(j);
    } else if (format == "csv") {
        io::write_block_csv(os, block);
    } else {
        io::write_block_table(os, block);
    }
    return os.str();
}

std::string render_coefficients(const SzegoPipeline& p, double tol, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        os << io::dump(io::coefficients_to_json(p, tol));
        return os.str();
    }
    const bool csv = format == "csv";
    if (csv)
        os << "# N=" << p.psi.order() << " tol=" << format_g(tol, 17) << "\nk,u,a,c\n";
    else
        os << "N = " << p.psi.order() << ", tol = " << format_g(tol, 6) << '\n';
    auto cell = [&](std::complex<double> z) {
        if (csv) return io::format_complex_csv(z);
        std::string s = format_g(z.real(), 6);
        if (z.imag() != 0.0) s += (z.imag() < 0 ? " - " : " + ") + format_g(std::abs(z.imag()), 6) + "i";
        return s;
    };
    for (int k = 0; k <= p.psi.order(); ++k) {
        if (csv)
            os << k << ',' << cell(p.u.u[k]) << ',' << cell(p.psi[k]) << ',' << cell(p.szego[k]) << '\n';
        else
            os << "k=" << k << "  u=" << cell(p.u.u[k]) << "  a=" << cell(p.psi[k]) << "  c=" << cell(p.szego[k])
               << '\n';
    }
    return os.str();
}

std::string render_report(const OracleReport& r, double bound, bool pass, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        json j = io::report_to_json(r);
        j["bound"] = bound;
        j["pass"] = pass;
        os << io::dump(j);
    } else if (format == "csv") {
        os << "m,n,max_abs_diff,frobenius_diff,cholesky_min_pivot,bound,pass\n"
           << r.m << ',' << r.n << ',' << format_g(r.max_abs_diff, 17) << ',' << format_g(r.frobenius_diff, 17)
           << ',' << format_g(r.cholesky_min_pivot, 17) << ',' << format_g(bound, 17) << ','
           << (pass ? "true" : "false") << '\n';
    } else {
        os << "oracle m = " << r.m << ", block n = " << r.n << '\n'
           << "max_abs_diff       " << format_g(r.max_abs_diff, 6) << '\n'
           << "frobenius_diff     " << format_g(r.frobenius_diff, 6) << '\n'
           << "cholesky_min_pivot " << format_g(r.cholesky_min_pivot, 6) << '\n'
           << "bound              " << format_g(bound, 6) << (pass ? "  PASS" : "  FAIL") << '\n';
    }
    return os.str();
}

// Szego pipeline, optionally re-truncated at the first order whose diagonal
// partial sum is within gap_tol of the integral of 1/phi.
SzegoPipeline pipeline_for(const RunConfig& cfg, const Density& dens, int order) {
    SzegoPipeline p = run_pipeline(*dens.density, order, cfg.tol);
    if (!cfg.gap_tol) return p;
    const double limit = diagonal_limit(*dens.density, cfg.tol);
    const auto n = truncation_by_diagonal_gap(p.psi, limit, *cfg.gap_tol);
    if (!n) throw NumericError("diagonal gap did not fall below --gap-tol within N = " + std::to_string(order));
    const int keep = std::max(*n, cfg.block - 1);
    p.u.u.resize(keep + 1);
    p.psi.coeffs.resize(keep + 1);
    p.szego.coeffs.resize(keep + 1);
    return p;
}

InverseBlock compute_block(const RunConfig& cfg, const Density& dens, int order) {
    if (cfg.closed_form) {
        if (!dens.tridiagonal)
            throw ConfigError("--closed-form needs a tridiagonal density with |q| < 1/2");
        return tridiagonal_inverse_block(*dens.tridiagonal, cfg.block);
    }
    return inverse_block(pipeline_for(cfg, dens, order).psi, cfg.block);
}

std::string cmd_coeffs(const RunConfig& cfg, const Density& dens, int order) {
    if (cfg.closed_form) throw ConfigError("--closed-form applies to invert and validate only");
    return render_coefficients(pipeline_for(cfg, dens, order), cfg.tol, cfg.format);
}

std::string cmd_invert(const RunConfig& cfg, const Density& dens, int order) {
    return render_block(compute_block(cfg, dens, order), cfg.format,
                        cfg.format == "json" ? json{{"density", io::density_to_json(*dens.density)}} : json{});
}

std::string cmd_validate(const RunConfig& cfg, const Density& dens, int order, bool& pass) {
    const int m = cfg.oracle_m.value_or(std::max(dens.default_oracle_m, cfg.block));
    if (m < cfg.block) throw ConfigError("--oracle-m must be at least --block");
    if (!(cfg.bound >= 0.0)) throw ConfigError("--bound must be non-negative");
    const InverseBlock computed = compute_block(cfg, dens, order);
    const InverseBlock oracle =
        finite_section_inverse_block(finite_section_matrix(*dens.density, m, cfg.tol), cfg.block);
    const OracleReport report = compare_blocks(computed, oracle);
    pass = report.max_abs_diff <= cfg.bound;
    return render_report(report, cfg.bound, pass, cfg.format);
}

std::string cmd_whittle(const RunConfig& cfg, const Density& dens) {
    const InverseBlock gamma = whittle_matrix(*dens.density, cfg.block, cfg.tol);
    if (cfg.gap_lags.empty()) return render_block(gamma, cfg.format);

    // |Gamma_{k+1,k} - (G^{-1})_{k+1,k}| for the requested k.
    const int max_lag = *std::max_element(cfg.gap_lags.begin(), cfg.gap_lags.end());
    if (*std::min_element(cfg.gap_lags.begin(), cfg.gap_lags.end()) < 1)
        throw ConfigError("--gap-lags entries must be at least 1");
    const int order = std::max(cfg.order.value_or(dens.default_order), max_lag);
    const SzegoPipeline p = run_pipeline(*dens.density, order, cfg.tol);
    const std::complex<double> limit = whittle_entry(*dens.density, 2, 1, cfg.tol);
    json gaps = json::array();
    std::ostringstream text;
    for (int k : cfg.gap_lags) {
        const double gap = std::abs(limit - inverse_entry(p.psi, k + 1, k));
        gaps.push_back(json{{"k", k}, {"gap", gap}});
        if (cfg.format == "csv")
            text << k << ',' << format_g(gap, 17) << '\n';
        else
            text << "k=" << k << "  gap=" << format_g(gap, 6) << '\n';
    }
    if (cfg.format == "json") return render_block(gamma, cfg.format, json{{"gap_report", gaps}});
    return render_block(gamma, cfg.format) + (cfg.format == "csv" ? "# gap report\nk,gap\n" : "gap report\n") +
           text.str();
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--fgn", cfg.fgn, "fractional Gaussian noise with Hurst index H in (0,1)");
    sub->add_option("--banded", cfg.banded,
                    "banded density: spec file, inline JSON, 'identity', or comma-separated real q_k");
    sub->add_option("--tridiagonal", cfg.tridiagonal, "tridiagonal density q = re[,im]");
    sub->add_option("--N", cfg.order, "truncation order N (default 256 for fGn, 4m+16 for banded)");
    sub->add_option("--tol", cfg.tol, "quadrature tolerance")->capture_default_str();
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out_path, "output file (default: standard output)");
}

void add_block_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--block", cfg.block, "block size n")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Inverse of infinite Hermitian Toeplitz matrices via the inverse Szego function", "szego"};
    app.require_subcommand(1);

    auto* coeffs = app.add_subcommand("coeffs", "log-Fourier coefficients u, inverse Szego a and Szego c");
    add_common_options(coeffs, cfg);
    coeffs->add_option("--gap-tol", cfg.gap_tol, "truncate at the first N whose diagonal gap is below this");

    auto* invert = app.add_subcommand("invert", "n x n block of the inverse matrix");
    add_common_options(invert, cfg);
    add_block_options(invert, cfg);
    invert->add_flag("--closed-form", cfg.closed_form, "use the tridiagonal closed form");
    invert->add_option("--gap-tol", cfg.gap_tol, "truncate at the first N whose diagonal gap is below this");

    auto* validate = app.add_subcommand("validate", "compare against the finite-section Cholesky oracle");
    add_common_options(validate, cfg);
    add_block_options(validate, cfg);
    validate->add_flag("--closed-form", cfg.closed_form, "use the tridiagonal closed form");
    validate->add_option("--oracle-m", cfg.oracle_m, "finite-section size m (default 1000 fGn, 100 banded)");
    validate->add_option("--bound", cfg.bound, "max-abs difference bound")->capture_default_str();

    auto* whittle = app.add_subcommand("whittle", "n x n Whittle matrix of 1/phi");
    add_common_options(whittle, cfg);
    add_block_options(whittle, cfg);
    whittle->add_option("--gap-lags", cfg.gap_lags, "lags k for |Gamma_{k+1,k} - (G^-1)_{k+1,k}|")
        ->delimiter(',');

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "szego: " << e.what() << '\n';
        return config_error;
    }

    try {
        const Density dens = resolve_density(cfg);
        const int order = cfg.order.value_or(dens.default_order);
        if (order < 0) throw ConfigError("--N must be non-negative");
        validate_common(cfg, order, invert->parsed() || validate->parsed());

        bool pass = true;
        std::string text;
        if (coeffs->parsed())
            text = cmd_coeffs(cfg, dens, order);
        else if (invert->parsed())
            text = cmd_invert(cfg, dens, order);
        else if (validate->parsed())
            text = cmd_validate(cfg, dens, order, pass);
        else
            text = cmd_whittle(cfg, dens);

        if (cfg.out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(cfg.out_path, std::ios::binary);
            if (!file) throw ConfigError("cannot open output file '" + cfg.out_path + "'");
            file << text;
            if (!file) throw ConfigError("failed writing output file '" + cfg.out_path + "'");
        }
        if (!pass) {
            err << "szego: validation bound breached\n";
            return bound_breached;
        }
        return ok;
    } catch (const NumericError& e) {
        err << "szego: numeric failure: " << e.what() << '\n';
        return numeric_failure;
    } catch (const Error& e) {
        // configuration, parse, domain and range errors
        err << "szego: " << e.what() << '\n';
        return config_error;
    } catch (const std::exception& e) {
        err << "szego: numeric failure: " << e.what() << '\n';
        return numeric_failure;
    }
}

}  // namespace szego::cli
