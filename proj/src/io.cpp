#include "szego/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "szego/errors.hpp"

namespace szego::io {

namespace {

double require_number(const json& j, const char* key, const char* context) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number())
        throw SpecParseError(std::string(context) + ": missing numeric field \"" + key + "\"");
    return j.at(key).get<double>();
}

std::string format_g(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

}  // namespace

json complex_to_json(std::complex<double> z) {
    // + 0.0 maps -0.0 to 0.0 so conjugated zeros do not leak a sign into files.
    return json{{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}};
}

std::complex<double> complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    return {require_number(j, "re", "complex"), j.contains("im") ? require_number(j, "im", "complex") : 0.0};
}

std::unique_ptr<SpectralDensity> density_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw SpecParseError("density spec: expected an object with a string field \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "fgn") return std::make_unique<FgnDensity>(require_number(j, "H", "fgn density spec"));
    if (kind == "banded") {
        if (!j.contains("q") || !j.at("q").is_array())
            throw SpecParseError("banded density spec: expected an array field \"q\"");
        std::vector<std::complex<double>> q;
        for (const auto& item : j.at("q")) q.push_back(complex_from_json(item));
        return std::make_unique<BandedDensity>(std::move(q));
    }
    throw SpecParseError("density spec: unknown kind \"" + kind + "\"");
}

json density_to_json(const SpectralDensity& d) {
    if (const auto* f = dynamic_cast<const FgnDensity*>(&d)) return json{{"kind", "fgn"}, {"H", f->hurst()}};
    if (const auto* b = dynamic_cast<const BandedDensity*>(&d)) {
        json q = json::array();
        for (auto z : b->q()) q.push_back(complex_to_json(z));
        return json{{"kind", "banded"}, {"q", std::move(q)}};
    }
    return json{{"kind", "other"}, {"description", d.describe()}};
}

std::unique_ptr<SpectralDensity> parse_density_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecParseError(std::string("density spec is not valid JSON: ") + e.what());
    }
    return density_from_json(j);
}

std::unique_ptr<SpectralDensity> load_density_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("cannot open density spec file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_density_spec(ss.str());
}

json coefficients_to_json(const SzegoPipeline& pipeline, double tol) {
    auto array = [](const std::vector<std::complex<double>>& v) {
        json out = json::array();
        for (auto z : v) out.push_back(complex_to_json(z));
        return out;
    };
    return json{{"u", array(pipeline.u.u)},
                {"a", array(pipeline.psi.coeffs)},
                {"c", array(pipeline.szego.coeffs)},
                {"N", pipeline.psi.order()},
                {"tol", tol}};
}

json block_to_json(const InverseBlock& block) {
    const int n = block.size();
    json entries = json::array();
    for (int k = 1; k <= n; ++k) {
        json row = json::array();
        for (int j = 1; j <= n; ++j) row.push_back(complex_to_json(block(k, j)));
        entries.push_back(std::move(row));
    }
    const BlockMeta& m = block.meta();
    json meta{{"method", m.method}, {"tol", m.tol}};
    if (m.truncation_order >= 0) meta["N"] = m.truncation_order;
    if (m.section_size) meta["m"] = *m.section_size;
    if (m.min_pivot) meta["cholesky_min_pivot"] = *m.min_pivot;
    return json{{"n", n}, {"entries", std::move(entries)}, {"meta", std::move(meta)}};
}

InverseBlock block_from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array())
        throw SpecParseError("block: expected an object with an array field \"entries\"");
    const auto& rows = j.at("entries");
    const int n = static_cast<int>(rows.size());
    if (j.contains("n") && j.at("n").get<int>() != n) throw DimensionMismatchError("block: \"n\" disagrees with entries");
    Eigen::MatrixXcd e(n, n);
    for (int k = 0; k < n; ++k) {
        if (!rows[k].is_array() || static_cast<int>(rows[k].size()) != n)
            throw DimensionMismatchError("block: entries must be a square array");
        for (int c = 0; c < n; ++c) e(k, c) = complex_from_json(rows[k][c]);
    }
    BlockMeta meta;
    if (j.contains("meta")) {
        const auto& m = j.at("meta");
        meta.method = m.value("method", std::string{});
        meta.tol = m.value("tol", 0.0);
        meta.truncation_order = m.value("N", -1);
        if (m.contains("m")) meta.section_size = m.at("m").get<int>();
        if (m.contains("cholesky_min_pivot")) meta.min_pivot = m.at("cholesky_min_pivot").get<double>();
    }
    return InverseBlock(std::move(e), std::move(meta));
}

std::string format_complex_csv(std::complex<double> z) {
    char buf[96];
    // "%+.17g" keeps an explicit sign on the imaginary part, e.g. 1+0j, 0.5-2e-08j.
    std::snprintf(buf, sizeof buf, "%.17g%+.17gj", z.real() + 0.0, z.imag() + 0.0);
    return buf;
}

void write_block_csv(std::ostream& out, const InverseBlock& block) {
    const BlockMeta& m = block.meta();
    out << "# method=" << m.method << " n=" << block.size();
    if (m.truncation_order >= 0) out << " N=" << m.truncation_order;
    if (m.section_size) out << " m=" << *m.section_size;
    out << " tol=" << format_g(m.tol, 17) << '\n';
    for (int k = 1; k <= block.size(); ++k) {
        for (int j = 1; j <= block.size(); ++j) out << (j > 1 ? "," : "") << format_complex_csv(block(k, j));
        out << '\n';
    }
}

void write_block_table(std::ostream& out, const InverseBlock& block) {
    const int n = block.size();
    std::vector<std::string> cells;
    std::size_t width = 0;
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j) {
            const auto z = block(k, j);
            std::string s = format_g(z.real() + 0.0, 6);
            if (z.imag() != 0.0) s += (z.imag() < 0 ? " - " : " + ") + format_g(std::abs(z.imag()), 6) + "i";
            width = std::max(width, s.size());
            cells.push_back(std::move(s));
        }
    out << block.meta().method << " block, n = " << n << '\n';
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) out << (j ? "  " : "") << std::setw(static_cast<int>(width)) << cells[k * n + j];
        out << '\n';
    }
}

json report_to_json(const OracleReport& r) {
    return json{{"m", r.m},
                {"n", r.n},
                {"max_abs_diff", r.max_abs_diff},
                {"frobenius_diff", r.frobenius_diff},
                {"cholesky_min_pivot", r.cholesky_min_pivot}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace szego::io
