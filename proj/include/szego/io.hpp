#ifndef SZEGO_IO_HPP_
#define SZEGO_IO_HPP_

// Serialization: density specification files, coefficient dumps, inverse
// blocks (JSON / CSV / table) and oracle reports.  Complex numbers are always
// {"re": ..., "im": ...} in JSON and "re+imj" in CSV.

#include <complex>
#include <iosfwd>
#include <memory>
#include <string>

#include "json.hpp"

#include "szego/inverse_assembly.hpp"
#include "szego/oracle_validation.hpp"
#include "szego/spectral_density.hpp"
#include "szego/szego_transform.hpp"

namespace szego::io {

using nlohmann::json;

json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const json& j);

// {"kind":"fgn","H":0.75} or {"kind":"banded","q":[{"re":..,"im":..},...]}.
// A bare number inside "q" is accepted as a real coefficient.
// Throws SpecParseError on malformed input and DomainError when the
// described density is invalid.
std::unique_ptr<SpectralDensity> density_from_json(const json& j);
json density_to_json(const SpectralDensity& d);

// Parses the JSON text of a density specification.
std::unique_ptr<SpectralDensity> parse_density_spec(const std::string& text);
std::unique_ptr<SpectralDensity> load_density_spec_file(const std::string& path);

json coefficients_to_json(const SzegoPipeline& pipeline, double tol);

json block_to_json(const InverseBlock& block);
InverseBlock block_from_json(const json& j);

// "re+imj" (or "re-imj") with 17 significant digits.
std::string format_complex_csv(std::complex<double> z);

// CSV: one metadata comment line "# method=... n=... [N=...] tol=..." then one
// row per line.
void write_block_csv(std::ostream& out, const InverseBlock& block);

// Aligned, 6 significant digits, for humans.
void write_block_table(std::ostream& out, const InverseBlock& block);

json report_to_json(const OracleReport& report);

// Canonical JSON text: 2-space indentation plus trailing newline.
std::string dump(const json& j);

}  // namespace szego::io

#endif  // SZEGO_IO_HPP_
