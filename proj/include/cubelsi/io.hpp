#ifndef CUBELSI_IO_HPP
#define CUBELSI_IO_HPP

// File formats.
//   function:  {"n", "d", "encoding": "inline", "values": [row-major]}
//           or {"n", "d", "encoding": "binary", "data": "<sidecar>"} with the
//              sidecar holding 2^n * d little-endian doubles, relative to the JSON file.
//   perm function: same with "n" the group degree and n! rows in Lehmer order.
//   relation:  {"n", "pairs": [[u, v], ...]} with u, v point indices.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "cubelsi/quotient.hpp"
#include "cubelsi/symgroup.hpp"

namespace cubelsi {

enum class Encoding { Inline, Binary };

void write_cube_function(const std::filesystem::path& path, const CubeFunction& f,
                         Encoding enc = Encoding::Inline);
CubeFunction read_cube_function(const std::filesystem::path& path);

void write_perm_function(const std::filesystem::path& path, const PermFunction& f,
                         Encoding enc = Encoding::Inline);
PermFunction read_perm_function(const std::filesystem::path& path);

void write_relation(const std::filesystem::path& path, int n, const std::vector<PointPair>& pairs);
EquivalenceRelation read_relation(const std::filesystem::path& path);

nlohmann::ordered_json params_to_json(const InequalityParams& params);

/// {id, params, lhs, rhs_unit, ratio, seed, witness_path}.
nlohmann::ordered_json report_to_json(const InequalityReport& rep, std::uint64_t seed,
                                      const std::string& witness_path = "");

std::string report_csv_header();
std::string report_csv_row(const InequalityReport& rep, std::uint64_t seed);

/// Shortest round-trip decimal form of x.
std::string format_double(double x);

}  // namespace cubelsi

#endif  // CUBELSI_IO_HPP
