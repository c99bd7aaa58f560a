#ifndef CVLAB_REPORT_JSON_HPP
#define CVLAB_REPORT_JSON_HPP

#include "cvlab/congruences.hpp"
#include "cvlab/distribution.hpp"
#include "cvlab/identities.hpp"
#include "cvlab/matrices.hpp"

#include <json.hpp>

#include <string>

namespace cvlab {

/// Version tag stamped on every top-level JSON document.
inline constexpr const char* kSchema = "cvlab/1";

/// Canonical serialization used everywhere: sorted keys, two-space indent,
/// trailing newline. parse() of the output followed by dump_json() is
/// byte-identical, which the CLI round-trip contract relies on. Exact values
/// are always strings, never native numbers.
std::string dump_json(const nlohmann::json& doc);

nlohmann::json to_json(const MultisetSpec& spec);
MultisetSpec multiset_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Pmf& pmf, std::int64_t m);

nlohmann::json to_json(const MomentReport& report);

nlohmann::json to_json(const IdentityReport& report);

nlohmann::json to_json(const ExactMatrix& matrix);
ExactMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MatrixIdentityReport& report);

nlohmann::json to_json(const ResidueClass& residue);

nlohmann::json to_json(const GlaisherReport& report);
nlohmann::json to_json(const Congruence18Report& report);
nlohmann::json to_json(const Congruence20Report& report);

/// {"p":16843,"residue":"1","modulus":"p^4","wolstenholme":true}
nlohmann::json to_json(const ScanRecord& record);
ScanRecord scan_record_from_json(const nlohmann::json& j);

}  // namespace cvlab

#endif
