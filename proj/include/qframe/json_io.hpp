#pragma once

#include <string>

#include "json.hpp"
#include "qframe/representations.hpp"

namespace qframe {

using Json = nlohmann::json;

// Keys sorted, floats as %.12e, two-space indent; arrays of scalars stay on one line.
std::string dump_canonical(const Json& j);
// Parse failures of any kind raise ErrorKind::parse_error.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json matrix_to_json(const Matrix& A);
Matrix matrix_from_json(const Json& j);

Json frame_to_json(int dim, const OutcomeSet& outcomes, const std::vector<Matrix>& ops);
Frame frame_from_json(const Json& j);
DualFrame dual_from_json(const Json& j);

Json distribution_to_json(const QuasiDistribution& mu);
QuasiDistribution distribution_from_json(const Json& j);

Json geometry_to_json(const PhaseSpaceGeometry& g);

// One row per outcome: the label split on ',' and ';' into columns, then the value.
std::string distribution_csv(const QuasiDistribution& mu);

}  // namespace qframe
