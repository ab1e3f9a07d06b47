#pragma once

// File formats shared by the CLI and external tooling. JSON schemas live in
// schemas/; the text formats (submodules, subspace families) are documented
// in the README.

#include <json.hpp>
#include <string>

#include "entrocone/cone.hpp"
#include "entrocone/differential.hpp"
#include "entrocone/distributions.hpp"
#include "entrocone/morphisms.hpp"
#include "entrocone/phase_space.hpp"
#include "entrocone/quantum.hpp"
#include "entrocone/rank_vectors.hpp"

namespace entrocone {

using json = nlohmann::json;

json entropy_vector_to_json(const EntropyVector& v);
EntropyVector entropy_vector_from_json(const json& j);

json functional_to_json(const Functional& f);
Functional functional_from_json(const json& j);

json distribution_to_json(const JointDistribution& p);
JointDistribution distribution_from_json(const json& j);

json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const json& j);

json cone_to_json(const PolyCone& c);
PolyCone cone_from_json(const json& j);

json differential_report_to_json(const DifferentialReport& rep);

// text formats
Submodule submodule_from_text(const std::string& text);         // "d n" header + generator rows
std::string submodule_to_text(const Submodule& M);
SubspaceFamily family_from_text(const std::string& text);       // "p m n" header + per-subspace blocks

std::string read_file(const std::string& path);   // throws with diagnostics
json parse_json_file(const std::string& path);    // reports byte offset on failure

}  // namespace entrocone
