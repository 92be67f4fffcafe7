#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "arstat/algebra.hpp"
#include "arstat/bargmann.hpp"
#include "arstat/fock.hpp"
#include "arstat/measure.hpp"
#include "arstat/robertson.hpp"

namespace arstat {

using json = nlohmann::ordered_json;

/// Parses {"r", "s", "k", "epsilon", "energies", "n_max"} and validates it.
/// Missing energies default to 1; a missing "s" is taken from epsilon.
/// Throws ConfigError for type or schema problems.
RepSpec spec_from_json(const json& j);
json to_json(const RepSpec& spec);

json to_json(const ResidualReport& r);
json to_json(const CoherentState& cs);
json to_json(const MomentReport& m);
json to_json(const RobertsonReport& r);
json omega_to_json(const std::vector<cplx>& omega);
std::vector<cplx> omega_from_json(const json& j);

/// 17 significant digits: enough to round-trip a double.
std::string format_double(double v);

std::string verification_csv(const std::vector<ResidualReport>& reports);
std::string spectrum_csv(const Representation& rep);
json spectrum_json(const Representation& rep);
std::string moments_csv(const std::vector<MomentReport>& reports);
std::string basis_csv(const FockBasis& basis);

/// Writes to a sibling temporary file, then renames it over `path`.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace arstat
