#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "arrcoh/lattice.hpp"

namespace arrcoh {

/// Accepts either {"ambient_dim": n, "subspaces": [[["p/q", ...], ...], ...]}
/// or {"lattice": {"dims": [...], "leq_pairs": [[i, j], ...]}}.
LabeledLattice lattice_from_json(const nlohmann::json& doc);
SubspaceArrangement arrangement_from_json(const nlohmann::json& doc);
LabeledLattice read_lattice_file(const std::string& path);

/// {"lattice": {"dims": [...], "leq_pairs": covering pairs, "names": [...]}}
nlohmann::json lattice_to_json(const LabeledLattice& l);

/// oneline, boolean:N, braid:N, kequal:N:K[:ELL]
LabeledLattice builtin_lattice(std::string_view name);

}  // namespace arrcoh
