#pragma once

#include "lrvan/partition.hpp"
#include "lrvan/polytope.hpp"
#include "lrvan/tableau.hpp"

#include <json.hpp>

#include <string>

namespace lrvan {

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

/// { "outer": [...], "inner": [...], "boxes": [[i,j,label],...],
///   "edges": [[i,j,[labels...]],...] }, edge row i meaning edge (i+1/2, j).
nlohmann::json to_json(const EdgeLabeledTableau& t);
EdgeLabeledTableau tableau_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConstraintSystem& sys);

/// One line per row: "TAG(i,k): +rB[1][2] -rE[2][1] <= 3"; equality rows use
/// "=".  A row with no variables prints "0" for its left hand side.
std::string dump_text(const ConstraintSystem& sys);

/// Pretty one-line-per-row rendering of a tableau for terminal output.
std::string render_text(const EdgeLabeledTableau& t);

}  // namespace lrvan
