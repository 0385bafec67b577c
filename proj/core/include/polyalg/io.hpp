#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyalg/polyclass.hpp"
#include "polyalg/spectra.hpp"
#include "polyalg/titsalgebra.hpp"

namespace polyalg {

// {"arrangement": "A|B|C", "d": int, "points": [["p/q", ...], ...]}.
// Coordinates may also be JSON integers. Parsing throws InvalidArgument on
// malformed text, wrong dimensions or non-deformations.
std::string polytope_to_json(const VPolytope& p, int indent = 2);
VPolytope polytope_from_json(std::string_view text);

// [{"face": "...", "coeff": "p/q"}, ...] in face order.
std::string tits_to_json(const TitsElement& w, int indent = 2);
TitsElement tits_from_json(const ArrangementPtr& arr, std::string_view text);
std::string cone_weights_to_json(const ConeWeights& w, int indent = 2);

// Rows {"flat", "r", "value", "method"} for every table, optionally for one
// flat only. Zero entries are included.
std::string eta_to_json(const std::vector<EtaTable>& tables, std::optional<int> flat = std::nullopt, int indent = 2);
// Header "flat,r,value,method"; flat strings are quoted.
std::string eta_to_csv(const std::vector<EtaTable>& tables, std::optional<int> flat = std::nullopt);

// {"generator": "p/q", ...} over all generators, plus "reconstructed".
std::string decomposition_to_json(const Decomposition& d, int indent = 2);

std::string read_text_file(const std::string& path);  // throws InvalidArgument

}  // namespace polyalg
