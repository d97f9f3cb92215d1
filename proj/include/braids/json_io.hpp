#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braids/arrangement.hpp"
#include "braids/braid_engine.hpp"
#include "braids/braid_word.hpp"
#include "braids/path_model.hpp"

namespace braids {

// Path files: {"kind": "pl_path" | "pl_tube", "n", "times": ["p/q", ...],
// "strands": [[["re", "im"], ...] per strand], "radii": optional
// [["p/q", ...] per strand per segment]}. Throws ParseError.
std::unique_ptr<PathApproximation> parse_path(const nlohmann::json& j);

// Arrangements: {"n": int, "edges": [[i, j, "re" | "im"], ...]}.
Arrangement parse_arrangement(const nlohmann::json& j);
nlohmann::json arrangement_to_json(const Arrangement& g);

// Permutations are arrays of images; words are arrays of signed letters.
Permutation parse_permutation(const nlohmann::json& j);

nlohmann::json word_to_json(const BraidWord& w);
BraidWord parse_word(int n, const nlohmann::json& j);

nlohmann::json result_to_json(const BraidResult& r,
                              const std::optional<BraidWord>& closed_word);

// Serialization of a PLPath (used by tooling and tests).
nlohmann::json path_to_json(const PLPath& path);
nlohmann::json tube_to_json(const PLTube& tube);

}  // namespace braids
