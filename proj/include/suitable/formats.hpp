#pragma once

// On-disk formats.
//
// Text array:   "N v t" on the first line, then N lines of v symbols.
// Witness JSON: {"schema": 1, "n", "v", "t", "rows", "provenance", "certificate"}
// Packing JSON: {"l": int, "k": int, "blocks": [[int]]}
// Coloring JSON: {"n": int, "r": int, "m": int, "edges": [[u, v, [colors]]]}

#include "suitable/builders.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace suitable {

using Json = nlohmann::ordered_json;

inline constexpr int witness_schema_version = 1;

std::string array_to_text(const PermutationArray& array, int t);

struct TextArray {
    PermutationArray array;
    int t = 0;
};
TextArray array_from_text(std::istream& in);
TextArray array_from_text(const std::string& text);

Json packing_to_json(const BlockPacking& packing);
BlockPacking packing_from_json(const Json& j);

Json coloring_to_json(const EdgeMultiColoring& col);
EdgeMultiColoring coloring_from_json(const Json& j);

Json witness_triple_to_json(const ViolationWitness& w);
ViolationWitness witness_triple_from_json(const Json& j);

/// `include_timing` false drops elapsed_ms, leaving only reproducible fields.
Json verdict_to_json(const Verdict& verdict, bool include_timing = true);
Verdict verdict_from_json(const Json& j);

Json witness_to_json(const CoreWitness& witness, bool include_timing = true);
CoreWitness witness_from_json(const Json& j);

/// Reads a witness JSON file or a text array file (sniffed by the first
/// non-blank character). Text arrays get route "input" and an unknown
/// certificate.
CoreWitness read_witness_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace suitable
