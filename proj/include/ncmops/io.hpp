#pragma once

#include <string>

#include <json.hpp>

#include "ncmops/fock.hpp"
#include "ncmops/mops.hpp"
#include "ncmops/state.hpp"

namespace ncmops {

// Insertion-ordered JSON so emitted documents list words in degree-first
// order and identical inputs produce byte-identical output.
using Json = nlohmann::ordered_json;

// { "d": int, "max_degree": int, "moments": { "<word>": "p/q", ... } }.
// The loader accepts a table that omits a word when its reversal is present
// and fills the gap from the reversal; any other missing word is an error,
// as is a word longer than max_degree.
Json moment_table_to_json(const MomentTable& table);
MomentTable moment_table_from_json(const Json& j);

// { "d": int, "degree": int, "polynomials": { "<word>": { "<word>": "p/q" } },
//   "norm_sq": { "<word>": "p/q" } }.
Json family_to_json(const MonicFamily& family);
MonicFamily family_from_json(const Json& j);

// { "d": int, "depth": int, "C": { "<word>": "p/q" },
//   "B": { "<i>|<w>|<u>": "p/q" } }.
Json coefficients_to_json(const RecursionCoefficients& coeffs);
RecursionCoefficients coefficients_from_json(const Json& j);

// { "d": int, "depth": int, "C": { "<word>": "p/q" },
//   "T": { "<i>": { "<k>": [["p/q", ...], ...] } } }, matrices listing rows
// in the lexicographic basis order of each level. Structural validation
// only; semantic checks belong to validate_fock_data.
Json fock_data_to_json(const FockData& data);
FockData fock_data_from_json(const Json& j);

Json load_json_file(const std::string& path);                       // ParseError on bad file
void write_text_file(const std::string& path, const std::string&);  // Error on failure

}  // namespace ncmops
