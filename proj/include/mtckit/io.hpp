#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mtckit/catalog.hpp"
#include "mtckit/classify.hpp"
#include "mtckit/modular.hpp"

namespace mtc::io {

// Insertion-ordered so identical inputs serialize byte for byte.
using json = nlohmann::ordered_json;

// {"conductor": N, "coeffs": [[num, den], ...]} with N entries, canonical on output.
json to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const json& j);  // ParseError

// Modular-data file content before any check runs.
struct ModularDataInput {
  LabelSet labels;
  std::vector<std::string> names;  // optional "names" under labels; generated when absent
  SMatrixTilde stilde;
  TwistVector twists;
  int s00_sign = 1;
  std::optional<std::vector<std::vector<std::vector<long>>>> fusion;  // cross-checked only
};
ModularDataInput modular_data_from_json(const json& j);  // ParseError
ModularDataInput read_modular_data(const std::string& path);

json to_json(const ModularSymbol& sym);
json to_json(const Report& r);
json fusion_table_json(const FusionRules& F);
// Modular data plus names, central charge, D, R and F blocks.
json to_json(const AnyonTheory& t, int bits = 128);
json to_json(const ClassificationResult& r);
json to_json(const CountResult& c);

// Quantum group categories of rank <= 12, inert metadata for `catalog list --extended`.
struct QuantumGroupRow {
  std::string family, rank, notes, ell;
};
const std::vector<QuantumGroupRow>& quantum_group_table();

}  // namespace mtc::io
