#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "h2c/bracket.hpp"
#include "h2c/constructions.hpp"

namespace h2c {

// On-disk algebra: field, basis, sparse structure triples, named elements
// (coordinate lists) and optional named linear maps (column lists). All
// scalars are strings in the exact-field grammar.
struct AlgebraFile {
  Algebra algebra;
  std::map<std::string, Element> elements;
  std::map<std::string, Mat> maps;

  AlgebraFile() : algebra(FieldSpec::rationals(), {"1"}) {}
  explicit AlgebraFile(Algebra a) : algebra(std::move(a)) {}

  const Element& named(const std::string& name) const;
};

struct BracketFile {
  GradedBracketAlgebra s;
};

nlohmann::json algebra_to_json(const AlgebraFile& f);
AlgebraFile algebra_from_json(const nlohmann::json& j);

nlohmann::json bracket_to_json(const BracketFile& f);
BracketFile bracket_from_json(const nlohmann::json& j);

// Canonical (sorted keys, 2-space indent, trailing newline) serialization;
// identical inputs produce identical bytes.
void write_algebra_file(const std::string& path, const AlgebraFile& f);
AlgebraFile read_algebra_file(const std::string& path);
void write_bracket_file(const std::string& path, const BracketFile& f);
BracketFile read_bracket_file(const std::string& path);

}  // namespace h2c
