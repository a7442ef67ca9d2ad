#include "h2c/io.hpp"

#include <fstream>
#include <set>

namespace h2c {

using nlohmann::json;

namespace {

json field_to_json(const FieldSpec& f) {
  json j;
  switch (f.kind) {
    case FieldKind::rational: j["kind"] = "rational"; break;
    case FieldKind::gaussian_rational: j["kind"] = "gaussian_rational"; break;
    case FieldKind::prime:
      j["kind"] = "prime";
      j["p"] = f.p;
      break;
  }
  return j;
}

std::size_t index_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw Error(Errc::parse_error, std::string(what) + " must be a nonnegative integer");
  return static_cast<std::size_t>(j.get<long long>());
}

FieldSpec field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw Error(Errc::parse_error, "field: expected {kind: ...}");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rationals();
  if (kind == "gaussian_rational") return FieldSpec::gaussian_rationals();
  if (kind == "prime") {
    if (!j.contains("p"))
      throw Error(Errc::parse_error, "prime field needs p");
    try {
      return FieldSpec::prime(index_from_json(j.at("p"), "p"));
    } catch (const Error& e) {
      throw Error(Errc::parse_error, e.what());
    }
  }
  throw Error(Errc::parse_error, "unknown field kind: " + kind);
}

Scalar scalar_from_json(const json& j, const FieldSpec& f) {
  if (!j.is_string()) throw Error(Errc::parse_error, "scalar must be a string");
  return Scalar::parse(j.get<std::string>(), f);
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

Vec vec_from_json(const json& j, std::size_t dim, const FieldSpec& f) {
  if (!j.is_array() || j.size() != dim)
    throw Error(Errc::parse_error,
                "coordinate list of length " + std::to_string(dim) + " expected");
  Vec v;
  v.reserve(dim);
  for (const auto& e : j) v.push_back(scalar_from_json(e, f));
  return v;
}

// sparse (i, j, [(k, coeff)]) triples, ascending, nonzero terms only
json table_to_json(const ProductTable& t) {
  json out = json::array();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      json terms = json::array();
      for (std::size_t k = 0; k < t[i][j].size(); ++k)
        if (!t[i][j][k].is_zero()) terms.push_back(json::array({k, t[i][j][k].str()}));
      if (!terms.empty()) out.push_back({{"i", i}, {"j", j}, {"terms", std::move(terms)}});
    }
  return out;
}

ProductTable table_from_json(const json& j, std::size_t rows, std::size_t cols,
                             std::size_t target, const FieldSpec& f, const char* name) {
  if (!j.is_array()) throw Error(Errc::parse_error, std::string(name) + ": array expected");
  ProductTable t = make_table(rows, cols, target, f);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
        !entry.contains("terms"))
      throw Error(Errc::parse_error, std::string(name) + ": entry needs i, j, terms");
    std::size_t i = index_from_json(entry.at("i"), "i");
    std::size_t jj = index_from_json(entry.at("j"), "j");
    if (i >= rows || jj >= cols)
      throw Error(Errc::parse_error, std::string(name) + ": index out of range");
    if (!seen.insert({i, jj}).second)
      throw Error(Errc::parse_error, std::string(name) + ": duplicate (i,j) entry");
    for (const auto& term : entry.at("terms")) {
      if (!term.is_array() || term.size() != 2)
        throw Error(Errc::parse_error, std::string(name) + ": term must be [k, coeff]");
      std::size_t k = index_from_json(term.at(0), "k");
      if (k >= target) throw Error(Errc::parse_error, std::string(name) + ": k out of range");
      Scalar c = scalar_from_json(term.at(1), f);
      if (c.is_zero())
        throw Error(Errc::parse_error, std::string(name) + ": zero coefficient stored");
      if (!t[i][jj][k].is_zero())
        throw Error(Errc::parse_error, std::string(name) + ": duplicate k in terms");
      t[i][jj][k] = c;
    }
  }
  return t;
}

json mat_to_json(const Mat& m) {
  json cols = json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(vec_to_json(m.col(j)));
  return cols;
}

Mat mat_from_json(const json& j, std::size_t rows, std::size_t cols, const FieldSpec& f) {
  if (!j.is_array() || j.size() != cols)
    throw Error(Errc::parse_error, "map: column list of length " + std::to_string(cols) +
                                       " expected");
  Mat m(rows, cols, f);
  for (std::size_t c = 0; c < cols; ++c) m.set_col(c, vec_from_json(j.at(c), rows, f));
  return m;
}

json canonical(const json& j) { return j; }

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::parse_error, "cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
  return j;
}

}  // namespace

const Element& AlgebraFile::named(const std::string& name) const {
  auto it = elements.find(name);
  if (it == elements.end())
    throw Error(Errc::parse_error, "file has no element named '" + name + "'");
  return it->second;
}

json algebra_to_json(const AlgebraFile& f) {
  const Algebra& a = f.algebra;
  json j;
  j["field"] = field_to_json(a.field());
  j["dim"] = a.dim();
  j["basis"] = a.basis_names();
  json structure = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t jj = 0; jj < a.dim(); ++jj) {
      const auto& terms = a.product_terms(i, jj);
      if (terms.empty()) continue;
      json jterms = json::array();
      for (const auto& [k, c] : terms) jterms.push_back(json::array({k, c.str()}));
      structure.push_back({{"i", i}, {"j", jj}, {"terms", std::move(jterms)}});
    }
  j["structure"] = std::move(structure);
  json elements = json::object();
  if (a.unit()) elements["unit"] = vec_to_json(*a.unit());
  for (const auto& [name, v] : f.elements) elements[name] = vec_to_json(v);
  if (!elements.empty()) j["elements"] = std::move(elements);
  if (!f.maps.empty()) {
    json maps = json::object();
    for (const auto& [name, m] : f.maps) maps[name] = mat_to_json(m);
    j["maps"] = std::move(maps);
  }
  return canonical(j);
}

AlgebraFile algebra_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::parse_error, "algebra file: object expected");
  for (const char* key : {"field", "dim", "basis", "structure"})
    if (!j.contains(key))
      throw Error(Errc::parse_error, std::string("algebra file: missing '") + key + "'");
  FieldSpec field = field_from_json(j.at("field"));
  std::size_t dim = index_from_json(j.at("dim"), "dim");
  if (dim == 0) throw Error(Errc::parse_error, "dim must be a positive integer");
  if (!j.at("basis").is_array() || j.at("basis").size() != dim)
    throw Error(Errc::parse_error, "basis must list dim names");
  std::vector<std::string> names;
  for (const auto& n : j.at("basis")) {
    if (!n.is_string()) throw Error(Errc::parse_error, "basis names must be strings");
    names.push_back(n.get<std::string>());
  }

  Algebra a(field, names);
  ProductTable t = table_from_json(j.at("structure"), dim, dim, dim, field, "structure");
  try {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t jj = 0; jj < dim; ++jj)
        for (std::size_t k = 0; k < dim; ++k)
          if (!t[i][jj][k].is_zero()) a.add_term(i, jj, k, t[i][jj][k]);
  } catch (const Error& e) {
    throw Error(Errc::parse_error, std::string("structure: ") + e.what());
  }

  AlgebraFile out(std::move(a));
  if (j.contains("elements")) {
    const json& elements = j.at("elements");
    if (!elements.is_object()) throw Error(Errc::parse_error, "elements must be an object");
    for (auto it = elements.begin(); it != elements.end(); ++it) {
      Element v = vec_from_json(it.value(), dim, field);
      if (it.key() == "unit") {
        try {
          out.algebra.declare_unit(v);
        } catch (const Error& e) {
          throw Error(Errc::parse_error, std::string("unit: ") + e.what());
        }
      } else {
        out.elements[it.key()] = std::move(v);
      }
    }
  }
  if (j.contains("maps")) {
    const json& maps = j.at("maps");
    if (!maps.is_object()) throw Error(Errc::parse_error, "maps must be an object");
    for (auto it = maps.begin(); it != maps.end(); ++it)
      out.maps.emplace(it.key(), mat_from_json(it.value(), dim, dim, field));
  }
  return out;
}

json bracket_to_json(const BracketFile& f) {
  const GradedBracketAlgebra& s = f.s;
  json j;
  j["field"] = field_to_json(s.field);
  j["s0_dim"] = s.s0_dim;
  j["s1_dim"] = s.s1_dim;
  j["convention"] = convention_name(s.convention);
  j["unit"] = vec_to_json(s.unit);
  j["p00"] = table_to_json(s.p00);
  j["p01"] = table_to_json(s.p01);
  j["p11"] = table_to_json(s.p11);
  j["b00"] = table_to_json(s.b00);
  j["b01"] = table_to_json(s.b01);
  if (s.b11) j["b11"] = table_to_json(*s.b11);
  return canonical(j);
}

BracketFile bracket_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::parse_error, "bracket file: object expected");
  for (const char* key : {"field", "s0_dim", "s1_dim", "convention", "unit", "p00", "p01", "p11",
                          "b00", "b01"})
    if (!j.contains(key))
      throw Error(Errc::parse_error, std::string("bracket file: missing '") + key + "'");
  GradedBracketAlgebra s;
  s.field = field_from_json(j.at("field"));
  s.s0_dim = index_from_json(j.at("s0_dim"), "s0_dim");
  s.s1_dim = index_from_json(j.at("s1_dim"), "s1_dim");
  try {
    s.convention = convention_from_name(j.at("convention").get<std::string>());
  } catch (const Error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  s.unit = vec_from_json(j.at("unit"), s.s0_dim, s.field);
  s.p00 = table_from_json(j.at("p00"), s.s0_dim, s.s0_dim, s.s0_dim, s.field, "p00");
  s.p01 = table_from_json(j.at("p01"), s.s0_dim, s.s1_dim, s.s1_dim, s.field, "p01");
  s.p11 = table_from_json(j.at("p11"), s.s1_dim, s.s1_dim, s.s0_dim, s.field, "p11");
  s.b00 = table_from_json(j.at("b00"), s.s0_dim, s.s0_dim, s.s1_dim, s.field, "b00");
  s.b01 = table_from_json(j.at("b01"), s.s0_dim, s.s1_dim, s.s0_dim, s.field, "b01");
  if (j.contains("b11"))
    s.b11 = table_from_json(j.at("b11"), s.s1_dim, s.s1_dim, s.s1_dim, s.field, "b11");
  try {
    validate_shape(s);
  } catch (const Error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  return {std::move(s)};
}

void write_algebra_file(const std::string& path, const AlgebraFile& f) {
  write_json(path, algebra_to_json(f));
}

AlgebraFile read_algebra_file(const std::string& path) {
  return algebra_from_json(read_json(path));
}

void write_bracket_file(const std::string& path, const BracketFile& f) {
  write_json(path, bracket_to_json(f));
}

BracketFile read_bracket_file(const std::string& path) {
  return bracket_from_json(read_json(path));
}

}  // namespace h2c
