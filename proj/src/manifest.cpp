#include "flatlie/manifest.hpp"

#include "json.hpp"

namespace flatlie {

using nlohmann::json;

namespace {

Rational parse_rational_field(const json& node, const std::string& field) {
  if (!node.is_string())
    throw ValidationError(field + ": rational must be a string");
  try {
    return Rational::parse(node.get<std::string>());
  } catch (const ParseError& e) {
    throw ValidationError(field + ": " + e.what());
  }
}

Index parse_index_field(const json& node, const std::string& field, Index dim) {
  if (!node.is_number_integer())
    throw ValidationError(field + ": index must be an integer");
  const auto v = node.get<std::int64_t>();
  if (v < 0 || v >= dim)
    throw ValidationError(field + ": index out of range");
  return static_cast<Index>(v);
}

SparseCombo parse_combo(const json& node, const std::string& field, Index dim) {
  if (!node.is_array())
    throw ValidationError(field + ": expected an array of [k, rational] pairs");
  SparseCombo combo;
  for (size_t t = 0; t < node.size(); ++t) {
    const std::string at = field + "[" + std::to_string(t) + "]";
    const json& pair = node[t];
    if (!pair.is_array() || pair.size() != 2)
      throw ValidationError(at + ": expected [k, rational]");
    Index k = parse_index_field(pair[0], at, dim);
    Rational c = parse_rational_field(pair[1], at);
    if (combo.count(k))
      throw ValidationError(at + ": duplicate coefficient index");
    if (!c.is_zero())
      combo[k] = c;
  }
  return combo;
}

SparseTable parse_table(const json& node, const std::string& field, Index dim,
                        bool require_lower) {
  if (!node.is_array())
    throw ValidationError(field + ": expected an array of entries");
  SparseTable table;
  for (size_t t = 0; t < node.size(); ++t) {
    const std::string at = field + "[" + std::to_string(t) + "]";
    const json& entry = node[t];
    if (!entry.is_array() || entry.size() != 3)
      throw ValidationError(at + ": expected [i, j, combo]");
    Index i = parse_index_field(entry[0], at, dim);
    Index j = parse_index_field(entry[1], at, dim);
    if (require_lower && i >= j)
      throw ValidationError(at + ": i<j required");
    if (table.count({i, j}))
      throw ValidationError(at + ": duplicate (i,j) entry");
    SparseCombo combo = parse_combo(entry[2], at, dim);
    if (!combo.empty())
      table[{i, j}] = std::move(combo);
  }
  return table;
}

Matrix parse_matrix(const json& node, const std::string& field, Index dim) {
  if (!node.is_array() || static_cast<Index>(node.size()) != dim)
    throw ValidationError(field + ": expected a " + std::to_string(dim) + "-row matrix");
  Matrix m(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    const json& row = node[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != dim)
      throw ValidationError(field + ": row " + std::to_string(r) + " has wrong length");
    for (Index c = 0; c < dim; ++c)
      m(r, c) = parse_rational_field(row[static_cast<size_t>(c)],
                                     field + "[" + std::to_string(r) + "][" +
                                         std::to_string(c) + "]");
  }
  return m;
}

json combo_json(const SparseCombo& combo) {
  json out = json::array();
  for (const auto& [k, c] : combo)
    out.push_back(json::array({k, c.str()}));
  return out;
}

json table_json(const SparseTable& table) {
  json out = json::array();
  for (const auto& [key, combo] : table)
    out.push_back(json::array({key.first, key.second, combo_json(combo)}));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c)
      row.push_back(m(r, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

} // namespace

Manifest parse_manifest(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto pos = msg.find("] "); msg.starts_with("[") && pos != std::string::npos)
      msg = msg.substr(pos + 2);
    throw ParseError(msg);
  }
  if (!doc.is_object())
    throw ValidationError("manifest: top level must be an object");
  Manifest m;
  if (!doc.contains("name") || !doc["name"].is_string())
    throw ValidationError("name: required string");
  m.name = doc["name"].get<std::string>();
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw ValidationError("dim: required integer");
  const auto dim = doc["dim"].get<std::int64_t>();
  if (dim < 0)
    throw ValidationError("dim: must be nonnegative");
  m.dim = static_cast<Index>(dim);
  if (!doc.contains("basis") || !doc["basis"].is_array())
    throw ValidationError("basis: required array");
  for (const json& b : doc["basis"]) {
    if (!b.is_string())
      throw ValidationError("basis: entries must be strings");
    m.basis.push_back(b.get<std::string>());
  }
  if (static_cast<Index>(m.basis.size()) != m.dim)
    throw ValidationError("basis: length must equal dim");
  if (doc.contains("brackets"))
    m.brackets = parse_table(doc["brackets"], "brackets", m.dim, true);
  if (doc.contains("forms")) {
    if (!doc["forms"].is_object())
      throw ValidationError("forms: expected an object");
    for (const auto& [fname, fval] : doc["forms"].items()) {
      Matrix g = parse_matrix(fval, "forms." + fname, m.dim);
      if (!is_symmetric(g))
        throw ValidationError("forms." + fname + ": not symmetric");
      m.forms[fname] = std::move(g);
    }
  }
  if (doc.contains("products")) {
    if (!doc["products"].is_object())
      throw ValidationError("products: expected an object");
    for (const auto& [pname, pval] : doc["products"].items())
      m.products[pname] = parse_table(pval, "products." + pname, m.dim, false);
  }
  for (const auto& key : doc.items())
    if (key.key() != "name" && key.key() != "dim" && key.key() != "basis" &&
        key.key() != "brackets" && key.key() != "forms" && key.key() != "products")
      throw ValidationError(key.key() + ": unknown manifest field");
  m.algebra(); // surfaces remaining structural problems (duplicate names, ...)
  return m;
}

std::string emit_manifest(const Manifest& m) {
  json doc;
  doc["name"] = m.name;
  doc["dim"] = m.dim;
  doc["basis"] = m.basis;
  doc["brackets"] = table_json(m.brackets);
  json forms = json::object();
  for (const auto& [fname, g] : m.forms)
    forms[fname] = matrix_json(g);
  doc["forms"] = std::move(forms);
  json products = json::object();
  for (const auto& [pname, table] : m.products)
    products[pname] = table_json(table);
  doc["products"] = std::move(products);
  return doc.dump(2) + "\n";
}

LieAlgebra Manifest::algebra() const {
  return LieAlgebra(name, dim, basis, brackets);
}

ScalarProduct Manifest::form(const std::string& form_name) const {
  const auto it = forms.find(form_name);
  if (it == forms.end())
    throw ValidationError("no form named '" + form_name + "'");
  return ScalarProduct(it->second);
}

Product Manifest::product(const std::string& product_name) const {
  const auto it = products.find(product_name);
  if (it == products.end())
    throw ValidationError("no product named '" + product_name + "'");
  return Product::from_table(algebra(), it->second);
}

Manifest Manifest::from_algebra(const LieAlgebra& a) {
  Manifest m;
  m.name = a.name();
  m.dim = a.dim();
  m.basis = a.basis();
  m.brackets = a.brackets();
  return m;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string digest_string(const std::string& bytes) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4)
    out += hex[(h >> shift) & 0xF];
  return out;
}

} // namespace flatlie
