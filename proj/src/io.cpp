#include "dquot/io.hpp"

#include <fstream>
#include <sstream>

#include "dquot/error.hpp"

namespace dquot::io {

namespace {

const json& field_at(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::size_t read_count(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(what + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::string read_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + " must be a string");
  return j.get<std::string>();
}

std::vector<std::vector<std::string>> read_string_matrix(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of rows");
  std::vector<std::vector<std::string>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError(what + " must be an array of rows");
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(x.is_number_integer() ? std::to_string(x.get<long long>()) : read_string(x, what + " entry"));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Field parse_field(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.rfind("Fp:", 0) == 0) {
    try {
      std::size_t used = 0;
      unsigned long long p = std::stoull(text.substr(3), &used);
      if (used == text.size() - 3) return Field::prime(p);
    } catch (const std::logic_error&) {
    }
  }
  throw ParseError("unknown field '" + text + "' (expected Q or Fp:<prime>)");
}

Field parse_field(const json& j) {
  if (j.is_string()) return parse_field(j.get<std::string>());
  if (j.is_object() && j.contains("Fp") && j.at("Fp").is_number_integer()) return Field::prime(j.at("Fp").get<std::uint64_t>());
  throw ParseError("field must be \"Q\", \"Fp:<p>\" or {\"Fp\": p}");
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return json{{"Fp", f.characteristic()}};
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": malformed JSON: " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string scalar_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("coordinates must be integers or rational strings");
}

namespace {

json scalar_value(const Scalar& s) {
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return s.get_num().get_si();
  return to_string(s);
}

}  // namespace

FinDimAlgebra algebra_from_json(const json& j, std::optional<Field> field) {
  const std::string where = "algebra";
  Field f = field ? *field : (j.is_object() && j.contains("field") ? parse_field(j.at("field")) : Field::rationals());
  const json& basis = field_at(j, "basis", where);
  if (!basis.is_array()) throw ParseError("algebra: \"basis\" must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& l : basis) labels.push_back(read_string(l, "basis label"));
  const std::size_t d = labels.size();
  auto coords = [&](const json& v, const std::string& what) {
    if (!v.is_array() || v.size() != d) throw ParseError(what + " must have " + std::to_string(d) + " coordinates");
    Vec out;
    for (const auto& x : v) out.push_back(f.normalize(scalar_from_json(x)));
    return out;
  };
  Vec unit = coords(field_at(j, "unit", where), "unit");
  const json& mul = field_at(j, "mul", where);
  if (!mul.is_array() || mul.size() != d) throw ParseError("algebra: \"mul\" must be a " + std::to_string(d) + "x" + std::to_string(d) + " table");
  std::vector<std::vector<SparseVec>> table(d, std::vector<SparseVec>(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (!mul[i].is_array() || mul[i].size() != d) throw ParseError("algebra: \"mul\" row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < d; ++k)
      table[i][k] = to_sparse(coords(mul[i][k], "mul[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  }
  return FinDimAlgebra(f, std::move(labels), std::move(unit), std::move(table));
}

json algebra_to_json(const FinDimAlgebra& a) {
  json unit = json::array();
  for (const auto& x : a.unit()) unit.push_back(scalar_value(x));
  json mul = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) {
      json v = json::array();
      for (const auto& x : to_dense(a.product(i, k), a.dim())) v.push_back(scalar_value(x));
      row.push_back(std::move(v));
    }
    mul.push_back(std::move(row));
  }
  return json{{"field", field_to_json(a.field())}, {"basis", a.labels()}, {"unit", unit}, {"mul", mul}};
}

QuiverPresentation quiver_from_json(const json& j) {
  const std::string where = "quiver";
  const std::size_t n = read_count(field_at(j, "vertices", where), "\"vertices\"");
  const json& arrows = field_at(j, "arrows", where);
  if (!arrows.is_array()) throw ParseError("quiver: \"arrows\" must be an array");
  std::vector<Arrow> list;
  for (const auto& a : arrows) {
    std::string name = read_string(field_at(a, "name", "arrow"), "arrow name");
    std::size_t from = read_count(field_at(a, "from", "arrow " + name), "arrow source");
    std::size_t to = read_count(field_at(a, "to", "arrow " + name), "arrow target");
    if (from < 1 || to < 1 || from > n || to > n) throw InputError("arrow " + name + ": vertices are numbered 1.." + std::to_string(n));
    list.push_back({name, from - 1, to - 1});
  }
  std::vector<std::string> relations;
  if (j.contains("relations")) {
    if (!j.at("relations").is_array()) throw ParseError("quiver: \"relations\" must be an array of strings");
    for (const auto& r : j.at("relations")) relations.push_back(read_string(r, "relation"));
  }
  QuiverPresentation p{Quiver(n, std::move(list)), std::move(relations)};
  if (j.contains("degree_bound")) p.degree_bound = read_count(j.at("degree_bound"), "\"degree_bound\"");
  if (j.contains("field")) p.field = parse_field(j.at("field"));
  return p;
}

MFInput mf_from_json(const json& j, std::optional<Field> field) {
  const std::string where = "matrix factorization";
  Field f = field ? *field : (j.is_object() && j.contains("field") ? parse_field(j.at("field")) : Field::rationals());
  const json& vars = field_at(j, "variables", where);
  if (!vars.is_array() || vars.empty()) throw ParseError("\"variables\" must be a non-empty array of names");
  std::vector<std::string> names;
  for (const auto& v : vars) names.push_back(read_string(v, "variable name"));
  Potential sigma = Potential::parse(names, read_string(field_at(j, "sigma", where), "\"sigma\""), f);
  auto read_mf = [&](const json& o, const std::string& what) {
    auto mf = MatrixFactorization::parse(sigma, read_string_matrix(field_at(o, "phi", what), what + " phi"),
                                         read_string_matrix(field_at(o, "psi", what), what + " psi"));
    require_valid_mf(mf, sigma);
    return mf;
  };
  MFInput in{sigma, read_mf(j, where), std::nullopt};
  if (j.contains("target")) in.target = read_mf(j.at("target"), "target");
  return in;
}

json complex_to_json(const BarTruncation& bar) {
  json out = json::array();
  for (std::size_t n = 1; n <= bar.depth(); ++n) {
    const std::size_t rows = bar.dim(n - 1), cols = bar.dim(n);
    std::vector<std::vector<json>> m(rows, std::vector<json>(cols, 0));
    for (std::size_t c = 0; c < cols; ++c)
      for (auto& [r, x] : bar.differential(n)[c]) m[r][c] = scalar_value(x);
    out.push_back(json{{"degree", -static_cast<long>(n)}, {"matrix", m}});
  }
  return out;
}

}  // namespace dquot::io
