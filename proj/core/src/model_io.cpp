#include "catstat/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "catstat/error.hpp"

namespace catstat {
namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& what) { raise(ErrorKind::Schema, what); }

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema(where + " must be an object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema(where + " is missing \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) schema(where + " must be an integer");
  return v.get<std::int64_t>();
}

Complex as_complex(const json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  schema(where + " must be a number or an [re, im] pair");
}

Eigen::MatrixXcd as_matrix(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) schema(where + " must be a nonempty array of rows");
  const auto rows = v.size();
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(rows));
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = v[i];
    if (!row.is_array() || row.size() != rows) {
      schema(where + " must be square (" + std::to_string(rows) + "x" + std::to_string(rows) + ")");
    }
    for (std::size_t j = 0; j < rows; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          as_complex(row[j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  return m;
}

GroupSpec as_group(const json& v, const std::string& where) {
  const auto& orders = member(v, "orders", where);
  if (!orders.is_array()) schema(where + ".orders must be an array");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < orders.size(); ++i) out.push_back(as_int(orders[i], where + ".orders"));
  return GroupSpec(std::move(out));
}

GroupElement as_element(const json& v, const GroupSpec& g, const std::string& where) {
  if (!v.is_array()) schema(where + " must be an array of residues");
  if (v.size() != g.rank()) {
    schema(where + " has " + std::to_string(v.size()) + " residues, group " + g.to_string() + " needs " +
           std::to_string(g.rank()));
  }
  std::vector<std::int64_t> r;
  for (const auto& x : v) r.push_back(as_int(x, where));
  return {g, std::move(r)};
}

PhaseMatrix as_phases(const json& v, const std::string& where) {
  if (!v.is_array()) schema(where + " must be an array of rows");
  PhaseMatrix q;
  for (const auto& row : v) {
    if (!row.is_array()) schema(where + " rows must be arrays");
    std::vector<RationalPhase> r;
    for (const auto& e : row) {
      if (e.is_string()) r.push_back(RationalPhase::parse(e.get<std::string>()));
      else if (e.is_number_integer()) r.emplace_back(e.get<std::int64_t>(), 1);
      else schema(where + " entries must be \"p/q\" strings");
    }
    q.push_back(std::move(r));
  }
  return q;
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    schema(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

ModelFile parse_model(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) schema("model document must be a JSON object");

  const auto group = as_group(member(doc, "group", "model"), "group");
  const auto& bich = member(doc, "bicharacter", "model");
  Bicharacter eps = Bicharacter(group, as_phases(member(bich, "Q", "bicharacter"), "bicharacter.Q"));

  const auto& gens = member(doc, "generators", "model");
  const auto& grades_json = member(gens, "grades", "generators");
  if (!grades_json.is_array() || grades_json.empty()) schema("generators.grades must be a nonempty array");
  std::vector<GroupElement> grades;
  for (std::size_t i = 0; i < grades_json.size(); ++i) {
    grades.push_back(as_element(grades_json[i], group, "generators.grades[" + std::to_string(i) + "]"));
  }
  auto pairing = as_matrix(member(gens, "pairing", "generators"), "generators.pairing");

  const auto& braid_json = member(doc, "braid", "model");
  const auto& kind = member(braid_json, "kind", "braid");
  BraidSpec braid = BraidSpec::grade_diagonal();
  if (kind == "matrix") {
    braid = BraidSpec::matrix(as_matrix(member(braid_json, "R", "braid"), "braid.R"));
  } else if (kind != "grade-diagonal") {
    schema("braid.kind must be \"grade-diagonal\" or \"matrix\"");
  }

  CrossSpec cross = CrossSpec::derived();
  if (const auto it = doc.find("cross"); it != doc.end()) {
    const auto& ck = member(*it, "kind", "cross");
    if (ck == "matrix") cross = CrossSpec::matrix(as_matrix(member(*it, "T", "cross"), "cross.T"));
    else if (ck != "derived") schema("cross.kind must be \"derived\" or \"matrix\"");
  }

  ModelOptions options;
  ExpansionSign sign = ExpansionSign::Plus;
  if (const auto it = doc.find("options"); it != doc.end()) {
    if (!it->is_object()) schema("options must be an object");
    if (const auto t = it->find("tolerance"); t != it->end()) {
      if (!t->is_number() || t->get<double>() < 0) schema("options.tolerance must be a non-negative number");
      options.tolerance = t->get<double>();
    }
    if (const auto n = it->find("n_max"); n != it->end()) {
      if (!n->is_number_unsigned()) schema("options.n_max must be a non-negative integer");
      options.n_max = n->get<std::size_t>();
    }
    if (const auto s = it->find("expansion_sign"); s != it->end()) {
      if (*s == "+") sign = ExpansionSign::Plus;
      else if (*s == "-") sign = ExpansionSign::Minus;
      else schema("options.expansion_sign must be \"+\" or \"-\"");
    }
  }

  return {ParticleModel(std::move(eps), std::move(grades), std::move(pairing), std::move(braid), std::move(cross), sign),
          options};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) schema("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModelFile load_model(const std::filesystem::path& path) { return parse_model(read_text_file(path)); }

std::string model_to_json(const ParticleModel& model, const ModelOptions& options) {
  json doc;
  doc["group"]["orders"] = model.group().orders();
  json q = json::array();
  for (const auto& row : model.bicharacter().matrix()) {
    json r = json::array();
    for (const auto& p : row) r.push_back(p.to_string());
    q.push_back(std::move(r));
  }
  doc["bicharacter"]["Q"] = std::move(q);
  json grades = json::array();
  for (const auto& g : model.grades()) grades.push_back(g.residues());
  doc["generators"]["grades"] = std::move(grades);
  doc["generators"]["pairing"] = matrix_json(model.pairing_matrix());
  if (model.is_grade_diagonal()) {
    doc["braid"]["kind"] = "grade-diagonal";
  } else {
    doc["braid"]["kind"] = "matrix";
    doc["braid"]["R"] = matrix_json(model.braid().r());
  }
  if (model.cross().kind() == CrossSpec::Kind::Derived) {
    doc["cross"]["kind"] = "derived";
  } else {
    doc["cross"]["kind"] = "matrix";
    doc["cross"]["T"] = matrix_json(model.cross().t());
  }
  doc["options"]["tolerance"] = options.tolerance;
  doc["options"]["n_max"] = options.n_max;
  doc["options"]["expansion_sign"] = model.expansion_sign() == ExpansionSign::Plus ? "+" : "-";
  return doc.dump(2);
}

GroupHom parse_hom(std::string_view json_text, const GroupSpec& source) {
  const json doc = parse_json(json_text);
  const auto target = as_group(member(doc, "target", "homomorphism"), "target");
  const auto& images_json = member(doc, "images", "homomorphism");
  if (!images_json.is_array()) schema("images must be an array");
  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < images_json.size(); ++i) {
    images.push_back(as_element(images_json[i], target, "images[" + std::to_string(i) + "]"));
  }
  return GroupHom(source, target, std::move(images));
}

Bicharacter parse_bicharacter(std::string_view json_text, const GroupSpec& group) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) schema("bicharacter document must be a JSON object");
  if (const auto it = doc.find("group"); it != doc.end()) {
    const auto declared = as_group(*it, "group");
    if (!(declared == group)) {
      schema("bicharacter declared on " + declared.to_string() + ", expected " + group.to_string());
    }
  }
  const json* holder = &doc;
  if (const auto it = doc.find("bicharacter"); it != doc.end()) holder = &*it;
  return Bicharacter(group, as_phases(member(*holder, "Q", "bicharacter"), "bicharacter.Q"));
}

}  // namespace catstat
