#include "arrcoh/lattice_io.hpp"

#include <fstream>

namespace arrcoh {

using nlohmann::json;

SubspaceArrangement arrangement_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("ambient_dim") || !doc.contains("subspaces"))
    throw ValidationError("arrangement JSON needs 'ambient_dim' and 'subspaces'");
  if (!doc["ambient_dim"].is_number_integer()) throw ValidationError("'ambient_dim' must be an integer");
  const int n = doc["ambient_dim"].get<int>();
  if (n <= 0) throw ValidationError("'ambient_dim' must be positive");
  if (!doc["subspaces"].is_array()) throw ValidationError("'subspaces' must be an array of matrices");
  std::vector<QMatrix> subs;
  for (const auto& mat : doc["subspaces"]) {
    if (!mat.is_array() || mat.empty()) throw ValidationError("each subspace must be a nonempty list of rows");
    QMatrix m(0, static_cast<std::size_t>(n));
    for (const auto& row : mat) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
        throw ValidationError("each subspace row must have ambient_dim entries");
      std::vector<Rational> dense;
      for (const auto& x : row) {
        if (x.is_string()) dense.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer()) dense.emplace_back(x.get<long>());
        else throw ValidationError("rational entries must be strings like \"p/q\" or integers");
      }
      m.append_row(QVector::from_dense(dense));
    }
    subs.push_back(std::move(m));
  }
  return SubspaceArrangement(n, subs);
}

LabeledLattice lattice_from_json(const json& doc) {
  if (doc.is_object() && doc.contains("ambient_dim")) return intersection_lattice(arrangement_from_json(doc));
  if (!doc.is_object() || !doc.contains("lattice") || !doc["lattice"].is_object())
    throw ValidationError("input JSON must hold an arrangement or a 'lattice' object");
  const auto& lat = doc["lattice"];
  if (!lat.contains("dims") || !lat["dims"].is_array()) throw ValidationError("'lattice.dims' must be an array");
  std::vector<int> dims;
  for (const auto& d : lat["dims"]) {
    if (!d.is_number_integer()) throw ValidationError("dimension labels must be integers");
    dims.push_back(d.get<int>());
  }
  std::vector<std::pair<Element, Element>> pairs;
  if (lat.contains("leq_pairs")) {
    for (const auto& p : lat["leq_pairs"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
        throw ValidationError("leq_pairs entries must be [i, j] integer pairs");
      pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
  }
  return LabeledLattice::from_pairs(std::move(dims), pairs);
}

LabeledLattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return lattice_from_json(doc);
}

json lattice_to_json(const LabeledLattice& l) {
  json pairs = json::array();
  for (auto [a, b] : l.covering_pairs()) pairs.push_back({a, b});
  json names = json::array();
  for (std::size_t i = 0; i < l.size(); ++i) names.push_back(l.element_name(static_cast<Element>(i)));
  return json{{"lattice", {{"dims", l.dims()}, {"leq_pairs", pairs}, {"names", names}}}};
}

}  // namespace arrcoh
