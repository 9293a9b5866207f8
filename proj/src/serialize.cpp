#include "frobcert/serialize.hpp"

namespace frobcert {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Vector vector_from_json(FieldDesc field, const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  Vector v;
  for (const auto& x : j) v.push_back(FieldElement::parse(field, x.get<std::string>()));
  return v;
}

Json symbol_to_json(const CechSymbol& s) { return Json{{"a", s.a}, {"b", s.b}, {"c", s.c}}; }

CechSymbol symbol_from_json(const Json& j) {
  return {require(j, "a").get<int>(), require(j, "b").get<int>(), require(j, "c").get<int>()};
}

Json class_to_json(const GradedHypersurface& h, const CohomClass& eta) {
  Json out;
  const auto d = class_degree(h, eta);
  out["degree"] = d ? Json(*d) : Json(nullptr);
  Json terms = Json::array();
  for (const auto& [s, c] : eta.terms()) {
    Json t = symbol_to_json(s);
    t["coeff"] = c.to_string();
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

CohomClass class_from_json(FieldDesc field, const Json& j) {
  CohomClass eta(field);
  for (const auto& t : require(j, "terms")) {
    eta.add_term(symbol_from_json(t), FieldElement::parse(field, require(t, "coeff").get<std::string>()));
  }
  return eta;
}

Json tensor_to_json(const GradedHypersurface& h, const TensorClass& xi) {
  Json out;
  std::optional<std::pair<int, int>> bideg;
  bool mixed = false;
  Json terms = Json::array();
  for (const auto& [s, c] : xi.terms()) {
    const auto d = tensor_bidegree(h, s);
    if (bideg && *bideg != d) mixed = true;
    bideg = d;
    terms.push_back(Json{{"left", symbol_to_json(s.left)},
                         {"right", symbol_to_json(s.right)},
                         {"coeff", c.to_string()}});
  }
  out["bidegree"] = (bideg && !mixed) ? Json{bideg->first, bideg->second} : Json(nullptr);
  out["terms"] = std::move(terms);
  return out;
}

TensorClass tensor_from_json(FieldDesc field, const Json& j) {
  TensorClass xi(field);
  for (const auto& t : require(j, "terms")) {
    xi.add_term({symbol_from_json(require(t, "left")), symbol_from_json(require(t, "right"))},
                FieldElement::parse(field, require(t, "coeff").get<std::string>()));
  }
  return xi;
}

Json piece_to_json(const GradedPiece& piece) {
  return Json{{"degree", piece.degree}, {"basis", piece.labels()}};
}

GradedPiece piece_from_json(const Json& j) {
  GradedPiece piece{require(j, "degree").get<int>(), {}};
  for (const auto& l : require(j, "basis")) piece.basis.push_back(parse_symbol_text(l.get<std::string>()));
  return piece;
}

Json map_to_json(const PLinearMap& phi) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < phi.matrix().rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < phi.matrix().cols(); ++j) row.push_back(phi.matrix().at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"p", phi.field().p},
              {"level", phi.level()},
              {"exponent", phi.exponent()},
              {"frobenius_power", phi.frobenius_power()},
              {"src", phi.src()},
              {"dst", phi.dst()},
              {"matrix", std::move(rows)}};
}

PLinearMap map_from_json(const Json& j) {
  const FieldDesc field{require(j, "p").get<std::uint32_t>(), require(j, "level").get<unsigned>()};
  auto src = require(j, "src").get<std::vector<std::string>>();
  auto dst = require(j, "dst").get<std::vector<std::string>>();
  const auto& rows = require(j, "matrix");
  if (rows.size() != dst.size()) throw ParseError("matrix row count differs from dst");
  Matrix m(field, dst.size(), src.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != src.size()) throw ParseError("matrix row length differs from src");
    for (std::size_t c = 0; c < src.size(); ++c) {
      m.set(i, c, FieldElement::parse(field, rows[i][c].get<std::string>()));
    }
  }
  PLinearMap phi(std::move(src), std::move(dst), std::move(m),
                 require(j, "frobenius_power").get<unsigned>());
  if (phi.exponent() != require(j, "exponent").get<std::uint64_t>()) {
    throw ParseError("exponent does not match p^frobenius_power");
  }
  return phi;
}

Json witness_to_json(const MembershipWitness& w) {
  Json gens = Json::array();
  Json cofs = Json::array();
  for (const auto& g : w.generators) gens.push_back(g.to_string());
  for (const auto& c : w.cofactors) cofs.push_back(c.to_string());
  return Json{{"target", w.target.to_string()}, {"generators", gens}, {"cofactors", cofs}};
}

MembershipWitness witness_from_json(const RingPtr& ring, const Json& j) {
  MembershipWitness w{MPoly::parse(ring, require(j, "target").get<std::string>()), {}, {}};
  for (const auto& g : require(j, "generators")) w.generators.push_back(MPoly::parse(ring, g.get<std::string>()));
  for (const auto& c : require(j, "cofactors")) w.cofactors.push_back(MPoly::parse(ring, c.get<std::string>()));
  return w;
}

}  // namespace frobcert
