#include <gtest/gtest.h>

#include "frobcert/certify.hpp"
#include "frobcert/serialize.hpp"

using namespace frobcert;

namespace {

// Text round trip through the dumped string, as a file would see it.
Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST(Json, VectorRoundTrip) {
  const FieldDesc k{3, 1};
  const Vector v{FieldElement::generator(k), FieldElement::zero(k), FieldElement::parse(k, "(s^2+1)/(s+2)")};
  EXPECT_EQ(vector_from_json(k, reparse(vector_to_json(v))), v);
  EXPECT_THROW(vector_from_json(k, Json{{"a", 1}}), ParseError);
}

TEST(Json, ClassRoundTrip) {
  const GradedHypersurface h = make_example(2);
  CohomClass eta(h.field());
  eta.add_term({1, 1, 1}, FieldElement::t(h.field()));
  eta.add_term({2, 2, 2}, FieldElement::one(h.field()));
  const Json j = class_to_json(h, eta);
  EXPECT_EQ(j.at("degree"), 0);
  EXPECT_EQ(class_from_json(h.field(), reparse(j)), eta);
  eta.add_term({0, 1, 1}, FieldElement::one(h.field()));
  EXPECT_TRUE(class_to_json(h, eta).at("degree").is_null());
  EXPECT_EQ(class_from_json(h.field(), reparse(class_to_json(h, eta))), eta);
}

TEST(Json, TensorRoundTrip) {
  const GradedHypersurface h = make_example(3);
  const TensorClass xi = footnote_class(h);
  const Json j = tensor_to_json(h, xi);
  EXPECT_EQ(j.at("bidegree"), (Json{0, 0}));
  EXPECT_EQ(tensor_from_json(h.field(), reparse(j)), xi);
}

TEST(Json, PieceRoundTrip) {
  const GradedPiece piece = basis_of_degree(make_example(5), -7);
  const GradedPiece back = piece_from_json(reparse(piece_to_json(piece)));
  EXPECT_EQ(back.degree, piece.degree);
  EXPECT_EQ(back.basis, piece.basis);
}

TEST(Json, MapRoundTrip) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const GradedHypersurface h = make_example(p);
    const PLinearMap phi = frobenius_matrix_on_piece(h, -2);
    EXPECT_EQ(map_from_json(reparse(map_to_json(phi))), phi);
    const PLinearMap up = base_change_map(frobenius_matrix_on_piece(h, 0));
    EXPECT_EQ(map_from_json(reparse(map_to_json(up))), up);
    const PLinearMap sq = iterate(frobenius_matrix_on_piece(h, 0), 2);
    EXPECT_EQ(map_from_json(reparse(map_to_json(sq))), sq);
  }
}

TEST(Json, MapRejectsInconsistentShape) {
  Json j = map_to_json(frobenius_matrix_on_piece(make_example(2), 0));
  j["matrix"].erase(0);
  EXPECT_THROW(map_from_json(j), ParseError);
  Json k = map_to_json(frobenius_matrix_on_piece(make_example(2), 0));
  k["exponent"] = 3;
  EXPECT_THROW(map_from_json(k), ParseError);
}

TEST(Json, WitnessRoundTrip) {
  const GradedHypersurface h = make_example(2);
  const PowerContainment c = jacobian_power_containment(h.f(), true);
  for (const auto& w : c.witnesses) {
    const MembershipWitness back = witness_from_json(h.ring(), reparse(witness_to_json(w)));
    EXPECT_EQ(back.target, w.target);
    EXPECT_EQ(back.generators, w.generators);
    EXPECT_EQ(back.cofactors, w.cofactors);
    EXPECT_TRUE(back.verify());
  }
}
