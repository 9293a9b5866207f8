#include <gtest/gtest.h>

#include <random>

#include "frobcert/certify.hpp"
#include "frobcert/products.hpp"

using namespace frobcert;

namespace {

std::size_t brute_hilbert(const GradedHypersurface& h, int d) {
  std::size_t n = 0;
  for (int a = 0; a < h.m(); ++a) {
    for (int e = 0; e <= std::max(d, 0); ++e) {
      for (int g = 0; g <= std::max(d, 0); ++g) {
        if (a * h.weight_x() + e * h.weight_y() + g * h.weight_z() == d) ++n;
      }
    }
  }
  return n;
}

std::size_t brute_h2_symbols(const GradedHypersurface& h, int d) {
  std::size_t n = 0;
  for (int a = 0; a < h.m(); ++a) {
    for (int b = 1; b < 300; ++b) {
      for (int c = 1; c < 300; ++c) {
        if (h.symbol_degree({a, b, c}) == d) ++n;
      }
    }
  }
  return n;
}

CohomClass random_class(std::mt19937_64& rng, const GradedHypersurface& h, int degree) {
  const GradedPiece piece = basis_of_degree(h, degree);
  CohomClass eta(h.field());
  for (const auto& s : piece.basis) {
    const FieldElement c(h.field(), UniPoly(h.field().p, {static_cast<Residue>(rng() % h.field().p),
                                                          static_cast<Residue>(rng() % h.field().p)}));
    eta.add_term(s, c);
  }
  return eta;
}

}  // namespace

TEST(Veronese, PiecesAreParentMultiples) {
  const GradedHypersurface h = make_example(3);
  const VeroneseView v(h, 4);
  for (int t = -4; t <= 2; ++t) {
    EXPECT_EQ(veronese_piece(v, t).basis, basis_of_degree(h, 4 * t).basis);
    EXPECT_EQ(veronese_piece(v, t).degree, t);
  }
  EXPECT_THROW(VeroneseView(h, 0), DimensionMismatch);
}

TEST(Veronese, PositivePiecesVanishAboveAInvariant) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const GradedHypersurface h = make_example(p);
    const VeroneseView v(h, a_invariant(h) + 1);
    for (int t = 1; t <= 5; ++t) EXPECT_EQ(veronese_piece(v, t).dim(), 0u) << p << " " << t;
    EXPECT_GT(basis_of_degree(h, a_invariant(h)).dim(), 0u);
  }
}

TEST(Veronese, Standardness) {
  const GradedHypersurface h2 = make_example(2);
  EXPECT_EQ(weight_lcm(h2), 6);
  EXPECT_TRUE(veronese_standardness_check(VeroneseView(h2, 12)));
  EXPECT_FALSE(veronese_standardness_check(VeroneseView(h2, 7)));
  EXPECT_EQ(weight_lcm(make_example(5)), 36);
  const PolyRingH2 s{h2.field(), 1, 1};
  EXPECT_THROW(kunneth_piece_dims(VeroneseView(h2, 7), s, 3, -1), NonStandardGrading);
  EXPECT_THROW(segre_h2_frobenius(VeroneseView(h2, 8), s), NonStandardGrading);
}

TEST(Hilbert, MatchesBruteForce) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const GradedHypersurface h = make_example(p);
    for (int d = -3; d <= 60; ++d) EXPECT_EQ(hilbert_function(h, d), brute_hilbert(h, d)) << p << " " << d;
  }
  const PolyRingH2 s{{2, 0}, 1, 1};
  for (int d = 0; d < 10; ++d) EXPECT_EQ(polyring_hilbert_function(s, d), static_cast<std::size_t>(d + 1));
  EXPECT_EQ(polyring_hilbert_function(s, -1), 0u);
}

TEST(Kunneth, FactorsMatchEnumeration) {
  for (std::uint32_t p : {2u, 3u}) {
    const GradedHypersurface h = make_example(p);
    const int n = default_veronese_index(p, Pipeline::segre);
    const VeroneseView v(h, n);
    const PolyRingH2 s{h.field(), 1, 1};
    for (int t = -5; t <= 5; ++t) {
      const std::size_t s_h2 = t <= -2 ? static_cast<std::size_t>(-t - 1) : 0;
      EXPECT_EQ(kunneth_piece_dims(v, s, 3, t).dim, brute_h2_symbols(h, t * n) * s_h2);
      const std::size_t s_ring = t >= 0 ? static_cast<std::size_t>(t + 1) : 0;
      EXPECT_EQ(kunneth_piece_dims(v, s, 2, t).dim,
                brute_hilbert(h, t * n) * s_h2 + brute_h2_symbols(h, t * n) * s_ring);
    }
  }
}

TEST(Kunneth, H2IsTheDegreeZeroPiece) {
  const std::vector<std::pair<std::uint32_t, std::size_t>> expected{{2, 3}, {3, 2}, {5, 12}};
  for (const auto& [p, dim] : expected) {
    const GradedHypersurface h = make_example(p);
    const VeroneseView v(h, default_veronese_index(p, Pipeline::segre));
    const PolyRingH2 s{h.field(), 1, 1};
    std::size_t total = 0;
    for (int t = -5; t <= 5; ++t) total += kunneth_piece_dims(v, s, 2, t).dim;
    EXPECT_EQ(total, dim) << p;
    EXPECT_EQ(kunneth_piece_dims(v, s, 2, 0).dim, dim);
  }
}

TEST(Segre, H2MapIsDegreeZeroMap) {
  for (std::uint32_t p : {2u, 5u}) {
    const GradedHypersurface h = make_example(p);
    const VeroneseView v(h, default_veronese_index(p, Pipeline::segre));
    const PolyRingH2 s{h.field(), 1, 1};
    const PLinearMap phi = segre_h2_frobenius(v, s);
    EXPECT_EQ(phi.matrix(), frobenius_matrix_on_piece(h, 0).matrix());
    EXPECT_EQ(phi.src().size(), p == 2 ? 3u : 12u);
    EXPECT_TRUE(is_injective(phi));
    EXPECT_FALSE(semilinear_kernel(base_change_map(phi)).empty());
  }
}

TEST(Segre, H3PieceMatchesFactorwiseFrobenius) {
  const GradedHypersurface h = make_example(2);
  const VeroneseView v(h, 12);
  const PolyRingH2 s{h.field(), 1, 1};
  for (int t = -3; t <= -1; ++t) {
    const PLinearMap phi = segre_h3_frobenius_piece(v, s, t);
    const GradedPiece st = veronese_piece(v, t), ss = polyring_h2_piece(s, t);
    const GradedPiece dt = veronese_piece(v, 2 * t), ds = polyring_h2_piece(s, 2 * t);
    ASSERT_EQ(phi.src().size(), st.dim() * ss.dim());
    for (std::size_t i = 0; i < st.dim(); ++i) {
      for (std::size_t j = 0; j < ss.dim(); ++j) {
        const CohomClass left = frobenius_class(h, CohomClass::basis(h.field(), st.basis[i]));
        const CohomClass right = polyring_h2_frobenius(s, CohomClass::basis(h.field(), ss.basis[j]));
        Vector expected = zero_vector(h.field(), dt.dim() * ds.dim());
        for (const auto& [ls, lc] : left.terms()) {
          for (const auto& [rs, rc] : right.terms()) {
            expected[*dt.index_of(ls) * ds.dim() + *ds.index_of(rs)] += lc * rc;
          }
        }
        EXPECT_EQ(phi.matrix().column(i * ss.dim() + j), expected);
      }
    }
    EXPECT_TRUE(is_injective(phi));
  }
}

TEST(Enveloping, FrobeniusFactorizesOnRandomPairs) {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const GradedHypersurface h = make_example(p);
    for (int i = 0; i < 20; ++i) {
      const int d1 = -static_cast<int>(rng() % 6), d2 = -static_cast<int>(rng() % 6);
      const CohomClass a = random_class(rng, h, d1), b = random_class(rng, h, d2);
      EXPECT_EQ(enveloping_frobenius_on_class(h, tensor(a, b)),
                tensor(frobenius_class(h, a), frobenius_class(h, b)));
    }
  }
}

TEST(Enveloping, FootnoteClassesAreNilpotent) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const GradedHypersurface h = make_example(p);
    const TensorClass xi = footnote_class(h);
    EXPECT_FALSE(xi.is_zero()) << p;
    EXPECT_TRUE(enveloping_frobenius_on_class(h, xi).is_zero()) << p;
  }
}

TEST(Enveloping, FootnoteClassInTensorBasis) {
  // p = 2: x^2/(y z^4) (x) x^2/(y^2 z^2) + x^2/(y^2 z^2) (x) x^2/(y z^4)
  const GradedHypersurface h = make_example(2);
  const FieldDesc k = h.field();
  TensorClass expected(k);
  expected.add_term({{2, 1, 4}, {2, 2, 2}}, FieldElement::one(k));
  expected.add_term({{2, 2, 2}, {2, 1, 4}}, FieldElement::one(k));
  EXPECT_EQ(footnote_class(h), expected);

  // p = 3: x/(y^2 z) (x) x/(y z^3) - x/(y z^3) (x) x/(y^2 z)
  const GradedHypersurface h3 = make_example(3);
  const FieldDesc k3 = h3.field();
  TensorClass expected3(k3);
  expected3.add_term({{1, 2, 1}, {1, 1, 3}}, FieldElement::one(k3));
  expected3.add_term({{1, 1, 3}, {1, 2, 1}}, -FieldElement::one(k3));
  EXPECT_EQ(footnote_class(h3), expected3);
}

TEST(Enveloping, ReductionKillsCancelledDenominators) {
  const GradedHypersurface h = make_example(3);
  const FieldElement one = FieldElement::one(h.field());
  EXPECT_TRUE(reduce_enveloping(h, {{one, {0, 2, 0}, {0, 0, 0}}}, 2, 3, 1, 1).is_zero());
  EXPECT_TRUE(reduce_enveloping(h, {{one, {0, 0, 0}, {0, 0, 1}}}, 1, 1, 1, 1).is_zero());
  EXPECT_FALSE(reduce_enveloping(h, {{one, {0, 0, 0}, {0, 0, 0}}}, 1, 1, 1, 1).is_zero());
}
