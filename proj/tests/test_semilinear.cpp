#include <gtest/gtest.h>

#include <random>

#include "frobcert/semilinear.hpp"

using namespace frobcert;

namespace {

FieldElement el(FieldDesc k, const char* text) { return FieldElement::parse(k, text); }

std::vector<std::string> names(const char* stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

PLinearMap endo(FieldDesc k, const std::vector<Vector>& rows) {
  return PLinearMap(names("e", rows.size()), names("e", rows.size()),
                    Matrix::from_rows(k, rows.size(), rows));
}

FieldElement random_element(std::mt19937_64& rng, FieldDesc k) {
  std::vector<Residue> num(1 + rng() % 4), den(1 + rng() % 3);
  for (auto& x : num) x = static_cast<Residue>(rng() % k.p);
  for (auto& x : den) x = static_cast<Residue>(rng() % k.p);
  UniPoly d(k.p, den);
  if (d.is_zero()) d = UniPoly::constant(k.p, 1);
  return FieldElement(k, UniPoly(k.p, num), d);
}

Vector random_vector(std::mt19937_64& rng, FieldDesc k, std::size_t n) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_element(rng, k));
  return v;
}

PLinearMap random_endo(std::mt19937_64& rng, FieldDesc k, std::size_t n) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(random_vector(rng, k, n));
  return endo(k, rows);
}

}  // namespace

TEST(PLinearMap, ApplyIsSemilinear) {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FieldDesc k{p, 0};
    const PLinearMap phi = random_endo(rng, k, 3);
    const Vector v = random_vector(rng, k, 3), w = random_vector(rng, k, 3);
    const FieldElement c = random_element(rng, k);
    Vector sum, cv;
    for (std::size_t i = 0; i < 3; ++i) {
      sum.push_back(v[i] + w[i]);
      cv.push_back(c * v[i]);
    }
    Vector expect_sum, expect_cv;
    const Vector fv = phi.apply(v), fw = phi.apply(w);
    for (std::size_t i = 0; i < 3; ++i) {
      expect_sum.push_back(fv[i] + fw[i]);
      expect_cv.push_back(c.pow(p) * fv[i]);
    }
    EXPECT_EQ(phi.apply(sum), expect_sum);
    EXPECT_EQ(phi.apply(cv), expect_cv);
  }
}

// v1^2 + t v2^2 = 0 has no nonzero solution in F_2(t) because t is not a
// square, but (t^{1/2}, 1) solves it over F_2(t^{1/2}).
TEST(Kernel, SquareRootOfTAppearsAfterBaseChange) {
  const FieldDesc k{2, 0};
  const PLinearMap phi({"a", "b"}, {"f"}, Matrix::from_rows(k, 2, {{el(k, "1"), el(k, "t")}}));
  EXPECT_TRUE(is_injective(phi));
  EXPECT_TRUE(semilinear_kernel(phi).empty());
  const PLinearMap up = base_change_map(phi);
  EXPECT_EQ(up.level(), 1u);
  const auto kernel = semilinear_kernel(up);
  ASSERT_EQ(kernel.size(), 1u);
  const FieldElement s = FieldElement::generator({2, 1});
  const Vector expected{s, FieldElement::one({2, 1})};
  // Kernel lines are K-subspaces, so compare after scaling the last entry to 1.
  Vector scaled;
  for (const auto& x : kernel[0]) scaled.push_back(x / kernel[0][1]);
  EXPECT_EQ(scaled, expected);
}

TEST(Kernel, LinearDependenceOverPthPowers) {
  // Over F_3(t): F(a e0 + b e1) = (a^3 + t^3 b^3) f = (a + t b)^3 f, kernel (-t, 1).
  const FieldDesc k{3, 0};
  const PLinearMap phi({"a", "b"}, {"f"}, Matrix::from_rows(k, 2, {{el(k, "1"), el(k, "t^3")}}));
  const auto kernel = semilinear_kernel(phi);
  ASSERT_EQ(kernel.size(), 1u);
  EXPECT_EQ(kernel[0][0] / kernel[0][1], -FieldElement::t(k));
}

TEST(Kernel, VectorsReverifyOnRandomMaps) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const FieldDesc k{i % 2 ? 2u : 3u, static_cast<unsigned>(i % 3 == 0)};
    const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 4;
    Matrix m(k, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng() % 3) m.set(r, c, rng() % 2 ? FieldElement::from_int(k, rng() % 2) : random_element(rng, k));
      }
    }
    const PLinearMap phi(names("e", cols), names("f", rows), m);
    const auto kernel = semilinear_kernel(phi);
    for (const auto& v : kernel) EXPECT_TRUE(is_zero_vector(phi.apply(v)));
    EXPECT_EQ(rank(expanded_matrix(phi)) + kernel.size(), cols);
    EXPECT_EQ(is_injective(phi), kernel.empty());
  }
}

TEST(Compose, MatchesSequentialApplication) {
  std::mt19937_64 rng(13);
  for (std::uint32_t p : {2u, 3u}) {
    const FieldDesc k{p, 0};
    const PLinearMap phi = random_endo(rng, k, 2), psi = random_endo(rng, k, 2);
    const Vector v = random_vector(rng, k, 2);
    const PLinearMap both = compose(phi, psi);
    EXPECT_EQ(both.frobenius_power(), 2u);
    EXPECT_EQ(both.apply(v), phi.apply(psi.apply(v)));
    EXPECT_EQ(iterate(phi, 2), compose(phi, phi));
    EXPECT_EQ(iterate(phi, 0).apply(v), v);
  }
}

TEST(BaseChange, CommutesWithApply) {
  std::mt19937_64 rng(21);
  const FieldDesc k{3, 0};
  const PLinearMap phi = random_endo(rng, k, 3);
  const Vector v = random_vector(rng, k, 3);
  Vector up_v, up_image;
  for (const auto& x : v) up_v.push_back(embed_up(x));
  for (const auto& x : phi.apply(v)) up_image.push_back(embed_up(x));
  EXPECT_EQ(base_change_map(phi).apply(up_v), up_image);
}

TEST(StableSubspace, SwapWithTail) {
  // F(e0) = e1, F(e1) = e0, F(e2) = t e0 over F_2(t).
  const FieldDesc k{2, 0};
  const FieldElement o = FieldElement::one(k), z = FieldElement::zero(k), t = FieldElement::t(k);
  const PLinearMap phi = endo(k, {{z, o, t}, {o, z, z}, {z, z, z}});
  const std::vector<Vector> v{{o, z, z}, {z, o, z}};
  const auto w = stable_subspace_witness(phi, v);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->verify(phi));
  EXPECT_EQ(w->eta, (Vector{z, z, o}));
  EXPECT_EQ(w->image, (Vector{t, z, z}));
  EXPECT_THROW(stable_subspace_witness(phi, {{o, z, z}}), NotStable);
  EXPECT_FALSE(stable_subspace_witness(endo(k, {{o, z}, {z, o}}), {}));
}

TEST(StableSubspace, TamperedWitnessIsRejected) {
  const FieldDesc k{2, 0};
  const FieldElement o = FieldElement::one(k), z = FieldElement::zero(k), t = FieldElement::t(k);
  const PLinearMap phi = endo(k, {{z, o, t}, {o, z, z}, {z, z, z}});
  AntiNilpotenceWitness w{{{o, z, z}, {z, o, z}}, {z, z, o}, {t, z, z}};
  EXPECT_TRUE(w.verify(phi));
  w.eta = {o, z, z};
  EXPECT_FALSE(w.verify(phi));
}

TEST(InSpan, Basics) {
  const FieldDesc k{5, 0};
  const FieldElement o = FieldElement::one(k), z = FieldElement::zero(k), t = FieldElement::t(k);
  EXPECT_TRUE(in_span({{o, t}}, {t, t * t}));
  EXPECT_FALSE(in_span({{o, t}}, {o, o}));
  EXPECT_TRUE(in_span({}, {z, z}));
  EXPECT_FALSE(in_span({}, {o, z}));
}
