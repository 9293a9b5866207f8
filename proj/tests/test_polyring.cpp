#include <gtest/gtest.h>

#include "frobcert/certify.hpp"
#include "frobcert/polyring.hpp"

using namespace frobcert;

namespace {

RingPtr xyz(std::uint32_t p, std::vector<int> w) {
  return make_ring({p, 0}, {{"x", w[0]}, {"y", w[1]}, {"z", w[2]}});
}

std::size_t brute_monomial_count(const WeightedRing& r, int d) {
  std::size_t n = 0;
  for (int a = 0; a <= d; ++a) {
    for (int b = 0; b <= d; ++b) {
      for (int c = 0; c <= d; ++c) {
        if (a * r.weight(0) + b * r.weight(1) + c * r.weight(2) == d) ++n;
      }
    }
  }
  return n;
}

}  // namespace

TEST(MPoly, ParsePrintRoundTrip) {
  const auto ring = xyz(2, {3, 2, 1});
  const MPoly f = MPoly::parse(ring, "x^3+(t)*y*z^7+y^2*z^5+y^3*z^3+y^4*z+z^9");
  EXPECT_EQ(f.size(), 6u);
  EXPECT_EQ(MPoly::parse(ring, f.to_string()), f);
  EXPECT_EQ(f.coeff({0, 1, 7}), FieldElement::t({2, 0}));
  EXPECT_THROW(MPoly::parse(ring, "x^"), ParseError);
  EXPECT_THROW(MPoly::parse(ring, "q*x"), ParseError);
}

TEST(MPoly, ArithmeticIdentities) {
  const auto ring = xyz(3, {1, 1, 1});
  const MPoly a = MPoly::parse(ring, "x+y");
  const MPoly b = MPoly::parse(ring, "x-y");
  EXPECT_EQ(a * b, MPoly::parse(ring, "x^2-y^2"));
  // Freshman's dream in characteristic 3.
  EXPECT_EQ(a.pow(3), MPoly::parse(ring, "x^3+y^3"));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.shifted({0, 0, 2}), MPoly::parse(ring, "x*z^2+y*z^2"));
}

TEST(MPoly, Homogeneity) {
  EXPECT_EQ(is_homogeneous(make_example(2).f()), 9);
  EXPECT_EQ(is_homogeneous(make_example(3).f()), 10);
  EXPECT_EQ(is_homogeneous(make_example(5).f()), 36);
  const auto ring = xyz(2, {3, 2, 1});
  EXPECT_FALSE(is_homogeneous(MPoly::parse(ring, "x+y")));
  EXPECT_FALSE(is_homogeneous(MPoly(ring)));
}

TEST(MPoly, PartialDerivatives) {
  const auto ring = xyz(2, {3, 2, 1});
  const MPoly f = make_example(2).f();
  EXPECT_EQ(partial_derivative(f, 0), MPoly::parse(ring, "x^2"));
  EXPECT_EQ(partial_derivative(f, 1), MPoly::parse(ring, "(t)*z^7+y^2*z^3"));
  EXPECT_EQ(partial_derivative(f, 2), MPoly::parse(ring, "(t)*y*z^6+y^2*z^4+y^3*z^2+y^4+z^8"));
}

TEST(Monomials, CountMatchesBruteForce) {
  for (const auto& w : std::vector<std::vector<int>>{{3, 2, 1}, {5, 2, 1}, {9, 4, 1}, {1, 1, 1}}) {
    const auto ring = xyz(5, w);
    for (int d = 0; d <= 25; ++d) {
      const auto list = monomials_of_degree(*ring, d);
      EXPECT_EQ(list.size(), brute_monomial_count(*ring, d));
      for (std::size_t i = 1; i < list.size(); ++i) EXPECT_LT(list[i - 1], list[i]);
      for (const auto& e : list) EXPECT_EQ(weighted_degree(e, *ring), d);
    }
  }
}

TEST(Membership, PlantedCombinationIsFound) {
  const auto ring = xyz(5, {1, 1, 1});
  const std::vector<MPoly> gens{MPoly::parse(ring, "x^2-y*z"), MPoly::parse(ring, "y^2+(t)*x*z")};
  const MPoly h = MPoly::parse(ring, "(t+1)*x") * gens[0] + MPoly::parse(ring, "z-y") * gens[1];
  const auto w = ideal_membership_homogeneous(h, gens);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->verify());
  EXPECT_EQ(w->target, h);
  EXPECT_FALSE(ideal_membership_homogeneous(MPoly::parse(ring, "z^3"), gens));
  EXPECT_THROW(ideal_membership_homogeneous(MPoly::parse(ring, "x+z^2"), gens), NonHomogeneousInput);
}

TEST(Membership, TamperedWitnessFails) {
  const auto ring = xyz(3, {1, 1, 1});
  const std::vector<MPoly> gens{MPoly::parse(ring, "x"), MPoly::parse(ring, "y")};
  auto w = ideal_membership_homogeneous(MPoly::parse(ring, "x*z+y^2"), gens);
  ASSERT_TRUE(w);
  w->cofactors[0] = w->cofactors[0] + MPoly::parse(ring, "y");
  EXPECT_FALSE(w->verify());
}

TEST(Jacobian, PowerContainmentExponents) {
  const PowerContainment c2 = jacobian_power_containment(make_example(2).f(), false);
  EXPECT_EQ(c2.exponents, (std::vector<int>{2, 7, 11}));
  for (const auto& w : c2.witnesses) EXPECT_TRUE(w.verify());
  for (int p : {3, 5, 7}) {
    const PowerContainment c = jacobian_power_containment(make_example(p).f(), false);
    EXPECT_EQ(c.exponents, (std::vector<int>{p - 2, 3 * p - 2, 2 * p * p - 3 * p})) << p;
    for (const auto& w : c.witnesses) EXPECT_TRUE(w.verify());
  }
}

TEST(Jacobian, CapIsEnforced) {
  EXPECT_THROW(jacobian_power_containment(make_example(2).f(), false, 5), CapExceeded);
}
