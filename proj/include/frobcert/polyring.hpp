#ifndef FROBCERT_POLYRING_HPP
#define FROBCERT_POLYRING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobcert/fields.hpp"

namespace frobcert {

struct Variable {
  std::string name;
  int weight = 1;

  bool operator==(const Variable&) const = default;
};

/// Polynomial ring k[x_1..x_s] over K_e with positive integer weights.
class WeightedRing {
 public:
  WeightedRing(FieldDesc field, std::vector<Variable> vars);

  const FieldDesc& field() const noexcept { return field_; }
  const std::vector<Variable>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  int weight(std::size_t i) const { return vars_.at(i).weight; }
  std::size_t index_of(std::string_view name) const;

  bool operator==(const WeightedRing&) const = default;

 private:
  FieldDesc field_;
  std::vector<Variable> vars_;
};

using RingPtr = std::shared_ptr<const WeightedRing>;
using Exponents = std::vector<int>;

RingPtr make_ring(FieldDesc field, std::vector<Variable> vars);
/// Same variables over the next level of the tower.
RingPtr ring_up(const RingPtr& ring);

int weighted_degree(const Exponents& e, const WeightedRing& ring);

/// Sparse polynomial: exponent vector -> nonzero coefficient.
class MPoly {
 public:
  using Terms = std::map<Exponents, FieldElement>;

  explicit MPoly(RingPtr ring);

  static MPoly monomial(RingPtr ring, Exponents e, const FieldElement& coeff);
  static MPoly monomial(RingPtr ring, Exponents e);
  static MPoly constant(RingPtr ring, const FieldElement& c);
  static MPoly variable(RingPtr ring, std::string_view name);

  const RingPtr& ring() const noexcept { return ring_; }
  const FieldDesc& field() const noexcept { return ring_->field(); }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  FieldElement coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const FieldElement& c);
  /// Highest exponent of variable `var` (-1 for the zero polynomial).
  int degree_in(std::size_t var) const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly scaled(const FieldElement& c) const;
  MPoly pow(unsigned e) const;
  /// Multiplies by the monomial with exponent vector e.
  MPoly shifted(const Exponents& e) const;
  /// Coefficients pushed to the next level of the tower.
  MPoly base_changed(const RingPtr& up) const;

  bool operator==(const MPoly& o) const;

  std::string to_string() const;
  static MPoly parse(RingPtr ring, std::string_view text);

 private:
  void check_ring(const MPoly& o) const;

  RingPtr ring_;
  Terms terms_;
};

/// Common weighted degree of all terms; nullopt for mixed degrees or zero.
std::optional<int> is_homogeneous(const MPoly& f);

MPoly partial_derivative(const MPoly& f, std::size_t var);
std::vector<MPoly> jacobian(const MPoly& f);

/// Exponent vectors of weighted degree d, lexicographically ascending.
std::vector<Exponents> monomials_of_degree(const WeightedRing& ring, int d);

struct MembershipWitness {
  MPoly target;
  std::vector<MPoly> generators;
  std::vector<MPoly> cofactors;

  /// Re-expands sum cofactor_j * generator_j and compares with the target.
  bool verify() const;
};

/// Decides h in (gens) by an exact linear solve in degree deg(h).
std::optional<MembershipWitness> ideal_membership_homogeneous(
    const MPoly& h, const std::vector<MPoly>& gens);

struct PowerContainment {
  std::vector<int> exponents;
  std::vector<MembershipWitness> witnesses;
  int cap = 0;
  bool include_f = false;
};

int default_power_cap(const MPoly& f);

/// Least k_i with x_i^{k_i} in Jac(f) (or (f) + Jac(f)), searched per
/// variable up to `cap`.
PowerContainment jacobian_power_containment(const MPoly& f, bool include_f,
                                            std::optional<int> cap = std::nullopt);

}  // namespace frobcert

#endif  // FROBCERT_POLYRING_HPP
