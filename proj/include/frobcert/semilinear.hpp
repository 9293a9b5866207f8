#ifndef FROBCERT_SEMILINEAR_HPP
#define FROBCERT_SEMILINEAR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobcert/fields.hpp"

namespace frobcert {

/// A p^e-semilinear map v -> M * v^{(p^e)} between labelled bases, where
/// v^{(q)} raises every coordinate to the q-th power. This is exactly
/// F(sum c_i e_i) = sum c_i^q F(e_i) with the columns of M holding F(e_i).
class PLinearMap {
 public:
  PLinearMap(std::vector<std::string> src, std::vector<std::string> dst, Matrix matrix,
             unsigned frobenius_power = 1);

  const FieldDesc& field() const noexcept { return matrix_.desc(); }
  unsigned level() const noexcept { return matrix_.desc().level; }
  const std::vector<std::string>& src() const noexcept { return src_; }
  const std::vector<std::string>& dst() const noexcept { return dst_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  /// e with the map being p^e-semilinear.
  unsigned frobenius_power() const noexcept { return power_; }
  /// p^e.
  std::uint64_t exponent() const noexcept;

  Vector apply(const Vector& v) const;

  bool operator==(const PLinearMap& o) const {
    return src_ == o.src_ && dst_ == o.dst_ && power_ == o.power_ && matrix_ == o.matrix_;
  }

 private:
  std::vector<std::string> src_;
  std::vector<std::string> dst_;
  Matrix matrix_;
  unsigned power_;
};

/// Splits every entry over the basis {1, s, ..., s^{q-1}} of K over K^q:
/// row i*q + a holds the a-th coordinate of row i. Kernel of this linear
/// matrix equals the kernel of the semilinear map.
Matrix expanded_matrix(const PLinearMap& phi);

std::vector<Vector> semilinear_kernel(const PLinearMap& phi);
bool is_injective(const PLinearMap& phi);

/// phi o psi, with matrix M_phi * M_psi^{(p^{e_phi})}.
PLinearMap compose(const PLinearMap& phi, const PLinearMap& psi);
/// phi^e; e = 0 gives the identity.
PLinearMap iterate(const PLinearMap& phi, unsigned e);
/// The same map after the scalar extension K_e -> K_{e+1}.
PLinearMap base_change_map(const PLinearMap& phi);

bool in_span(const std::vector<Vector>& basis, const Vector& v);

/// Witness that the Frobenius action on Q = H / V is not injective: V is
/// F-stable, eta is outside V, and F(eta) is inside V.
struct AntiNilpotenceWitness {
  std::vector<Vector> subspace;
  Vector eta;
  Vector image;

  /// Recomputes the three defining facts from phi.
  bool verify(const PLinearMap& phi) const;
};

/// Searches the preimage of span(V) for a vector outside span(V). Returns the
/// first such kernel basis vector, or nothing when the preimage is span(V).
/// Throws NotStable when F(V) is not contained in span(V).
std::optional<AntiNilpotenceWitness> stable_subspace_witness(const PLinearMap& phi,
                                                             const std::vector<Vector>& subspace);

}  // namespace frobcert

#endif  // FROBCERT_SEMILINEAR_HPP
