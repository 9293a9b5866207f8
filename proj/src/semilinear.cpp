#include "frobcert/semilinear.hpp"

namespace frobcert {

PLinearMap::PLinearMap(std::vector<std::string> src, std::vector<std::string> dst,
                       Matrix matrix, unsigned frobenius_power)
    : src_(std::move(src)), dst_(std::move(dst)), matrix_(std::move(matrix)),
      power_(frobenius_power) {
  if (matrix_.rows() != dst_.size() || matrix_.cols() != src_.size()) {
    throw DimensionMismatch("matrix is " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + " but bases have sizes " +
                            std::to_string(dst_.size()) + " and " + std::to_string(src_.size()));
  }
}

std::uint64_t PLinearMap::exponent() const noexcept {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < power_; ++i) q *= field().p;
  return q;
}

Vector PLinearMap::apply(const Vector& v) const {
  if (v.size() != src_.size()) throw DimensionMismatch("vector length differs from source");
  Vector twisted = v;
  for (unsigned i = 0; i < power_; ++i) twisted = frobenius_vector(twisted);
  return matrix_ * twisted;
}

Matrix expanded_matrix(const PLinearMap& phi) {
  const std::uint64_t q = phi.exponent();
  const Matrix& m = phi.matrix();
  Matrix out(m.desc(), m.rows() * q, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [j, entry] : m.row(i)) {
      if (entry.is_constant()) {
        out.set(i * q, j, entry);  // constants are q-th powers of themselves
        continue;
      }
      const auto parts = q_component_split(entry, q);
      for (std::size_t a = 0; a < parts.size(); ++a) out.set(i * q + a, j, parts[a]);
    }
  }
  return out;
}

std::vector<Vector> semilinear_kernel(const PLinearMap& phi) {
  return kernel_basis(expanded_matrix(phi));
}

bool is_injective(const PLinearMap& phi) {
  return rank(expanded_matrix(phi)) == phi.src().size();
}

PLinearMap compose(const PLinearMap& phi, const PLinearMap& psi) {
  if (psi.dst() != phi.src()) throw DimensionMismatch("compose: psi target is not phi source");
  if (!(phi.field() == psi.field())) throw FieldMismatch("compose across fields");
  Matrix twisted = psi.matrix();
  for (unsigned i = 0; i < phi.frobenius_power(); ++i) twisted = twisted.frobenius_twist();
  return PLinearMap(psi.src(), phi.dst(), phi.matrix() * twisted,
                    phi.frobenius_power() + psi.frobenius_power());
}

PLinearMap iterate(const PLinearMap& phi, unsigned e) {
  if (phi.src() != phi.dst()) throw DimensionMismatch("iterate needs an endomorphism");
  PLinearMap result(phi.src(), phi.dst(), Matrix::identity(phi.field(), phi.src().size()), 0);
  for (unsigned i = 0; i < e; ++i) result = compose(phi, result);
  return result;
}

PLinearMap base_change_map(const PLinearMap& phi) {
  return PLinearMap(phi.src(), phi.dst(), phi.matrix().embedded_up(), phi.frobenius_power());
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty() || v.empty()) return is_zero_vector(v);
  const FieldDesc desc = v.front().desc();
  return solve(Matrix::from_columns(desc, v.size(), basis), v).has_value();
}

bool AntiNilpotenceWitness::verify(const PLinearMap& phi) const {
  for (const auto& v : subspace) {
    if (!in_span(subspace, phi.apply(v))) return false;
  }
  const Vector recomputed = phi.apply(eta);
  return recomputed == image && !in_span(subspace, eta) && in_span(subspace, recomputed);
}

std::optional<AntiNilpotenceWitness> stable_subspace_witness(const PLinearMap& phi,
                                                             const std::vector<Vector>& subspace) {
  if (phi.src().size() != phi.dst().size()) {
    throw DimensionMismatch("stable subspace search needs an endomorphism");
  }
  const std::size_t d = phi.src().size();
  for (const auto& v : subspace) {
    if (v.size() != d) throw DimensionMismatch("subspace vector length");
    if (!in_span(subspace, phi.apply(v))) throw NotStable("F(V) is not contained in V");
  }

  // Rows of `proj` span the annihilator of V, so proj * w = 0 iff w in V.
  const Matrix vmat = subspace.empty() ? Matrix(phi.field(), d, 0)
                                       : Matrix::from_columns(phi.field(), d, subspace);
  const auto annihilator = kernel_basis(vmat.transposed());
  if (annihilator.empty()) return std::nullopt;
  const Matrix proj = Matrix::from_rows(phi.field(), d, annihilator);

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < annihilator.size(); ++i) labels.push_back("q" + std::to_string(i));
  const PLinearMap projected(phi.src(), labels, proj * phi.matrix(), phi.frobenius_power());

  for (auto& c : semilinear_kernel(projected)) {
    if (in_span(subspace, c)) continue;
    AntiNilpotenceWitness w{subspace, c, phi.apply(c)};
    return w;
  }
  return std::nullopt;
}

}  // namespace frobcert
