#ifndef FROBCERT_COHOMOLOGY_HPP
#define FROBCERT_COHOMOLOGY_HPP

// Top local cohomology H^2_m(R) of a graded hypersurface R = k[x,y,z]/(f),
// f monic in x of x-degree m. R is free over k[y,z] on 1, x, ..., x^{m-1}, so
// the Cech complex on the parameters y, z gives the k-basis
//
//   [x^a / (y^b z^c)],   0 <= a < m,  b, c >= 1,
//
// of degree a*w_x - b*w_y - c*w_z. Any other fraction is reduced to this basis
// by rewriting x^m -> g = x^m - f and dropping monomials whose y- or z-power
// cancels the denominator (those come from the partial localizations).

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobcert/fields.hpp"
#include "frobcert/polyring.hpp"
#include "frobcert/semilinear.hpp"

namespace frobcert {

struct CechSymbol {
  int a = 0;
  int b = 1;
  int c = 1;

  auto operator<=>(const CechSymbol&) const = default;
};

/// "[x^a/(y^b*z^c)]" with the given variable names.
std::string symbol_text(const CechSymbol& s, const char* x = "x", const char* y = "y",
                        const char* z = "z");
CechSymbol parse_symbol_text(std::string_view text);

class GradedHypersurface {
 public:
  /// f must be homogeneous in a ring with variables ordered (x, y, z) and
  /// contain the monomial x^m with coefficient +1 or -1, no higher x-power.
  explicit GradedHypersurface(MPoly f);

  const RingPtr& ring() const noexcept { return f_.ring(); }
  const FieldDesc& field() const noexcept { return f_.field(); }
  const MPoly& f() const noexcept { return f_; }
  /// Rewrite target: x^m = g in R.
  const MPoly& g() const noexcept { return g_; }
  int m() const noexcept { return m_; }
  int degree() const noexcept { return degree_; }
  int weight_x() const { return ring()->weight(0); }
  int weight_y() const { return ring()->weight(1); }
  int weight_z() const { return ring()->weight(2); }
  int symbol_degree(const CechSymbol& s) const;

  /// R tensored with K_{e+1}.
  GradedHypersurface base_changed() const;

 private:
  MPoly f_;
  MPoly g_;
  int m_ = 0;
  int degree_ = 0;
};

/// K-linear combination of Cech basis symbols.
class CohomClass {
 public:
  using Terms = std::map<CechSymbol, FieldElement>;

  explicit CohomClass(FieldDesc field) : field_(field) {}
  static CohomClass basis(FieldDesc field, const CechSymbol& s);

  const FieldDesc& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  FieldElement coeff(const CechSymbol& s) const;

  void add_term(const CechSymbol& s, const FieldElement& c);
  CohomClass operator+(const CohomClass& o) const;
  CohomClass operator-(const CohomClass& o) const;
  CohomClass scaled(const FieldElement& c) const;

  bool operator==(const CohomClass& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
  }

 private:
  FieldDesc field_;
  Terms terms_;
};

/// Degree shared by all terms, or nullopt for zero / mixed classes.
std::optional<int> class_degree(const GradedHypersurface& h, const CohomClass& eta);

struct GradedPiece {
  int degree = 0;
  std::vector<CechSymbol> basis;

  std::size_t dim() const noexcept { return basis.size(); }
  std::optional<std::size_t> index_of(const CechSymbol& s) const;
  std::vector<std::string> labels(const char* x = "x", const char* y = "y",
                                  const char* z = "z") const;
  /// Coordinates of a class supported on this piece.
  Vector coordinates(const CohomClass& eta) const;
  CohomClass to_class(const Vector& v) const;
};

/// (m-1) w_x - w_y - w_z.
int a_invariant(const GradedHypersurface& h);

/// All symbols of degree d, ascending in a then b.
GradedPiece basis_of_degree(const GradedHypersurface& h, int d);

/// Class of numerator / (y^b z^c) in the Cech basis.
CohomClass reduce_to_cech(const GradedHypersurface& h, const MPoly& numerator, int b, int c);

/// x^k rewritten with x^m -> g until every x-exponent is below m.
MPoly reduce_x_power(const GradedHypersurface& h, int k);

/// Image of a single basis symbol under Frobenius: [x^{ap} / (y^{bp} z^{cp})].
CohomClass frobenius_symbol(const GradedHypersurface& h, const CechSymbol& s);
CohomClass frobenius_class(const GradedHypersurface& h, const CohomClass& eta);

/// Frobenius from piece d to piece p*d, columns in the basis order.
PLinearMap frobenius_matrix_on_piece(const GradedHypersurface& h, int d);

/// sum k_i w_i - 2 deg f.
int hara_rhs(const GradedHypersurface& h, const std::vector<int>& k_powers);
/// Least n0 >= 1 with p*n > hara_rhs for all n >= n0; Frobenius is injective
/// on every piece of degree <= -n0.
int hara_bound(const GradedHypersurface& h, const std::vector<int>& k_powers);

/// H^2_{(u,v)}(k[u,v]) with basis [1/(u^b v^c)], stored as symbols with a = 0.
struct PolyRingH2 {
  FieldDesc field;
  int weight_u = 1;
  int weight_v = 1;

  int symbol_degree(const CechSymbol& s) const { return -s.b * weight_u - s.c * weight_v; }
};

std::string polyring_h2_text(const CechSymbol& s);
GradedPiece polyring_h2_piece(const PolyRingH2& p, int d);
CohomClass polyring_h2_frobenius(const PolyRingH2& p, const CohomClass& eta);

}  // namespace frobcert

#endif  // FROBCERT_COHOMOLOGY_HPP
