#ifndef FROBCERT_PRODUCTS_HPP
#define FROBCERT_PRODUCTS_HPP

// Veronese subrings, Segre products with k[u,v], and the enveloping algebra
// R (x) R', all handled through their local cohomology bases:
//
//   [H^i(R^(n))]_t          = [H^i(R)]_{tn}
//   H^4(R (x) R')           = span [x^a1 u^a2 / (y^b1 z^c1 v^b2 w^c2)]
//   H^l(T # S)              = T#H^l(S) + H^l(T)#S + sum_{i+j=l+1} H^i(T)#H^j(S)
//
// No ring beyond R itself is ever built; every computation reduces to the
// Cech reduction on one factor at a time.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frobcert/cohomology.hpp"

namespace frobcert {

struct VeroneseView {
  VeroneseView(GradedHypersurface parent, int n);

  GradedHypersurface parent;
  int n;
};

GradedPiece veronese_piece(const VeroneseView& v, int t);
/// True iff n is divisible by the lcm of the parent weights.
bool veronese_standardness_check(const VeroneseView& v);
int weight_lcm(const GradedHypersurface& h);

/// dim_k R_d for R = k[x,y,z]/(f), using the basis x^a y^e z^h, a < m.
std::size_t hilbert_function(const GradedHypersurface& h, int d);
/// dim_k S_d for S = k[u,v].
std::size_t polyring_hilbert_function(const PolyRingH2& s, int d);

struct TensorSymbol {
  CechSymbol left;
  CechSymbol right;

  auto operator<=>(const TensorSymbol&) const = default;
};

/// "[x^a1*u^a2/(y^b1*z^c1*v^b2*w^c2)]".
std::string tensor_symbol_text(const TensorSymbol& s);

class TensorClass {
 public:
  using Terms = std::map<TensorSymbol, FieldElement>;

  explicit TensorClass(FieldDesc field) : field_(field) {}

  const FieldDesc& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const TensorSymbol& s, const FieldElement& c);
  TensorClass operator+(const TensorClass& o) const;
  TensorClass operator-(const TensorClass& o) const;
  TensorClass scaled(const FieldElement& c) const;

  bool operator==(const TensorClass& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
  }

 private:
  FieldDesc field_;
  Terms terms_;
};

/// eta (x) eta'.
TensorClass tensor(const CohomClass& left, const CohomClass& right);

/// (deg left, deg right).
std::pair<int, int> tensor_bidegree(const GradedHypersurface& h, const TensorSymbol& s);

/// One numerator monomial coeff * (x,y,z)^left * (u,v,w)^right.
struct SplitMonomial {
  FieldElement coeff;
  Exponents left;
  Exponents right;
};

/// Class of [sum_i numerator_i / (y^b1 z^c1 v^b2 w^c2)] in the tensor basis,
/// reducing each factor independently.
TensorClass reduce_enveloping(const GradedHypersurface& h,
                              const std::vector<SplitMonomial>& numerator, int b1, int c1,
                              int b2, int c2);

TensorClass enveloping_frobenius_on_class(const GradedHypersurface& h, const TensorClass& xi);

struct KunnethSummand {
  std::string name;
  std::size_t dim = 0;
};

struct KunnethReport {
  int ell = 0;
  int t = 0;
  std::size_t dim = 0;
  std::vector<KunnethSummand> summands;
};

/// dim [H^l(T # S)]_t for T = R^(n) standard graded and S = k[u,v].
KunnethReport kunneth_piece_dims(const VeroneseView& t, const PolyRingH2& s, int ell, int deg);

/// Frobenius on H^2(T # S) = [H^2(T)]_0 (x) S_0 = [H^2(R)]_0.
PLinearMap segre_h2_frobenius(const VeroneseView& t, const PolyRingH2& s);

/// Frobenius on [H^3(T # S)]_t = [H^2(T)]_t (x) [H^2(S)]_t -> degree p*t.
PLinearMap segre_h3_frobenius_piece(const VeroneseView& t, const PolyRingH2& s, int deg);

}  // namespace frobcert

#endif  // FROBCERT_PRODUCTS_HPP
