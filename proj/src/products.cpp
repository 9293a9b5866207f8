#include "frobcert/products.hpp"

#include <numeric>
#include <sstream>

namespace frobcert {

VeroneseView::VeroneseView(GradedHypersurface parent_ring, int index)
    : parent(std::move(parent_ring)), n(index) {
  if (n < 1) throw DimensionMismatch("Veronese index must be positive");
}

GradedPiece veronese_piece(const VeroneseView& v, int t) {
  GradedPiece piece = basis_of_degree(v.parent, t * v.n);
  piece.degree = t;
  return piece;
}

int weight_lcm(const GradedHypersurface& h) {
  int l = 1;
  for (const auto& var : h.ring()->vars()) l = std::lcm(l, var.weight);
  return l;
}

bool veronese_standardness_check(const VeroneseView& v) {
  return v.n % weight_lcm(v.parent) == 0;
}

std::size_t hilbert_function(const GradedHypersurface& h, int d) {
  if (d < 0) return 0;
  std::size_t count = 0;
  for (int a = 0; a < h.m() && a * h.weight_x() <= d; ++a) {
    const int rest = d - a * h.weight_x();
    for (int e = 0; e * h.weight_y() <= rest; ++e) {
      if ((rest - e * h.weight_y()) % h.weight_z() == 0) ++count;
    }
  }
  return count;
}

std::size_t polyring_hilbert_function(const PolyRingH2& s, int d) {
  if (d < 0) return 0;
  std::size_t count = 0;
  for (int i = 0; i * s.weight_u <= d; ++i) {
    if ((d - i * s.weight_u) % s.weight_v == 0) ++count;
  }
  return count;
}

std::string tensor_symbol_text(const TensorSymbol& s) {
  std::ostringstream out;
  out << "[x^" << s.left.a << "*u^" << s.right.a << "/(y^" << s.left.b << "*z^" << s.left.c
      << "*v^" << s.right.b << "*w^" << s.right.c << ")]";
  return out.str();
}

void TensorClass::add_term(const TensorSymbol& s, const FieldElement& c) {
  if (!(c.desc() == field_)) throw FieldMismatch("tensor coefficient from another field");
  if (c.is_zero()) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorClass TensorClass::operator+(const TensorClass& o) const {
  TensorClass r(*this);
  for (const auto& [s, c] : o.terms_) r.add_term(s, c);
  return r;
}

TensorClass TensorClass::operator-(const TensorClass& o) const {
  TensorClass r(*this);
  for (const auto& [s, c] : o.terms_) r.add_term(s, -c);
  return r;
}

TensorClass TensorClass::scaled(const FieldElement& k) const {
  TensorClass r(field_);
  for (const auto& [s, c] : terms_) r.add_term(s, c * k);
  return r;
}

TensorClass tensor(const CohomClass& left, const CohomClass& right) {
  if (!(left.field() == right.field())) throw FieldMismatch("tensor factors over different fields");
  TensorClass out(left.field());
  for (const auto& [s1, c1] : left.terms()) {
    for (const auto& [s2, c2] : right.terms()) out.add_term({s1, s2}, c1 * c2);
  }
  return out;
}

std::pair<int, int> tensor_bidegree(const GradedHypersurface& h, const TensorSymbol& s) {
  return {h.symbol_degree(s.left), h.symbol_degree(s.right)};
}

TensorClass reduce_enveloping(const GradedHypersurface& h,
                              const std::vector<SplitMonomial>& numerator, int b1, int c1,
                              int b2, int c2) {
  TensorClass out(h.field());
  const FieldElement one = FieldElement::one(h.field());
  for (const auto& term : numerator) {
    const CohomClass left = reduce_to_cech(h, MPoly::monomial(h.ring(), term.left), b1, c1);
    const CohomClass right = reduce_to_cech(h, MPoly::monomial(h.ring(), term.right), b2, c2);
    out = out + tensor(left, right).scaled(term.coeff);
  }
  return out;
}

TensorClass enveloping_frobenius_on_class(const GradedHypersurface& h, const TensorClass& xi) {
  if (!(xi.field() == h.field())) throw FieldMismatch("class and ring over different fields");
  std::map<CechSymbol, CohomClass> cache;
  auto image = [&](const CechSymbol& s) -> const CohomClass& {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, frobenius_symbol(h, s)).first;
    return it->second;
  };
  TensorClass out(h.field());
  for (const auto& [s, c] : xi.terms()) {
    out = out + tensor(image(s.left), image(s.right)).scaled(frobenius_scalar(c));
  }
  return out;
}

KunnethReport kunneth_piece_dims(const VeroneseView& t, const PolyRingH2& s, int ell, int deg) {
  if (!veronese_standardness_check(t)) {
    throw NonStandardGrading("n = " + std::to_string(t.n) + " is not divisible by " +
                             std::to_string(weight_lcm(t.parent)));
  }
  const std::size_t t_ring = deg >= 0 ? hilbert_function(t.parent, deg * t.n) : 0;
  const std::size_t t_h2 = veronese_piece(t, deg).dim();
  const std::size_t s_ring = polyring_hilbert_function(s, deg);
  const std::size_t s_h2 = polyring_h2_piece(s, deg).dim();

  KunnethReport report{ell, deg, 0, {}};
  // Both factors are Cohen-Macaulay of dimension 2: only H^2 is nonzero.
  if (ell == 2) {
    report.summands.push_back({"T#H2(S)", t_ring * s_h2});
    report.summands.push_back({"H2(T)#S", t_h2 * s_ring});
  } else if (ell == 3) {
    report.summands.push_back({"H2(T)#H2(S)", t_h2 * s_h2});
  }
  for (const auto& x : report.summands) report.dim += x.dim;
  return report;
}

PLinearMap segre_h2_frobenius(const VeroneseView& t, const PolyRingH2& s) {
  if (!veronese_standardness_check(t)) {
    throw NonStandardGrading("n = " + std::to_string(t.n) + " is not divisible by " +
                             std::to_string(weight_lcm(t.parent)));
  }
  (void)s;
  const PLinearMap degree0 = frobenius_matrix_on_piece(t.parent, 0);
  auto relabel = [](std::vector<std::string> labels) {
    for (auto& l : labels) l += "#1";
    return labels;
  };
  return PLinearMap(relabel(degree0.src()), relabel(degree0.dst()), degree0.matrix(), 1);
}

PLinearMap segre_h3_frobenius_piece(const VeroneseView& t, const PolyRingH2& s, int deg) {
  if (!veronese_standardness_check(t)) {
    throw NonStandardGrading("n = " + std::to_string(t.n) + " is not divisible by " +
                             std::to_string(weight_lcm(t.parent)));
  }
  const int p = static_cast<int>(t.parent.field().p);
  const GradedPiece src_t = veronese_piece(t, deg);
  const GradedPiece src_s = polyring_h2_piece(s, deg);
  const GradedPiece dst_t = veronese_piece(t, p * deg);
  const GradedPiece dst_s = polyring_h2_piece(s, p * deg);

  auto labels = [](const GradedPiece& a, const GradedPiece& b) {
    std::vector<std::string> out;
    for (const auto& x : a.basis) {
      for (const auto& y : b.basis) out.push_back(symbol_text(x) + "#" + polyring_h2_text(y));
    }
    return out;
  };

  const PLinearMap left = frobenius_matrix_on_piece(t.parent, deg * t.n);
  Matrix m(t.parent.field(), dst_t.dim() * dst_s.dim(), src_t.dim() * src_s.dim());
  for (std::size_t js = 0; js < src_s.dim(); ++js) {
    const CechSymbol image{0, src_s.basis[js].b * p, src_s.basis[js].c * p};
    const std::size_t is = *dst_s.index_of(image);
    for (std::size_t jt = 0; jt < src_t.dim(); ++jt) {
      const std::size_t col = jt * src_s.dim() + js;
      for (std::size_t it = 0; it < dst_t.dim(); ++it) {
        const auto& row = left.matrix().row(it);
        auto entry = row.find(jt);
        if (entry != row.end()) m.set(it * dst_s.dim() + is, col, entry->second);
      }
    }
  }
  return PLinearMap(labels(src_t, src_s), labels(dst_t, dst_s), std::move(m), 1);
}

}  // namespace frobcert
