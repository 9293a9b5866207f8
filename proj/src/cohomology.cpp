#include "frobcert/cohomology.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace frobcert {

std::string symbol_text(const CechSymbol& s, const char* x, const char* y, const char* z) {
  std::ostringstream out;
  out << '[' << x << '^' << s.a << "/(" << y << '^' << s.b << '*' << z << '^' << s.c << ")]";
  return out.str();
}

std::string polyring_h2_text(const CechSymbol& s) {
  std::ostringstream out;
  out << "[1/(u^" << s.b << "*v^" << s.c << ")]";
  return out.str();
}

CechSymbol parse_symbol_text(std::string_view text) {
  // [N/(Y^b*Z^c)] where N is "1" or "X^a".
  auto fail = [&]() -> CechSymbol {
    throw ParseError("malformed Cech symbol \"" + std::string(text) + "\"");
  };
  std::size_t pos = 0;
  auto expect = [&](char ch) {
    if (pos >= text.size() || text[pos] != ch) fail();
    ++pos;
  };
  auto name_then_power = [&]() -> int {
    const std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail();
    expect('^');
    const std::size_t digits = pos;
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == digits) fail();
    return v;
  };
  CechSymbol s;
  expect('[');
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    s.a = 0;
  } else {
    s.a = name_then_power();
  }
  expect('/');
  expect('(');
  s.b = name_then_power();
  expect('*');
  s.c = name_then_power();
  expect(')');
  expect(']');
  if (pos != text.size()) fail();
  return s;
}

// ---------------------------------------------------------------------------
// GradedHypersurface

GradedHypersurface::GradedHypersurface(MPoly f) : f_(std::move(f)), g_(f_.ring()) {
  if (ring()->nvars() != 3) throw InvalidHypersurface("expected variables (x, y, z)");
  const auto d = is_homogeneous(f_);
  if (!d) throw InvalidHypersurface("f is not homogeneous: " + f_.to_string());
  degree_ = *d;
  m_ = f_.degree_in(0);
  if (m_ < 1) throw InvalidHypersurface("f does not involve x");
  const Exponents xm{m_, 0, 0};
  const FieldElement lead = f_.coeff(xm);
  const FieldElement one = FieldElement::one(field());
  if (!(lead == one) && !(lead == -one)) {
    throw InvalidHypersurface("coefficient of x^" + std::to_string(m_) + " must be 1 or -1");
  }
  // f = c x^m + rest with c = +-1, so x^m = -c * rest in R.
  const MPoly rest = f_ - MPoly::monomial(ring(), xm, lead);
  g_ = (-rest).scaled(lead);
  if (g_.degree_in(0) >= m_) throw InvalidHypersurface("f has several terms of x-degree m");
}

int GradedHypersurface::symbol_degree(const CechSymbol& s) const {
  return s.a * weight_x() - s.b * weight_y() - s.c * weight_z();
}

GradedHypersurface GradedHypersurface::base_changed() const {
  return GradedHypersurface(f_.base_changed(ring_up(ring())));
}

// ---------------------------------------------------------------------------
// CohomClass

CohomClass CohomClass::basis(FieldDesc field, const CechSymbol& s) {
  CohomClass c(field);
  c.add_term(s, FieldElement::one(field));
  return c;
}

FieldElement CohomClass::coeff(const CechSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

void CohomClass::add_term(const CechSymbol& s, const FieldElement& c) {
  if (!(c.desc() == field_)) throw FieldMismatch("class coefficient from another field");
  if (c.is_zero()) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CohomClass CohomClass::operator+(const CohomClass& o) const {
  CohomClass r(*this);
  for (const auto& [s, c] : o.terms_) r.add_term(s, c);
  return r;
}

CohomClass CohomClass::operator-(const CohomClass& o) const {
  CohomClass r(*this);
  for (const auto& [s, c] : o.terms_) r.add_term(s, -c);
  return r;
}

CohomClass CohomClass::scaled(const FieldElement& k) const {
  CohomClass r(field_);
  for (const auto& [s, c] : terms_) r.add_term(s, c * k);
  return r;
}

std::optional<int> class_degree(const GradedHypersurface& h, const CohomClass& eta) {
  std::optional<int> d;
  for (const auto& [s, c] : eta.terms()) {
    const int ds = h.symbol_degree(s);
    if (d && *d != ds) return std::nullopt;
    d = ds;
  }
  return d;
}

// ---------------------------------------------------------------------------
// GradedPiece

std::optional<std::size_t> GradedPiece::index_of(const CechSymbol& s) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), s);
  if (it == basis.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - basis.begin());
}

std::vector<std::string> GradedPiece::labels(const char* x, const char* y, const char* z) const {
  std::vector<std::string> out;
  out.reserve(basis.size());
  for (const auto& s : basis) out.push_back(symbol_text(s, x, y, z));
  return out;
}

Vector GradedPiece::coordinates(const CohomClass& eta) const {
  Vector v = zero_vector(eta.field(), basis.size());
  for (const auto& [s, c] : eta.terms()) {
    const auto i = index_of(s);
    if (!i) throw BasisExpressFailure(symbol_text(s) + " is not in the degree " +
                                      std::to_string(degree) + " basis");
    v[*i] = c;
  }
  return v;
}

CohomClass GradedPiece::to_class(const Vector& v) const {
  if (v.size() != basis.size()) throw DimensionMismatch("coordinate vector length");
  if (v.empty()) throw DimensionMismatch("empty piece has no field");
  CohomClass c(v.front().desc());
  for (std::size_t i = 0; i < v.size(); ++i) c.add_term(basis[i], v[i]);
  return c;
}

// ---------------------------------------------------------------------------

int a_invariant(const GradedHypersurface& h) {
  return (h.m() - 1) * h.weight_x() - (h.weight_y() + h.weight_z());
}

GradedPiece basis_of_degree(const GradedHypersurface& h, int d) {
  GradedPiece piece{d, {}};
  const int wx = h.weight_x(), wy = h.weight_y(), wz = h.weight_z();
  for (int a = 0; a < h.m(); ++a) {
    // c = (a wx - b wy - d) / wz >= 1
    for (int b = 1; a * wx - b * wy - d >= wz; ++b) {
      const int rest = a * wx - b * wy - d;
      if (rest % wz == 0) piece.basis.push_back({a, b, rest / wz});
    }
  }
  return piece;
}

namespace {

// Normal form modulo f: every x-exponent below m.
MPoly normal_form(const GradedHypersurface& h, MPoly work) {
  const int m = h.m();
  MPoly done(h.ring());
  while (!work.is_zero()) {
    // Terms are ordered lexicographically with x first, so the last term has
    // the largest x-exponent.
    auto last = std::prev(work.terms().end());
    if (last->first[0] < m) {
      for (const auto& [e, c] : work.terms()) done.add_term(e, c);
      break;
    }
    Exponents e = last->first;
    const FieldElement c = last->second;
    work.add_term(e, -c);
    e[0] -= m;
    work = work + h.g().shifted(e).scaled(c);
  }
  return done;
}

}  // namespace

MPoly reduce_x_power(const GradedHypersurface& h, int k) {
  return normal_form(h, MPoly::monomial(h.ring(), Exponents{k, 0, 0}));
}

CohomClass reduce_to_cech(const GradedHypersurface& h, const MPoly& numerator, int b, int c) {
  if (b < 1 || c < 1) throw InvalidHypersurface("Cech denominators need b, c >= 1");
  CohomClass out(h.field());
  const MPoly reduced = normal_form(h, numerator);
  for (const auto& [e, coeff] : reduced.terms()) {
    const int nb = b - e[1];
    const int nc = c - e[2];
    if (nb >= 1 && nc >= 1) out.add_term({e[0], nb, nc}, coeff);
  }
  return out;
}

namespace {

CohomClass frobenius_symbol_with(const GradedHypersurface& h, const CechSymbol& s,
                                 const MPoly& reduced_numerator) {
  const int p = static_cast<int>(h.field().p);
  CohomClass out(h.field());
  for (const auto& [e, coeff] : reduced_numerator.terms()) {
    const int nb = s.b * p - e[1];
    const int nc = s.c * p - e[2];
    if (nb >= 1 && nc >= 1) out.add_term({e[0], nb, nc}, coeff);
  }
  return out;
}

}  // namespace

CohomClass frobenius_symbol(const GradedHypersurface& h, const CechSymbol& s) {
  const int p = static_cast<int>(h.field().p);
  return frobenius_symbol_with(h, s, reduce_x_power(h, s.a * p));
}

CohomClass frobenius_class(const GradedHypersurface& h, const CohomClass& eta) {
  if (!(eta.field() == h.field())) throw FieldMismatch("class and ring over different fields");
  CohomClass out(h.field());
  for (const auto& [s, c] : eta.terms()) {
    out = out + frobenius_symbol(h, s).scaled(frobenius_scalar(c));
  }
  return out;
}

PLinearMap frobenius_matrix_on_piece(const GradedHypersurface& h, int d) {
  const int p = static_cast<int>(h.field().p);
  const GradedPiece src = basis_of_degree(h, d);
  const GradedPiece dst = basis_of_degree(h, p * d);
  std::vector<std::optional<MPoly>> numerators(h.m());
  Matrix m(h.field(), dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    const CechSymbol& s = src.basis[j];
    auto& num = numerators[s.a];
    if (!num) num = reduce_x_power(h, s.a * p);
    const CohomClass image = frobenius_symbol_with(h, s, *num);
    for (const auto& [t, c] : image.terms()) {
      const auto i = dst.index_of(t);
      if (!i) {
        throw BasisExpressFailure("F" + symbol_text(s) + " has term " + symbol_text(t) +
                                  " outside degree " + std::to_string(p * d));
      }
      m.set(*i, j, c);
    }
  }
  return PLinearMap(src.labels(), dst.labels(), std::move(m), 1);
}

int hara_rhs(const GradedHypersurface& h, const std::vector<int>& k_powers) {
  if (k_powers.size() != 3) throw DimensionMismatch("expected three variable powers");
  int rhs = -2 * h.degree();
  for (std::size_t i = 0; i < 3; ++i) rhs += k_powers[i] * h.ring()->weight(i);
  return rhs;
}

int hara_bound(const GradedHypersurface& h, const std::vector<int>& k_powers) {
  const int rhs = hara_rhs(h, k_powers);
  const int p = static_cast<int>(h.field().p);
  if (rhs < 0) return 1;
  return std::max(1, rhs / p + 1);
}

GradedPiece polyring_h2_piece(const PolyRingH2& ring, int d) {
  GradedPiece piece{d, {}};
  for (int b = 1; -d - b * ring.weight_u >= ring.weight_v; ++b) {
    const int rest = -d - b * ring.weight_u;
    if (rest % ring.weight_v == 0) piece.basis.push_back({0, b, rest / ring.weight_v});
  }
  return piece;
}

CohomClass polyring_h2_frobenius(const PolyRingH2& ring, const CohomClass& eta) {
  const int p = static_cast<int>(ring.field.p);
  CohomClass out(ring.field);
  for (const auto& [s, c] : eta.terms()) {
    out.add_term({0, s.b * p, s.c * p}, frobenius_scalar(c));
  }
  return out;
}

}  // namespace frobcert
