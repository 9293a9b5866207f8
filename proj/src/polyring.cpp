#include "frobcert/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace frobcert {

WeightedRing::WeightedRing(FieldDesc field, std::vector<Variable> vars)
    : field_(field), vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.weight <= 0) throw InvalidHypersurface("variable weights must be positive");
    if (v.name.empty() || !seen.insert(v.name).second) {
      throw InvalidHypersurface("variable names must be distinct and nonempty");
    }
  }
}

std::size_t WeightedRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  throw ParseError("unknown variable '" + std::string(name) + "'");
}

RingPtr make_ring(FieldDesc field, std::vector<Variable> vars) {
  return std::make_shared<const WeightedRing>(field, std::move(vars));
}

RingPtr ring_up(const RingPtr& ring) { return make_ring(ring->field().up(), ring->vars()); }

int weighted_degree(const Exponents& e, const WeightedRing& ring) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * ring.weight(i);
  return d;
}

// ---------------------------------------------------------------------------
// MPoly

MPoly::MPoly(RingPtr ring) : ring_(std::move(ring)) {}

MPoly MPoly::monomial(RingPtr ring, Exponents e, const FieldElement& coeff) {
  MPoly m(std::move(ring));
  m.add_term(e, coeff);
  return m;
}

MPoly MPoly::monomial(RingPtr ring, Exponents e) {
  const FieldDesc field = ring->field();
  return monomial(std::move(ring), std::move(e), FieldElement::one(field));
}

MPoly MPoly::constant(RingPtr ring, const FieldElement& c) {
  const std::size_t n = ring->nvars();
  return monomial(std::move(ring), Exponents(n, 0), c);
}

MPoly MPoly::variable(RingPtr ring, std::string_view name) {
  Exponents e(ring->nvars(), 0);
  e[ring->index_of(name)] = 1;
  return monomial(std::move(ring), std::move(e));
}

void MPoly::check_ring(const MPoly& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) {
    throw FieldMismatch("polynomials from different rings");
  }
}

FieldElement MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement::zero(field()) : it->second;
}

void MPoly::add_term(const Exponents& e, const FieldElement& c) {
  if (e.size() != ring_->nvars()) throw DimensionMismatch("exponent vector length");
  if (!(c.desc() == field())) throw FieldMismatch("coefficient from another field");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int MPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_ring(o);
  MPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  check_ring(o);
  MPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  check_ring(o);
  MPoly r(ring_);
  const std::size_t n = ring_->nvars();
  Exponents e(n);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

MPoly MPoly::scaled(const FieldElement& c) const {
  MPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(ring_, FieldElement::one(field()));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::shifted(const Exponents& s) const {
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    Exponents x = e;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += s.at(i);
    r.terms_.emplace(std::move(x), c);
  }
  return r;
}

MPoly MPoly::base_changed(const RingPtr& up) const {
  if (!(up->field() == field().up()) || up->vars() != ring_->vars()) {
    throw FieldMismatch("target ring is not the base change of this ring");
  }
  MPoly r(up);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, embed_up(c));
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  return (ring_ == o.ring_ || *ring_ == *o.ring_) && terms_ == o.terms_;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Highest weighted degree first, then lexicographically descending.
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    const int da = weighted_degree(a->first, *ring_);
    const int db = weighted_degree(b->first, *ring_);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    if (!first) out << '+';
    first = false;
    const auto& [e, c] = *t;
    const bool has_vars = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    if (!c.is_one()) {
      out << '(' << c.to_string() << ')';
      if (has_vars) out << '*';
    } else if (!has_vars) {
      out << '1';
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_factor) out << '*';
      first_factor = false;
      out << ring_->vars()[i].name;
      if (e[i] > 1) out << '^' << e[i];
    }
  }
  return out.str();
}

namespace {

bool parse_int(std::string_view s, std::size_t& pos, long long& v) {
  const std::size_t start = pos;
  v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    if (v > (1ll << 40)) throw ParseError("integer too large");
    ++pos;
  }
  return pos > start;
}

}  // namespace

MPoly MPoly::parse(RingPtr ring, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty polynomial");
  const FieldDesc field = ring->field();
  MPoly result(ring);
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in \"" + s + "\"");
    }
    first = false;
    FieldElement coeff = FieldElement::one(field);
    bool have_factor = false;
    if (pos < s.size() && s[pos] == '(') {
      int depth = 0;
      std::size_t end = pos;
      for (; end < s.size(); ++end) {
        if (s[end] == '(') ++depth;
        if (s[end] == ')' && --depth == 0) break;
      }
      if (end >= s.size()) throw ParseError("unbalanced parenthesis in \"" + s + "\"");
      coeff = FieldElement::parse(field, std::string_view(s).substr(pos + 1, end - pos - 1));
      pos = end + 1;
      have_factor = true;
    } else {
      long long v = 0;
      if (parse_int(s, pos, v)) {
        coeff = FieldElement::from_int(field, v);
        have_factor = true;
      }
    }
    Exponents e(ring->nvars(), 0);
    bool need_factor = !have_factor;
    if (have_factor && pos < s.size() && s[pos] == '*') {
      ++pos;
      need_factor = true;
    }
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
      std::size_t end = pos;
      while (end < s.size() && std::isalnum(static_cast<unsigned char>(s[end]))) ++end;
      const std::size_t idx = ring->index_of(std::string_view(s).substr(pos, end - pos));
      pos = end;
      long long ex = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (!parse_int(s, pos, ex)) throw ParseError("missing exponent in \"" + s + "\"");
      }
      e[idx] += static_cast<int>(ex);
      need_factor = false;
      have_factor = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        need_factor = true;
      } else {
        break;
      }
    }
    if (need_factor || !have_factor) throw ParseError("malformed term in \"" + s + "\"");
    result.add_term(e, negative ? -coeff : coeff);
  }
  return result;
}

// ---------------------------------------------------------------------------

std::optional<int> is_homogeneous(const MPoly& f) {
  std::optional<int> d;
  for (const auto& [e, c] : f.terms()) {
    const int de = weighted_degree(e, *f.ring());
    if (d && *d != de) return std::nullopt;
    d = de;
  }
  return d;
}

MPoly partial_derivative(const MPoly& f, std::size_t var) {
  if (var >= f.ring()->nvars()) throw DimensionMismatch("no such variable");
  MPoly r(f.ring());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    const FieldElement k = FieldElement::from_int(f.field(), e[var]);
    if (k.is_zero()) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * k);
  }
  return r;
}

std::vector<MPoly> jacobian(const MPoly& f) {
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) out.push_back(partial_derivative(f, i));
  return out;
}

namespace {

void enumerate(const WeightedRing& ring, std::size_t var, int remaining, Exponents& cur,
               std::vector<Exponents>& out) {
  if (var + 1 == ring.nvars()) {
    if (remaining % ring.weight(var) == 0) {
      cur[var] = remaining / ring.weight(var);
      out.push_back(cur);
    }
    return;
  }
  for (int e = 0; e * ring.weight(var) <= remaining; ++e) {
    cur[var] = e;
    enumerate(ring, var + 1, remaining - e * ring.weight(var), cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_degree(const WeightedRing& ring, int d) {
  std::vector<Exponents> out;
  if (d < 0 || ring.nvars() == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents cur(ring.nvars(), 0);
  enumerate(ring, 0, d, cur, out);
  return out;
}

bool MembershipWitness::verify() const {
  if (generators.size() != cofactors.size()) return false;
  MPoly sum(target.ring());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].is_zero() || cofactors[j].is_zero()) continue;
    const auto dh = is_homogeneous(target);
    const auto dg = is_homogeneous(generators[j]);
    const auto dc = is_homogeneous(cofactors[j]);
    if (!dh || !dg || !dc || *dg + *dc != *dh) return false;
    sum = sum + cofactors[j] * generators[j];
  }
  return sum == target;
}

std::optional<MembershipWitness> ideal_membership_homogeneous(const MPoly& h,
                                                              const std::vector<MPoly>& gens) {
  const RingPtr ring = h.ring();
  MembershipWitness w{h, gens, {}};
  for (const auto& g : gens) {
    if (!g.is_zero() && !is_homogeneous(g)) {
      throw NonHomogeneousInput("generator " + g.to_string() + " is not homogeneous");
    }
    w.cofactors.emplace_back(ring);
  }
  if (h.is_zero()) return w;
  const auto dh = is_homogeneous(h);
  if (!dh) throw NonHomogeneousInput("target " + h.to_string() + " is not homogeneous");

  const auto target_monomials = monomials_of_degree(*ring, *dh);
  std::map<Exponents, std::size_t> row_of;
  for (std::size_t i = 0; i < target_monomials.size(); ++i) row_of[target_monomials[i]] = i;

  struct Unknown {
    std::size_t gen;
    Exponents mono;
  };
  std::vector<Unknown> unknowns;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].is_zero()) continue;
    const int dg = *is_homogeneous(gens[j]);
    for (auto& m : monomials_of_degree(*ring, *dh - dg)) unknowns.push_back({j, std::move(m)});
  }
  Matrix a(ring->field(), target_monomials.size(), unknowns.size());
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const auto& u = unknowns[col];
    for (const auto& [e, c] : gens[u.gen].terms()) {
      Exponents x = e;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += u.mono[i];
      a.add_to(row_of.at(x), col, c);
    }
  }
  Vector b = zero_vector(ring->field(), target_monomials.size());
  for (const auto& [e, c] : h.terms()) b[row_of.at(e)] = c;

  const auto x = solve(a, b);
  if (!x) return std::nullopt;
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const auto& u = unknowns[col];
    w.cofactors[u.gen].add_term(u.mono, (*x)[col]);
  }
  return w;
}

int default_power_cap(const MPoly& f) {
  const auto d = is_homogeneous(f);
  if (!d) throw NonHomogeneousInput("f is not homogeneous");
  int min_weight = f.ring()->weight(0);
  for (const auto& v : f.ring()->vars()) min_weight = std::min(min_weight, v.weight);
  return std::max(1, 4 * *d / min_weight);
}

PowerContainment jacobian_power_containment(const MPoly& f, bool include_f,
                                            std::optional<int> cap) {
  if (!is_homogeneous(f)) throw NonHomogeneousInput("f is not homogeneous");
  const RingPtr ring = f.ring();
  PowerContainment out;
  out.cap = cap.value_or(default_power_cap(f));
  out.include_f = include_f;
  std::vector<MPoly> gens = jacobian(f);
  if (include_f) gens.push_back(f);
  for (std::size_t var = 0; var < ring->nvars(); ++var) {
    bool found = false;
    for (int k = 1; k <= out.cap && !found; ++k) {
      Exponents e(ring->nvars(), 0);
      e[var] = k;
      auto w = ideal_membership_homogeneous(MPoly::monomial(ring, e), gens);
      if (w) {
        out.exponents.push_back(k);
        out.witnesses.push_back(std::move(*w));
        found = true;
      }
    }
    if (!found) {
      throw CapExceeded("no power of " + ring->vars()[var].name + " up to " +
                        std::to_string(out.cap) + " lies in the Jacobian ideal");
    }
  }
  return out;
}

}  // namespace frobcert
