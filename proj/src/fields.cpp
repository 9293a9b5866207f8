#include "frobcert/fields.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace frobcert {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// PrimeField

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw NotPrime("characteristic must be below 2^31");
}

Residue PrimeField::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

Residue PrimeField::add(Residue a, Residue b) const noexcept {
  Residue s = a + b;
  return s >= p_ ? s - p_ : s;
}

Residue PrimeField::sub(Residue a, Residue b) const noexcept {
  return a >= b ? a - b : a + p_ - b;
}

Residue PrimeField::mul(Residue a, Residue b) const noexcept {
  return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
}

Residue PrimeField::neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  std::uint64_t result = 1 % p_;
  std::uint64_t base = a % p_;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p_));
  return pow(a, p_ - 2);
}

// ---------------------------------------------------------------------------
// UniPoly

namespace {

inline Residue addmod(Residue a, Residue b, std::uint32_t p) {
  Residue s = a + b;
  return s >= p ? s - p : s;
}

inline Residue submod(Residue a, Residue b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline Residue mulmod(Residue a, Residue b, std::uint32_t p) {
  return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p);
}

Residue invmod(Residue a, std::uint32_t p) {
  if (a == 0) throw DivisionByZero("inverse of zero coefficient");
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

}  // namespace

UniPoly::UniPoly(std::uint32_t p, std::vector<Residue> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

UniPoly UniPoly::constant(std::uint32_t p, Residue c) {
  return UniPoly(p, std::vector<Residue>{c});
}

UniPoly UniPoly::monomial(std::uint32_t p, Residue c, std::size_t degree) {
  std::vector<Residue> v(degree + 1, 0);
  v[degree] = c;
  return UniPoly(p, std::move(v));
}

void UniPoly::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  const auto& big = c_.size() >= o.c_.size() ? c_ : o.c_;
  const auto& small = c_.size() >= o.c_.size() ? o.c_ : c_;
  UniPoly r(p_);
  r.c_ = big;
  for (std::size_t i = 0; i < small.size(); ++i) r.c_[i] = addmod(r.c_[i], small[i], p_);
  r.trim();
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  UniPoly r(p_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = submod(r.c_[i], o.c_[i], p_);
  r.trim();
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r(p_);
  r.c_.reserve(c_.size());
  for (auto c : c_) r.c_.push_back(c == 0 ? 0 : p_ - c);
  return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(p_);
  UniPoly r(p_);
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] = addmod(r.c_[i + j], mulmod(c_[i], o.c_[j], p_), p_);
    }
  }
  r.trim();
  return r;
}

UniPoly UniPoly::scaled(Residue k) const {
  k %= p_;
  if (k == 0) return UniPoly(p_);
  UniPoly r(*this);
  for (auto& c : r.c_) c = mulmod(c, k, p_);
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return scaled(invmod(leading(), p_));
}

UniPoly UniPoly::inflate(std::size_t k) const {
  if (k == 1 || c_.size() <= 1) return *this;
  UniPoly r(p_);
  r.c_.assign((c_.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
  return r;
}

UniPoly UniPoly::pow(std::uint64_t e) const {
  UniPoly result = constant(p_, 1);
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (degree() < divisor.degree()) return {UniPoly(p_), *this};
  std::vector<Residue> rem = c_;
  std::vector<Residue> quot(c_.size() - divisor.c_.size() + 1, 0);
  const Residue lead_inv = invmod(divisor.leading(), p_);
  const std::size_t dd = divisor.c_.size() - 1;
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    const Residue q = mulmod(rem[i], lead_inv, p_);
    quot[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[i - dd + j] = submod(rem[i - dd + j], mulmod(q, divisor.c_[j], p_), p_);
    }
  }
  return {UniPoly(p_, std::move(quot)), UniPoly(p_, std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
  if (divisor.is_one()) return *this;
  return divmod(divisor).first;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UniPoly::to_string(char symbol) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Residue c = c_[i];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << '*';
    out << symbol;
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

namespace {

// Reads an unsigned decimal at `pos`; returns false when none is present.
bool read_uint(std::string_view s, std::size_t& pos, std::uint64_t& value) {
  const std::size_t start = pos;
  std::uint64_t v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
    if (v > (1ull << 40)) throw ParseError("number too large");
    ++pos;
  }
  if (pos == start) return false;
  value = v;
  return true;
}

}  // namespace

UniPoly UniPoly::parse(std::uint32_t p, std::string_view text, char symbol) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty polynomial");
  const PrimeField fp(p);
  std::vector<Residue> coeffs;
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
    std::uint64_t coeff = 1;
    std::uint64_t exponent = 0;
    bool has_coeff = read_uint(s, pos, coeff);
    bool has_symbol = false;
    if (has_coeff && pos < s.size() && s[pos] == '*') {
      ++pos;
      if (pos >= s.size() || s[pos] != symbol) {
        throw ParseError("expected '" + std::string(1, symbol) + "' after '*' in \"" + s + "\"");
      }
    }
    if (pos < s.size() && s[pos] == symbol) {
      has_symbol = true;
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (!read_uint(s, pos, exponent)) throw ParseError("missing exponent in \"" + s + "\"");
      }
    }
    if (!has_coeff && !has_symbol) throw ParseError("malformed term in \"" + s + "\"");
    if (exponent >= coeffs.size()) coeffs.resize(exponent + 1, 0);
    Residue c = fp.reduce(static_cast<std::int64_t>(coeff % p));
    if (negative) c = fp.neg(c);
    coeffs[exponent] = fp.add(coeffs[exponent], c);
  }
  return UniPoly(p, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// FieldDesc / FieldElement

std::uint64_t FieldDesc::t_exponent() const noexcept {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < level; ++i) q *= p;
  return q;
}

FieldElement::FieldElement(FieldDesc desc, UniPoly num, UniPoly den)
    : desc_(desc), num_(std::move(num)), den_(std::move(den)) {
  if (num_.characteristic() != desc_.p || den_.characteristic() != desc_.p) {
    throw FieldMismatch("polynomial characteristic differs from field");
  }
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  if (num_.is_zero()) {
    den_ = UniPoly::constant(desc_.p, 1);
    return;
  }
  if (!den_.is_constant()) {
    UniPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  if (den_.leading() != 1) {
    const Residue k = invmod(den_.leading(), desc_.p);
    num_ = num_.scaled(k);
    den_ = den_.scaled(k);
  }
}

FieldElement::FieldElement(FieldDesc desc, UniPoly num)
    : FieldElement(desc, std::move(num), UniPoly::constant(desc.p, 1)) {}

FieldElement FieldElement::zero(FieldDesc desc) {
  return FieldElement(desc, UniPoly(desc.p));
}

FieldElement FieldElement::one(FieldDesc desc) {
  return FieldElement(desc, UniPoly::constant(desc.p, 1));
}

FieldElement FieldElement::from_int(FieldDesc desc, std::int64_t v) {
  std::int64_t r = v % static_cast<std::int64_t>(desc.p);
  if (r < 0) r += desc.p;
  return FieldElement(desc, UniPoly::constant(desc.p, static_cast<Residue>(r)));
}

FieldElement FieldElement::generator(FieldDesc desc) {
  return FieldElement(desc, UniPoly::monomial(desc.p, 1, 1));
}

FieldElement FieldElement::t(FieldDesc desc) {
  return FieldElement(desc, UniPoly::monomial(desc.p, 1, desc.t_exponent()));
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(desc_ == o.desc_)) {
    throw FieldMismatch("operands live in different fields (p=" + std::to_string(desc_.p) +
                        ", level " + std::to_string(desc_.level) + " vs p=" +
                        std::to_string(o.desc_.p) + ", level " + std::to_string(o.desc_.level) +
                        ")");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) return FieldElement(desc_, num_ + o.num_);
  if (den_ == o.den_) return FieldElement(desc_, num_ + o.num_, den_);
  return FieldElement(desc_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) return FieldElement(desc_, num_ - o.num_);
  if (den_ == o.den_) return FieldElement(desc_, num_ - o.num_, den_);
  return FieldElement(desc_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  r.num_ = -num_;
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return zero(desc_);
  if (den_.is_one() && o.den_.is_one()) return FieldElement(desc_, num_ * o.num_);
  // Cross-cancel so the product is already reduced.
  UniPoly g1 = gcd(num_, o.den_);
  UniPoly g2 = gcd(o.num_, den_);
  return FieldElement(desc_, num_.exact_div(g1) * o.num_.exact_div(g2),
                      den_.exact_div(g2) * o.den_.exact_div(g1));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  return FieldElement(desc_, den_, num_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return *this * o.inverse();
}

FieldElement FieldElement::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  return FieldElement(desc_, num_.pow(static_cast<std::uint64_t>(e)),
                      den_.pow(static_cast<std::uint64_t>(e)));
}

std::string FieldElement::to_string() const {
  std::string s = num_.to_string(desc_.symbol());
  if (!den_.is_one()) s += "/" + den_.to_string(desc_.symbol());
  return s;
}

namespace {

// "(poly)" -> "poly"; anything else is returned unchanged.
std::string_view strip_parens(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

FieldElement FieldElement::parse(FieldDesc desc, std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return FieldElement(desc, UniPoly::parse(desc.p, strip_parens(text), desc.symbol()));
  }
  if (text.find('/', slash + 1) != std::string_view::npos) {
    throw ParseError("more than one '/' in \"" + std::string(text) + "\"");
  }
  UniPoly num = UniPoly::parse(desc.p, strip_parens(text.substr(0, slash)), desc.symbol());
  UniPoly den = UniPoly::parse(desc.p, strip_parens(text.substr(slash + 1)), desc.symbol());
  return FieldElement(desc, std::move(num), std::move(den));
}

FieldElement frobenius_scalar(const FieldElement& c) {
  // Coefficients are fixed by x -> x^p in F_p, so N(s)^p = N(s^p).
  const std::size_t p = c.desc().p;
  return FieldElement(c.desc(), c.numerator().inflate(p), c.denominator().inflate(p));
}

std::vector<FieldElement> q_component_split(const FieldElement& c, std::uint64_t q) {
  const FieldDesc desc = c.desc();
  if (q == 1) return {c};
  // c = N/Q = N Q^{q-1} / Q^q and Q^q(s) = Q(s^q).
  const UniPoly lifted = c.numerator() * c.denominator().pow(q - 1);
  std::vector<std::vector<Residue>> parts(q);
  const auto& coeffs = lifted.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    auto& part = parts[i % q];
    const std::size_t e = i / q;
    if (part.size() <= e) part.resize(e + 1, 0);
    part[e] = coeffs[i];
  }
  std::vector<FieldElement> out;
  out.reserve(q);
  for (auto& part : parts) {
    out.emplace_back(desc, UniPoly(desc.p, std::move(part)), c.denominator());
  }
  return out;
}

std::vector<FieldElement> p_component_split(const FieldElement& c) {
  return q_component_split(c, c.desc().p);
}

FieldElement embed_up(const FieldElement& c) {
  const std::size_t p = c.desc().p;
  return FieldElement(c.desc().up(), c.numerator().inflate(p), c.denominator().inflate(p));
}

// ---------------------------------------------------------------------------
// Vectors and matrices

Vector zero_vector(FieldDesc desc, std::size_t n) {
  return Vector(n, FieldElement::zero(desc));
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& c) { return c.is_zero(); });
}

Vector frobenius_vector(const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(frobenius_scalar(c));
  return out;
}

Matrix::Matrix(FieldDesc desc, std::size_t rows, std::size_t cols)
    : desc_(desc), cols_(cols), rows_(rows) {}

Matrix Matrix::identity(FieldDesc desc, std::size_t n) {
  Matrix m(desc, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, FieldElement::one(desc));
  return m;
}

Matrix Matrix::from_rows(FieldDesc desc, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(desc, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("ragged row");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(FieldDesc desc, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(desc, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionMismatch("ragged column");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

FieldElement Matrix::at(std::size_t i, std::size_t j) const {
  if (j >= cols_) throw DimensionMismatch("column index out of range");
  const auto& r = rows_.at(i);
  auto it = r.find(j);
  return it == r.end() ? FieldElement::zero(desc_) : it->second;
}

void Matrix::set(std::size_t i, std::size_t j, const FieldElement& v) {
  if (j >= cols_) throw DimensionMismatch("column index out of range");
  if (!(v.desc() == desc_)) throw FieldMismatch("matrix entry from another field");
  auto& r = rows_.at(i);
  if (v.is_zero()) {
    r.erase(j);
  } else {
    r.insert_or_assign(j, v);
  }
}

void Matrix::add_to(std::size_t i, std::size_t j, const FieldElement& v) {
  if (v.is_zero()) return;
  auto& r = rows_.at(i);
  auto it = r.find(j);
  if (it == r.end()) {
    set(i, j, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) r.erase(it);
}

Vector Matrix::column(std::size_t j) const {
  Vector v = zero_vector(desc_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    auto it = rows_[i].find(j);
    if (it != rows_[i].end()) v[i] = it->second;
  }
  return v;
}

std::size_t Matrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows()) throw DimensionMismatch("matrix product shape");
  if (!(desc_ == o.desc_)) throw FieldMismatch("matrix product across fields");
  Matrix out(desc_, rows(), o.cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (const auto& [k, a] : rows_[i]) {
      for (const auto& [j, b] : o.rows_[k]) out.add_to(i, j, a * b);
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape");
  Vector out = zero_vector(desc_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (const auto& [j, a] : rows_[i]) {
      if (!v[j].is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(desc_, cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (const auto& [j, a] : rows_[i]) t.set(j, i, a);
  }
  return t;
}

Matrix Matrix::frobenius_twist() const {
  Matrix out(desc_, rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (const auto& [j, a] : rows_[i]) out.rows_[i].emplace(j, frobenius_scalar(a));
  }
  return out;
}

Matrix Matrix::embedded_up() const {
  Matrix out(desc_.up(), rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (const auto& [j, a] : rows_[i]) out.rows_[i].emplace(j, embed_up(a));
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return desc_ == o.desc_ && cols_ == o.cols_ && rows_ == o.rows_;
}

namespace {

using Row = Matrix::Row;

// r += k * s
void axpy(Row& r, const FieldElement& k, const Row& s) {
  for (const auto& [c, v] : s) {
    auto it = r.find(c);
    if (it == r.end()) {
      r.emplace(c, k * v);
    } else {
      it->second += k * v;
      if (it->second.is_zero()) r.erase(it);
    }
  }
}

// Row echelon form built one row at a time; each stored row has leading
// coefficient 1 at its key column.
class Echelon {
 public:
  explicit Echelon(FieldDesc desc) : desc_(desc) {}

  void insert(Row r) {
    while (!r.empty()) {
      const std::size_t lead = r.begin()->first;
      const FieldElement lead_value = r.begin()->second;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        if (!lead_value.is_one()) {
          const FieldElement inv = lead_value.inverse();
          for (auto& [c, v] : r) v = v * inv;
        }
        pivots_.emplace(lead, std::move(r));
        return;
      }
      axpy(r, -lead_value, it->second);
    }
  }

  void reduce() {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      const std::size_t col = it->first;
      const Row& pivot = it->second;
      for (auto jt = pivots_.begin(); jt != pivots_.end() && jt->first < col; ++jt) {
        auto entry = jt->second.find(col);
        if (entry == jt->second.end()) continue;
        const FieldElement k = -entry->second;
        axpy(jt->second, k, pivot);
      }
    }
  }

  const std::map<std::size_t, Row>& pivots() const noexcept { return pivots_; }

 private:
  FieldDesc desc_;
  std::map<std::size_t, Row> pivots_;
};

Echelon echelon_of(const Matrix& m) {
  Echelon e(m.desc());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (e.pivots().size() == m.cols()) break;
    if (!m.row(i).empty()) e.insert(m.row(i));
  }
  return e;
}

}  // namespace

std::vector<Vector> kernel_basis(const Matrix& m) {
  Echelon e = echelon_of(m);
  e.reduce();
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (e.pivots().count(f)) continue;
    Vector v = zero_vector(m.desc(), m.cols());
    v[f] = FieldElement::one(m.desc());
    for (const auto& [c, row] : e.pivots()) {
      auto it = row.find(f);
      if (it != row.end()) v[c] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& m) { return echelon_of(m).pivots().size(); }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length");
  const std::size_t n = m.cols();
  Echelon e(m.desc());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Row r = m.row(i);
    if (!b[i].is_zero()) r.emplace(n, b[i]);
    if (!r.empty()) e.insert(std::move(r));
  }
  if (e.pivots().count(n)) return std::nullopt;
  e.reduce();
  Vector x = zero_vector(m.desc(), n);
  for (const auto& [c, row] : e.pivots()) {
    auto it = row.find(n);
    if (it != row.end()) x[c] = it->second;
  }
  return x;
}

}  // namespace frobcert
