#include "frobcert/selftest.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "frobcert/certify.hpp"

namespace frobcert {

bool SelftestReport::ok() const {
  for (const auto& r : results) {
    if (r.failures != 0 || r.cases == 0) return false;
  }
  return true;
}

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 rng_;
};

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

UniPoly random_poly(Draw& d, std::uint32_t p, int max_degree) {
  std::vector<Residue> c(static_cast<std::size_t>(d.range(0, max_degree)) + 1);
  for (auto& x : c) x = static_cast<Residue>(d.below(p));
  return UniPoly(p, std::move(c));
}

FieldElement random_element(Draw& d, FieldDesc k) {
  UniPoly num = random_poly(d, k.p, 5);
  UniPoly den = random_poly(d, k.p, 3);
  if (den.is_zero()) den = UniPoly::constant(k.p, 1);
  return FieldElement(k, std::move(num), std::move(den));
}

const std::vector<std::uint32_t> kSmallPrimes{2, 3, 5, 7};

const GradedHypersurface& example(std::uint32_t p) {
  static std::map<std::uint32_t, GradedHypersurface> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, make_example(p)).first;
  return it->second;
}

CechSymbol random_symbol(Draw& d, const GradedHypersurface& h) {
  return {d.range(0, h.m() - 1), d.range(1, 6), d.range(1, 6)};
}

CohomClass random_class(Draw& d, const GradedHypersurface& h) {
  CohomClass eta(h.field());
  const int terms = d.range(1, 3);
  for (int i = 0; i < terms; ++i) eta.add_term(random_symbol(d, h), random_element(d, h.field()));
  return eta;
}

PLinearMap random_map(Draw& d, FieldDesc k) {
  const std::size_t rows = static_cast<std::size_t>(d.range(1, 4));
  const std::size_t cols = static_cast<std::size_t>(d.range(1, 4));
  Matrix m(k, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (d.below(3) == 0) continue;
      // Small entries keep some maps singular.
      m.set(i, j, d.below(2) == 0 ? FieldElement::from_int(k, d.range(0, 2)) : random_element(d, k));
    }
  }
  std::vector<std::string> src, dst;
  for (std::size_t j = 0; j < cols; ++j) src.push_back("e" + std::to_string(j));
  for (std::size_t i = 0; i < rows; ++i) dst.push_back("f" + std::to_string(i));
  return PLinearMap(src, dst, std::move(m), 1);
}

// Direct counts used as oracles for the Kunneth dimensions.
std::size_t count_symbols(const GradedHypersurface& h, int degree) {
  std::size_t n = 0;
  for (int a = 0; a < h.m(); ++a) {
    for (int b = 1; b <= 400; ++b) {
      for (int c = 1; c <= 400; ++c) {
        if (h.symbol_degree({a, b, c}) == degree) ++n;
      }
    }
  }
  return n;
}

std::size_t count_monomials(const GradedHypersurface& h, int degree) {
  if (degree < 0) return 0;
  std::size_t n = 0;
  for (int a = 0; a < h.m(); ++a) {
    for (int e = 0; e <= degree; ++e) {
      for (int g = 0; g <= degree; ++g) {
        if (weighted_degree({a, e, g}, *h.ring()) == degree) ++n;
      }
    }
  }
  return n;
}

using Case = std::function<std::string(Draw&, std::string&)>;

PropertyResult run_property(const std::string& name, std::uint64_t seed, std::size_t cases,
                            const Case& body) {
  PropertyResult r{name, 0, 0, "", 14695981039346656037ull};
  Draw d(fnv1a(seed, name));
  for (std::size_t i = 0; i < cases; ++i) {
    std::string description;
    std::string error;
    try {
      error = body(d, description);
    } catch (const std::exception& e) {
      error = e.what();
    }
    r.digest = fnv1a(r.digest, description);
    ++r.cases;
    if (!error.empty()) {
      if (r.failures == 0) r.first_failure = description + ": " + error;
      ++r.failures;
    }
  }
  return r;
}

#ifdef FROBCERT_INJECT_FAULT
constexpr bool kFault = true;
#else
constexpr bool kFault = false;
#endif

}  // namespace

SelftestReport run_selftest(std::uint64_t seed, std::size_t cases) {
  SelftestReport report{seed, {}};

  report.results.push_back(run_property("p_component_split roundtrip", seed, cases,
                                        [](Draw& d, std::string& desc) -> std::string {
    const FieldDesc k{d.pick(kSmallPrimes), static_cast<unsigned>(d.below(2))};
    const FieldElement c = random_element(d, k);
    desc = std::to_string(k.p) + ":" + std::to_string(k.level) + ":" + c.to_string();
    const auto parts = p_component_split(c);
    FieldElement back = FieldElement::zero(k);
    FieldElement basis = FieldElement::one(k);
    for (const auto& w : parts) {
      back += frobenius_scalar(w) * basis;
      basis *= FieldElement::generator(k);
    }
    if (kFault) back += FieldElement::one(k);
    if (parts.size() != k.p) return "wrong number of components";
    return back == c ? "" : "reconstruction " + back.to_string();
  }));

  report.results.push_back(run_property("frobenius scalar homomorphism", seed, cases,
                                        [](Draw& d, std::string& desc) -> std::string {
    const FieldDesc k{d.pick(kSmallPrimes), static_cast<unsigned>(d.below(2))};
    const FieldElement a = random_element(d, k);
    const FieldElement b = random_element(d, k);
    desc = std::to_string(k.p) + ":" + a.to_string() + ":" + b.to_string();
    if (!(frobenius_scalar(a + b) == frobenius_scalar(a) + frobenius_scalar(b))) return "not additive";
    if (!(frobenius_scalar(a * b) == frobenius_scalar(a) * frobenius_scalar(b))) return "not multiplicative";
    if (!(frobenius_scalar(a) == a.pow(k.p))) return "differs from a^p";
    if (!frobenius_scalar(FieldElement::one(k)).is_one()) return "F(1) != 1";
    return "";
  }));

  report.results.push_back(run_property("cech reduction well-defined", seed, cases,
                                        [](Draw& d, std::string& desc) -> std::string {
    const GradedHypersurface& h = example(d.pick(std::vector<std::uint32_t>{2, 3, 5}));
    const int a = d.range(0, h.m() - 1);
    const Exponents e{d.range(0, 2), d.range(0, 4), d.range(0, 6)};
    const int b = d.range(1, 10);
    const int c = d.range(1, 12);
    const FieldElement k = random_element(d, h.field());
    desc = std::to_string(h.field().p) + ":" + std::to_string(a) + ":" + std::to_string(e[0]) + "," +
           std::to_string(e[1]) + "," + std::to_string(e[2]) + ":" + std::to_string(b) + "," +
           std::to_string(c) + ":" + k.to_string();
    const MPoly hpoly = MPoly::monomial(h.ring(), e, k);
    const MPoly lhs = MPoly::monomial(h.ring(), {a + h.m(), 0, 0}) * hpoly;
    const MPoly rhs = MPoly::monomial(h.ring(), {a, 0, 0}) * h.g() * hpoly;
    return reduce_to_cech(h, lhs, b, c) == reduce_to_cech(h, rhs, b, c) ? "" : "classes differ";
  }));

  report.results.push_back(run_property("frobenius_class semilinear", seed, cases,
                                        [](Draw& d, std::string& desc) -> std::string {
    const GradedHypersurface& h = example(d.pick(std::vector<std::uint32_t>{2, 3, 5}));
    const CohomClass eta = random_class(d, h);
    const CohomClass zeta = random_class(d, h);
    const FieldElement c = random_element(d, h.field());
    desc = std::to_string(h.field().p) + ":" + c.to_string();
    for (const auto& [s, x] : eta.terms()) desc += ":" + symbol_text(s) + x.to_string();
    for (const auto& [s, x] : zeta.terms()) desc += ":" + symbol_text(s) + x.to_string();
    if (!(frobenius_class(h, eta.scaled(c)) == frobenius_class(h, eta).scaled(frobenius_scalar(c)))) {
      return "F(c eta) != c^p F(eta)";
    }
    if (!(frobenius_class(h, eta + zeta) == frobenius_class(h, eta) + frobenius_class(h, zeta))) {
      return "not additive";
    }
    return "";
  }));

  report.results.push_back(run_property("kernel vectors re-verify", seed, cases,
                                        [](Draw& d, std::string& desc) -> std::string {
    const FieldDesc k{d.pick(kSmallPrimes), static_cast<unsigned>(d.below(2))};
    const PLinearMap phi = random_map(d, k);
    desc = std::to_string(k.p) + ":" + std::to_string(k.level);
    for (std::size_t i = 0; i < phi.matrix().rows(); ++i) {
      for (std::size_t j = 0; j < phi.matrix().cols(); ++j) desc += "," + phi.matrix().at(i, j).to_string();
    }
    for (const auto& v : semilinear_kernel(phi)) {
      if (!is_zero_vector(phi.apply(v))) return "M v^(p) != 0";
    }
    return "";
  }));

  report.results.push_back(run_property("rank plus nullity", seed, cases,
                                        [](Draw& d, std::string& desc) -> std::string {
    const FieldDesc k{d.pick(kSmallPrimes), static_cast<unsigned>(d.below(2))};
    const PLinearMap phi = random_map(d, k);
    desc = std::to_string(k.p) + ":" + std::to_string(k.level);
    for (std::size_t i = 0; i < phi.matrix().rows(); ++i) {
      for (std::size_t j = 0; j < phi.matrix().cols(); ++j) desc += "," + phi.matrix().at(i, j).to_string();
    }
    const Matrix e = expanded_matrix(phi);
    const std::size_t r = rank(e);
    const std::size_t nullity = kernel_basis(e).size();
    if (r + nullity != phi.src().size()) return "rank + nullity != cols";
    if (semilinear_kernel(phi).size() != nullity) return "semilinear kernel size differs";
    return "";
  }));

  report.results.push_back(run_property("kunneth factorization", seed, cases,
                                        [](Draw& d, std::string& desc) -> std::string {
    const GradedHypersurface& h = example(d.pick(std::vector<std::uint32_t>{2, 3}));
    const int n = weight_lcm(h) * d.range(1, 2);
    const int t = d.range(-5, 5);
    const int ell = d.range(2, 3);
    desc = std::to_string(h.field().p) + ":" + std::to_string(n) + ":" + std::to_string(t) + ":" +
           std::to_string(ell);
    const VeroneseView view(h, n);
    const PolyRingH2 s{h.field(), 1, 1};
    const std::size_t got = kunneth_piece_dims(view, s, ell, t).dim;
    // b, c >= 1 with b + c = -t.
    const std::size_t s_h2 = t <= -2 ? static_cast<std::size_t>(-t - 1) : 0;
    const std::size_t s_ring = t >= 0 ? static_cast<std::size_t>(t + 1) : 0;
    const std::size_t t_h2 = count_symbols(h, t * n);
    const std::size_t t_ring = count_monomials(h, t * n);
    const std::size_t expected = ell == 3 ? t_h2 * s_h2 : t_ring * s_h2 + t_h2 * s_ring;
    return got == expected ? "" : "got " + std::to_string(got) + " expected " + std::to_string(expected);
  }));

  report.results.push_back(run_property("degree-0 blocks by x-exponent", seed, cases,
                                        [](Draw& d, std::string& desc) -> std::string {
    static std::map<std::uint32_t, PLinearMap> maps;
    const std::uint32_t p = d.pick(std::vector<std::uint32_t>{3, 5, 7});
    auto it = maps.find(p);
    if (it == maps.end()) it = maps.emplace(p, frobenius_matrix_on_piece(example(p), 0)).first;
    const PLinearMap& phi = it->second;
    const GradedPiece piece = basis_of_degree(example(p), 0);
    const std::size_t j = d.below(piece.dim());
    desc = std::to_string(p) + ":" + std::to_string(j);
    const Matrix columns = phi.matrix().transposed();
    for (const auto& [row, v] : columns.row(j)) {
      if (piece.basis[row].a != piece.basis[j].a) return "column leaves its x-exponent block";
    }
    return "";
  }));

  return report;
}

std::string format_report(const SelftestReport& report) {
  std::ostringstream out;
  out << "seed " << report.seed << "\n";
  for (const auto& r : report.results) {
    out << (r.failures == 0 ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, "
        << r.failures << " failures, digest " << std::hex << r.digest << std::dec << "\n";
    if (r.failures != 0) out << "  first failure: " << r.first_failure << "\n";
  }
  return out.str();
}

}  // namespace frobcert
