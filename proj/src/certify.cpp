#include "frobcert/certify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

namespace frobcert {

// ---------------------------------------------------------------------------
// Example family

GradedHypersurface make_example(std::uint32_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const FieldDesc k{p, 0};
  if (p == 2) {
    auto ring = make_ring(k, {{"x", 3}, {"y", 2}, {"z", 1}});
    return GradedHypersurface(
        MPoly::parse(ring, "x^3+(t)*y*z^7+y^2*z^5+y^3*z^3+y^4*z+z^9"));
  }
  const int q = static_cast<int>(p);
  auto ring = make_ring(k, {{"x", 2 * q - 1}, {"y", q - 1}, {"z", 1}});
  MPoly f = MPoly::monomial(ring, {q - 1, 0, 0});
  f.add_term({0, 2 * q - 1, 0}, -FieldElement::t(k));
  f.add_term({0, q - 1, q * q - q}, -FieldElement::one(k));
  f.add_term({0, 0, 2 * q * q - 3 * q + 1}, -FieldElement::one(k));
  return GradedHypersurface(std::move(f));
}

namespace {

int degree_bound(std::uint32_t p) {
  const int q = static_cast<int>(p);
  return p == 2 ? 6 : 2 * q * q - 6 * q + 2;
}

}  // namespace

int default_veronese_index(std::uint32_t p, Pipeline pipeline) {
  const int bound = degree_bound(p);
  if (pipeline == Pipeline::anti_nilpotence) return bound + 1;
  const int l = weight_lcm(make_example(p));
  return (bound / l + 1) * l;
}

// ---------------------------------------------------------------------------
// Helpers

namespace {

[[noreturn]] void fail(const std::string& step, const std::string& what) {
  throw CertificationFailure(step + ": " + what);
}

/// Runs f(0..count-1) on up to `jobs` threads, results in index order.
template <class R>
std::vector<R> parallel_map(std::size_t count, unsigned jobs,
                            const std::function<R(std::size_t)>& f) {
  std::vector<std::optional<R>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) { return (a * b).exact_div(gcd(a, b)); }

/// Basis of the K-span of the columns of m, canonical (RREF of the span).
std::vector<Vector> column_space(const Matrix& m) {
  const auto left_kernel = kernel_basis(m.transposed());
  if (left_kernel.empty()) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Vector e = zero_vector(m.desc(), m.rows());
      e[i] = FieldElement::one(m.desc());
      all.push_back(std::move(e));
    }
    return all;
  }
  return kernel_basis(Matrix::from_rows(m.desc(), m.rows(), left_kernel));
}

std::vector<int> weights_of(const GradedHypersurface& h) {
  std::vector<int> w;
  for (const auto& v : h.ring()->vars()) w.push_back(v.weight);
  return w;
}

}  // namespace

Vector primitive_normalized(const Vector& v) {
  if (is_zero_vector(v)) return v;
  const FieldDesc desc = v.front().desc();
  UniPoly den = UniPoly::constant(desc.p, 1);
  for (const auto& x : v) den = lcm(den, x.denominator());
  std::vector<UniPoly> nums;
  UniPoly content(desc.p);
  for (const auto& x : v) {
    nums.push_back(x.numerator() * den.exact_div(x.denominator()));
    content = gcd(content, nums.back());
  }
  UniPoly last(desc.p);
  for (const auto& n : nums) {
    if (!n.is_zero()) last = n;
  }
  const FieldElement scale(desc, UniPoly::constant(desc.p, last.exact_div(content).leading()));
  Vector out;
  for (const auto& n : nums) out.push_back(FieldElement(desc, n.exact_div(content)) / scale);
  return out;
}

// ---------------------------------------------------------------------------
// Pipelines

NormalityCert certify_normality(std::uint32_t p, bool include_f) {
  GradedHypersurface h = make_example(p);
  PowerContainment c = jacobian_power_containment(h.f(), include_f);
  for (const auto& w : c.witnesses) {
    if (!w.verify()) fail("normality", "witness for " + w.target.to_string() + " does not re-expand");
  }
  return NormalityCert{p, std::move(h), std::move(c)};
}

namespace {

std::vector<DegreeCheck> check_degrees(const GradedHypersurface& h, const std::vector<int>& degrees,
                                       int n, int n0, unsigned jobs) {
  return parallel_map<DegreeCheck>(degrees.size(), jobs, [&](std::size_t i) {
    const int d = degrees[i];
    const PLinearMap phi = frobenius_matrix_on_piece(h, d);
    return DegreeCheck{d, phi.src().size(), phi.dst().size(), is_injective(phi),
                       d % n == 0 || d <= -n0};
  });
}

}  // namespace

FInjectivityCert certify_f_injective(std::uint32_t p, const CertifyOptions& options) {
  if (options.window < 1 || options.margin < 0) fail("options", "window must be positive");
  GradedHypersurface h = make_example(p);
  const int n = options.n.value_or(default_veronese_index(p, Pipeline::anti_nilpotence));
  if (n < 1) fail("options", "Veronese index must be positive");
  const int a = a_invariant(h);
  if (n <= a) fail("positive degrees", "n = " + std::to_string(n) + " does not exceed a(R) = " + std::to_string(a));

  PowerContainment powers = jacobian_power_containment(h.f(), false);
  for (const auto& w : powers.witnesses) {
    if (!w.verify()) fail("jacobian powers", "witness does not re-expand");
  }
  const int rhs = hara_rhs(h, powers.exponents);
  const int n0 = hara_bound(h, powers.exponents);
  if (n < n0) fail("hara bound", "n = " + std::to_string(n) + " is below n0 = " + std::to_string(n0));

  GradedPiece degree0 = basis_of_degree(h, 0);
  const bool injective0 = is_injective(frobenius_matrix_on_piece(h, 0));
  if (!injective0) fail("degree 0", "Frobenius on [H^2(R)]_0 is not injective");

  std::set<int, std::greater<>> degrees;
  for (int t = 1; t <= options.window; ++t) degrees.insert(-n * t);
  for (int d = 1; d <= n0 + options.margin; ++d) degrees.insert(-d);
  const std::vector<int> list(degrees.begin(), degrees.end());
  std::vector<DegreeCheck> checks = check_degrees(h, list, n, n0, options.jobs);
  for (const auto& c : checks) {
    if (c.required && !c.injective) {
      fail("negative degrees", "Frobenius is not injective in degree " + std::to_string(c.degree));
    }
  }
  for (int t = 1; t <= options.window; ++t) {
    if (veronese_piece(VeroneseView(h, n), t).dim() != 0) {
      fail("positive degrees", "piece " + std::to_string(t) + " of the Veronese is nonzero");
    }
  }
  return FInjectivityCert{p, n, a, std::move(powers), rhs, n0, std::move(degree0), injective0,
                          std::move(checks)};
}

AntiNilpotenceResult certify_f_injective_not_anti_nilpotent(std::uint32_t p,
                                                            const CertifyOptions& options) {
  FInjectivityCert finj = certify_f_injective(p, options);
  const GradedHypersurface h = make_example(p);
  PLinearMap phi = frobenius_matrix_on_piece(h, 0);
  // K F(H) is F-stable and contains every image, so any eta outside it works.
  const std::vector<Vector> v = column_space(phi.matrix());
  auto witness = stable_subspace_witness(phi, v);
  if (!witness) fail("stable subspace", "Frobenius image spans all of [H^2(R)]_0");
  if (!witness->verify(phi)) fail("stable subspace", "witness does not re-verify");
  return AntiNilpotenceResult{std::move(finj), std::move(phi), std::move(*witness)};
}

GeoFInjFailure certify_not_geometrically_f_injective(std::uint32_t p) {
  const GradedHypersurface h = make_example(p);
  const GradedHypersurface up = h.base_changed();
  PLinearMap phi = base_change_map(frobenius_matrix_on_piece(h, 0));
  if (!(phi == frobenius_matrix_on_piece(up, 0))) {
    fail("base change", "degree-0 matrix does not commute with base change");
  }
  const auto kernel = semilinear_kernel(phi);
  if (kernel.empty()) fail("base change", "Frobenius stays injective over k^{1/p}");
  Vector v = primitive_normalized(kernel.front());
  CohomClass image = frobenius_class(up, basis_of_degree(up, 0).to_class(v));
  if (!image.is_zero()) fail("base change", "kernel vector has nonzero image");
  return GeoFInjFailure{p, std::move(phi), kernel.size(), std::move(v), std::move(image)};
}

TensorClass footnote_class(const GradedHypersurface& h) {
  const FieldDesc k = h.field();
  const FieldElement one = FieldElement::one(k);
  if (k.p == 2) {
    return reduce_enveloping(h, {{one, {2, 0, 2}, {2, 1, 0}}, {one, {2, 1, 0}, {2, 0, 2}}}, 2, 4, 2, 4);
  }
  const int q = static_cast<int>(k.p);
  return reduce_enveloping(h, {{one, {1, 0, q - 1}, {1, 1, 0}}, {-one, {1, 1, 0}, {1, 0, q - 1}}}, 2,
                           q, 2, q);
}

EnvelopingCert certify_enveloping_not_f_injective(std::uint32_t p) {
  const GradedHypersurface h = make_example(p);
  const PLinearMap phi = frobenius_matrix_on_piece(h, 0);
  const GradedPiece piece = basis_of_degree(h, 0);
  const FieldElement t = FieldElement::t(h.field());
  const std::size_t d = piece.dim();
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  for (std::size_t i = 0; i < d && !pair; ++i) {
    const Vector ci = phi.matrix().column(i);
    if (is_zero_vector(ci)) continue;
    Vector target;
    for (const auto& x : ci) target.push_back(x * t);
    for (std::size_t j = 0; j < d; ++j) {
      if (j != i && phi.matrix().column(j) == target) {
        pair.emplace(i, j);
        break;
      }
    }
  }
  if (!pair) fail("enveloping", "no basis pair with F(gamma2) = t F(gamma1)");
  const CechSymbol g1 = piece.basis[pair->first];
  const CechSymbol g2 = piece.basis[pair->second];
  const auto c1 = CohomClass::basis(h.field(), g1);
  const auto c2 = CohomClass::basis(h.field(), g2);
  TensorClass combination = tensor(c1, c2) - tensor(c2, c1);
  TensorClass combination_image = enveloping_frobenius_on_class(h, combination);
  if (combination.is_zero()) fail("enveloping", "gamma combination is zero");
  if (!combination_image.is_zero()) fail("enveloping", "gamma combination survives Frobenius");
  TensorClass footnote = footnote_class(h);
  TensorClass footnote_image = enveloping_frobenius_on_class(h, footnote);
  if (footnote.is_zero()) fail("enveloping", "footnote class is zero");
  if (!footnote_image.is_zero()) fail("enveloping", "footnote class survives Frobenius");
  return EnvelopingCert{p,        g1,       g2, std::move(combination), std::move(combination_image),
                        std::move(footnote), std::move(footnote_image)};
}

NonFFullCert certify_not_f_full(std::uint32_t p, const CertifyOptions& options) {
  if (options.segre_window < 1) fail("options", "segre window must be positive");
  const GradedHypersurface h = make_example(p);
  const int n = options.n.value_or(default_veronese_index(p, Pipeline::segre));
  if (n < 1) fail("options", "Veronese index must be positive");
  const VeroneseView t(h, n);
  const int l = weight_lcm(h);
  if (!veronese_standardness_check(t)) {
    fail("standard grading", "n = " + std::to_string(n) + " is not divisible by " + std::to_string(l));
  }
  CertifyOptions inner = options;
  inner.n = n;
  FInjectivityCert tinj = certify_f_injective(p, inner);

  const PolyRingH2 s{h.field(), 1, 1};
  std::vector<KunnethReport> h2, h3;
  std::size_t h2_dim = 0;
  for (int deg = -options.segre_window; deg <= options.segre_window; ++deg) {
    h2.push_back(kunneth_piece_dims(t, s, 2, deg));
    h3.push_back(kunneth_piece_dims(t, s, 3, deg));
    h2_dim += h2.back().dim;
  }
  const std::size_t dim0 = basis_of_degree(h, 0).dim();
  if (h2_dim != dim0) fail("kunneth", "H^2 of the Segre product is not [H^2(R)]_0");

  PLinearMap h2_map = segre_h2_frobenius(t, s);
  const bool h2_injective = is_injective(h2_map);
  if (!h2_injective) fail("segre H^2", "Frobenius on H^2 is not injective");

  std::vector<int> h3_degrees;
  for (int deg = -1; deg >= -options.segre_window; --deg) h3_degrees.push_back(deg);
  std::vector<DegreeCheck> h3_checks =
      parallel_map<DegreeCheck>(h3_degrees.size(), options.jobs, [&](std::size_t i) {
        const PLinearMap phi = segre_h3_frobenius_piece(t, s, h3_degrees[i]);
        return DegreeCheck{h3_degrees[i], phi.src().size(), phi.dst().size(), is_injective(phi), true};
      });
  for (std::size_t i = 0; i < h3_checks.size(); ++i) {
    const auto& c = h3_checks[i];
    if (!c.injective) fail("segre H^3", "Frobenius is not injective in degree " + std::to_string(c.degree));
    const std::size_t expected = kunneth_piece_dims(t, s, 3, c.degree).dim;
    if (c.src_dim != expected) fail("segre H^3", "piece dimension disagrees with the Kunneth count");
  }

  const GradedHypersurface up = h.base_changed();
  const auto kernel = semilinear_kernel(base_change_map(h2_map));
  if (kernel.empty()) fail("base change", "Frobenius on H^2 stays injective over k^{1/p}");
  Vector v = primitive_normalized(kernel.front());
  CohomClass image = frobenius_class(up, basis_of_degree(up, 0).to_class(v));
  if (!image.is_zero()) fail("base change", "kernel vector has nonzero image");

  return NonFFullCert{p,           n,           l,          true,         std::move(tinj),
                      std::move(h2), std::move(h3), h2_dim, std::move(h2_map), h2_injective,
                      std::move(h3_checks), kernel.size(), std::move(v), std::move(image)};
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

Json assumption(const char* ref, const char* quote) { return Json{{"ref", ref}, {"quote", quote}}; }

const Json kCohenMacaulay = assumption(
    "hypersurface depth",
    "R is a two-dimensional hypersurface, hence Cohen-Macaulay; H^0 and H^1 at the maximal ideal vanish "
    "and only H^2 is computed.");
const Json kJacobian = assumption(
    "Stacks 038W; Serre's criterion",
    "Powers of x, y, z in the Jacobian ideal make the singular locus the origin over every field "
    "extension, so the normal surface R is geometrically normal.");
const Json kHaraTail = assumption(
    "Jacobian degree bound",
    "With x_i^{k_i} in Jac(f), Frobenius is injective on [H^2(R)]_{-n} whenever p*n > sum k_i w_i - 2 deg f; "
    "this covers every degree below the computed window.");
const Json kVeronese = assumption(
    "GW78 Veronese local cohomology",
    "[H^i(R^(n))]_t = [H^i(R)]_{tn} for the n-th Veronese subring.");
const Json kPurity = assumption(
    "HR74 Prop 6.15(b)",
    "A pure subring of a geometrically normal ring is geometrically normal; Veronese and Segre subrings "
    "are direct summands.");
const Json kGradedLocal = assumption(
    "DM24 Thm 5.10",
    "An N-graded ring is F-injective iff its localization at the homogeneous maximal ideal is.");
const Json kStable = assumption(
    "F-stable socle subspace",
    "A subspace V of [H^2(T)]_0 is killed by the positive part of T (positive pieces vanish), so it is an "
    "F-stable submodule; eta outside V with F(eta) in V makes Frobenius on H^2/V non-injective.");
const Json kFlatBase = assumption(
    "flat base change",
    "Local cohomology commutes with the flat extension k -> k^{1/p}: [H^2(R')]_0 = [H^2(R)]_0 (x) k^{1/p}.");
const Json kTensorTop = assumption(
    "tensor local cohomology",
    "H^4 of R (x)_k R' is H^2(R) (x)_k H^2(R'); Segre squares see the bidegree (0,0) part.");
const Json kDM24A = assumption(
    "DM24 Theorem A",
    "If T is F-injective then so are T[u,v] and its localization at the homogeneous maximal ideal.");
const Json kSummand = assumption(
    "graded direct summand",
    "H^2(T) # H^2(k[u,v]) is a graded direct summand of H^2(T) (x) H^2(k[u,v]) = H^4(T[u,v]), so "
    "injectivity of Frobenius restricts to H^3 of the Segre product.");
const Json kKunneth = assumption(
    "Kunneth formula",
    "H^l(T # S) = T # H^l(S) + H^l(T) # S + sum_{i+j=l+1} H^i(T) # H^j(S) for the Segre product.");
const Json kDDM21Finite = assumption(
    "DDM21 Thm 4.9",
    "For an equidimensional F-full local ring whose lower local cohomology modules are finite-dimensional "
    "over the residue field, Frobenius acts injectively on them.");
const Json kDDM21Ascent = assumption(
    "DDM21 Prop 3.8",
    "F-fullness ascends along flat local maps of F-finite rings with Cohen-Macaulay closed fiber; the "
    "fiber of A -> A (x)_k k^{1/p} is Artinian.");
const Json kNonCM = assumption(
    "Segre product depth",
    "A = T # k[u,v] has dimension 3 and nonzero H^2, so it is not Cohen-Macaulay.");

Json checks_to_json(const std::vector<DegreeCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    out.push_back(Json{{"degree", c.degree},
                       {"src_dim", c.src_dim},
                       {"dst_dim", c.dst_dim},
                       {"injective", c.injective},
                       {"required", c.required}});
  }
  return out;
}

Json reports_to_json(const std::vector<KunnethReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) {
    Json summands = Json::array();
    for (const auto& s : r.summands) summands.push_back(Json{{"name", s.name}, {"dim", s.dim}});
    out.push_back(Json{{"t", r.t}, {"dim", r.dim}, {"summands", summands}});
  }
  return out;
}

Json containment_to_json(const PowerContainment& c) {
  Json w = Json::array();
  for (const auto& x : c.witnesses) w.push_back(witness_to_json(x));
  return Json{{"exponents", c.exponents}, {"cap", c.cap}, {"include_f", c.include_f}, {"witnesses", w}};
}

Json hypersurface_to_json(const GradedHypersurface& h) {
  return Json{{"f", h.f().to_string()},
              {"weights", weights_of(h)},
              {"m", h.m()},
              {"degree", h.degree()}};
}

Json finj_to_json(const FInjectivityCert& c, const CertifyOptions& o) {
  const GradedHypersurface h = make_example(c.p);
  Json degree0{{"basis", c.degree0.labels()},
               {"injective", c.degree0_injective},
               {"method", "semilinear kernel over the p-basis expansion"}};
  if (c.p != 2) degree0["note"] = "verified by alternative method";
  return Json{{"p", c.p},
              {"n", c.n},
              {"hypersurface", hypersurface_to_json(h)},
              {"a_invariant", c.a_invariant},
              {"n_exceeds_a", c.n > c.a_invariant},
              {"hara", Json{{"powers", containment_to_json(c.hara_powers)},
                            {"rhs", c.hara_rhs},
                            {"n0", c.n0},
                            {"n_at_least_n0", c.n >= c.n0}}},
              {"degree0", degree0},
              {"negative_degrees", checks_to_json(c.negative_degrees)},
              {"options", Json{{"window", o.window}, {"margin", o.margin}}}};
}

Json computed_for(const std::string& claim, std::uint32_t p, const CertifyOptions& o, bool include_f) {
  if (claim == "normality") {
    const NormalityCert c = certify_normality(p, include_f);
    return Json{{"p", p},
                {"hypersurface", hypersurface_to_json(c.hypersurface)},
                {"containment", containment_to_json(c.containment)}};
  }
  if (claim == "f-injective") {
    return finj_to_json(certify_f_injective(p, o), o);
  }
  if (claim == "anti-nilpotent") {
    const AntiNilpotenceResult r = certify_f_injective_not_anti_nilpotent(p, o);
    const GradedHypersurface h = make_example(p);
    const GradedPiece piece = basis_of_degree(h, 0);
    Json v = Json::array();
    for (const auto& x : r.witness.subspace) v.push_back(vector_to_json(x));
    return Json{{"f_injective", finj_to_json(r.f_injectivity, o)},
                {"degree0_map", map_to_json(r.degree0_map)},
                {"witness", Json{{"V", v},
                                 {"eta", vector_to_json(r.witness.eta)},
                                 {"image", vector_to_json(r.witness.image)},
                                 {"eta_class", class_to_json(h, piece.to_class(r.witness.eta))},
                                 {"image_class", class_to_json(h, piece.to_class(r.witness.image))}}}};
  }
  if (claim == "geo-f-injective") {
    const GeoFInjFailure g = certify_not_geometrically_f_injective(p);
    const GradedHypersurface up = make_example(p).base_changed();
    return Json{{"p", p},
                {"level", 1},
                {"map", map_to_json(g.base_changed)},
                {"kernel_dim", g.kernel_dim},
                {"kernel_vector", vector_to_json(g.kernel_vector)},
                {"vector_class", class_to_json(up, basis_of_degree(up, 0).to_class(g.kernel_vector))},
                {"image_class", class_to_json(up, g.image)},
                {"image_zero", g.image.is_zero()}};
  }
  if (claim == "enveloping") {
    const EnvelopingCert e = certify_enveloping_not_f_injective(p);
    const GradedHypersurface h = make_example(p);
    return Json{{"p", p},
                {"gamma1", symbol_text(e.gamma1)},
                {"gamma2", symbol_text(e.gamma2)},
                {"combination", tensor_to_json(h, e.combination)},
                {"combination_nonzero", !e.combination.is_zero()},
                {"combination_image", tensor_to_json(h, e.combination_image)},
                {"footnote", tensor_to_json(h, e.footnote)},
                {"footnote_nonzero", !e.footnote.is_zero()},
                {"footnote_image", tensor_to_json(h, e.footnote_image)}};
  }
  if (claim == "not-f-full") {
    const NonFFullCert c = certify_not_f_full(p, o);
    const GradedHypersurface up = make_example(p).base_changed();
    CertifyOptions inner = o;
    inner.n = c.n;
    return Json{{"p", p},
                {"n", c.n},
                {"weight_lcm", c.weight_lcm},
                {"standard_graded", c.standard_graded},
                {"t_f_injective", finj_to_json(c.t_injectivity, inner)},
                {"kunneth", Json{{"h2", reports_to_json(c.h2_report)}, {"h3", reports_to_json(c.h3_report)}}},
                {"h2_dim", c.h2_dim},
                {"h2_map", map_to_json(c.h2_map)},
                {"h2_injective", c.h2_injective},
                {"h3_checks", checks_to_json(c.h3_checks)},
                {"base_change", Json{{"kernel_dim", c.kernel_dim},
                                     {"kernel_vector", vector_to_json(c.kernel_vector)},
                                     {"vector_class", class_to_json(up, basis_of_degree(up, 0).to_class(c.kernel_vector))},
                                     {"image_class", class_to_json(up, c.kernel_image)},
                                     {"image_zero", c.kernel_image.is_zero()}}},
                {"options", Json{{"segre_window", o.segre_window}}}};
  }
  throw CertificationFailure("unknown claim \"" + claim + "\"");
}

Json assumptions_for(const std::string& claim) {
  if (claim == "normality") return Json{kJacobian};
  if (claim == "f-injective") return Json{kCohenMacaulay, kHaraTail, kVeronese, kGradedLocal};
  if (claim == "anti-nilpotent") return Json{kCohenMacaulay, kHaraTail, kVeronese, kGradedLocal, kStable};
  if (claim == "geo-f-injective") return Json{kCohenMacaulay, kVeronese, kFlatBase};
  if (claim == "enveloping") return Json{kTensorTop, kGradedLocal};
  return Json{kCohenMacaulay, kHaraTail, kVeronese, kPurity, kJacobian, kGradedLocal, kDM24A,
              kKunneth, kSummand, kNonCM, kFlatBase, kDDM21Finite, kDDM21Ascent};
}

std::string label_for(const std::string& claim) {
  if (claim == "normality") return "geometrically normal isolated singularity from Jacobian power containment";
  if (claim == "f-injective") return "Veronese subring is F-injective";
  if (claim == "anti-nilpotent") return "Veronese subring is F-injective but not F-anti-nilpotent";
  if (claim == "geo-f-injective") return "Veronese subring is not geometrically F-injective";
  if (claim == "enveloping") return "enveloping algebra and Segre square are not F-injective";
  return "Segre product with k[u,v] is F-injective, geometrically normal, not F-full";
}

CertifyOptions options_from(const std::string& claim, const Json& computed) {
  CertifyOptions o;
  const Json* finj = nullptr;
  if (claim == "f-injective") finj = &computed;
  if (claim == "anti-nilpotent") finj = &computed.at("f_injective");
  if (claim == "not-f-full") {
    finj = &computed.at("t_f_injective");
    o.segre_window = computed.at("options").at("segre_window").get<int>();
  }
  if (finj) {
    o.n = finj->at("n").get<int>();
    o.window = finj->at("options").at("window").get<int>();
    o.margin = finj->at("options").at("margin").get<int>();
  }
  return o;
}

void check(VerifyReport& r, bool ok, const std::string& what) {
  if (!ok) {
    r.ok = false;
    r.failures.push_back(what);
  }
}

// Re-checks stored witnesses directly, independent of the recomputation.
void check_witnesses(VerifyReport& r, const std::string& claim, std::uint32_t p, const Json& c) {
  const GradedHypersurface h = make_example(p);
  const FieldDesc k = h.field();
  if (claim == "normality") {
    const auto gens = jacobian(h.f());
    const auto& cont = c.at("containment");
    const auto exps = cont.at("exponents").get<std::vector<int>>();
    const auto& ws = cont.at("witnesses");
    check(r, ws.size() == 3 && exps.size() == 3, "normality: expected three witnesses");
    for (std::size_t i = 0; i < ws.size() && i < exps.size(); ++i) {
      const MembershipWitness w = witness_from_json(h.ring(), ws[i]);
      Exponents e(3, 0);
      e[i] = exps[i];
      check(r, w.target == MPoly::monomial(h.ring(), e), "normality: witness target is not a variable power");
      check(r, w.verify(), "normality: witness " + std::to_string(i) + " does not re-expand");
      for (const auto& g : w.generators) {
        const bool known = std::find(gens.begin(), gens.end(), g) != gens.end() || g == h.f();
        check(r, known, "normality: generator outside (f) + Jac(f)");
      }
    }
  } else if (claim == "anti-nilpotent") {
    const PLinearMap phi = map_from_json(c.at("degree0_map"));
    AntiNilpotenceWitness w{{}, vector_from_json(k, c.at("witness").at("eta")),
                            vector_from_json(k, c.at("witness").at("image"))};
    for (const auto& v : c.at("witness").at("V")) w.subspace.push_back(vector_from_json(k, v));
    check(r, w.verify(phi), "anti-nilpotent: witness does not verify against the stored map");
  } else if (claim == "geo-f-injective" || claim == "not-f-full") {
    const Json& block = claim == "not-f-full" ? c.at("base_change") : c;
    const GradedHypersurface up = h.base_changed();
    const Vector v = vector_from_json(up.field(), block.at("kernel_vector"));
    check(r, !is_zero_vector(v), claim + ": kernel vector is zero");
    const CohomClass eta = class_from_json(up.field(), block.at("vector_class"));
    check(r, basis_of_degree(up, 0).to_class(v) == eta, claim + ": stored class differs from vector");
    check(r, frobenius_class(up, eta).is_zero(), claim + ": F(kernel class) is not zero");
    if (claim == "geo-f-injective") {
      const PLinearMap phi = map_from_json(c.at("map"));
      check(r, is_zero_vector(phi.apply(v)), claim + ": stored map does not kill the vector");
    }
  } else if (claim == "enveloping") {
    for (const char* key : {"combination", "footnote"}) {
      const TensorClass xi = tensor_from_json(k, c.at(key));
      check(r, !xi.is_zero(), std::string("enveloping: ") + key + " is zero");
      check(r, enveloping_frobenius_on_class(h, xi).is_zero(),
            std::string("enveloping: F(") + key + ") is not zero");
    }
  }
}

}  // namespace

const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names{"normality",       "f-injective", "anti-nilpotent",
                                              "geo-f-injective", "enveloping",  "not-f-full"};
  return names;
}

Json certificate(const std::string& claim, std::uint32_t p, const CertifyOptions& options,
                 bool include_f) {
  if (std::find(claim_names().begin(), claim_names().end(), claim) == claim_names().end()) {
    throw CertificationFailure("unknown claim \"" + claim + "\"");
  }
  Json cert{{"claim", claim},
            {"paper_ref", label_for(claim)},
            {"computed", computed_for(claim, p, options, include_f)},
            {"assumed", assumptions_for(claim)},
            {"verified", false}};
  cert["verified"] = verify_certificate(cert, options.jobs).ok;
  return cert;
}

VerifyReport verify_certificate(const Json& cert, unsigned jobs) {
  VerifyReport r;
  try {
    const std::string claim = cert.at("claim").get<std::string>();
    const Json& stored = cert.at("computed");
    const auto p = stored.contains("p") ? stored.at("p").get<std::uint32_t>()
                                        : stored.at("f_injective").at("p").get<std::uint32_t>();
    CertifyOptions o = options_from(claim, stored);
    o.jobs = jobs;
    bool include_f = true;
    if (claim == "normality") include_f = stored.at("containment").at("include_f").get<bool>();

    check(r, cert.at("paper_ref") == label_for(claim), "paper_ref does not match the claim");
    check(r, cert.at("assumed") == assumptions_for(claim), "assumption records differ");
    const Json fresh = computed_for(claim, p, o, include_f);
    for (const auto& [key, value] : fresh.items()) {
      check(r, stored.contains(key) && stored.at(key) == value, "computed." + key + " differs on recomputation");
    }
    for (const auto& [key, value] : stored.items()) {
      check(r, fresh.contains(key), "computed." + key + " is not produced by the pipeline");
    }
    check_witnesses(r, claim, p, stored);
  } catch (const std::exception& e) {
    check(r, false, e.what());
  }
  return r;
}

}  // namespace frobcert
