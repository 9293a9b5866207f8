// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "frobcert/certify.hpp"
#include "frobcert/selftest.hpp"

using namespace frobcert;

namespace {

struct Checks {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

CohomClass sym(const GradedHypersurface& h, int a, int b, int c) {
  return CohomClass::basis(h.field(), {a, b, c});
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(FROBCERT_CLI) + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void criterion1(Checks& c) {
  const GradedHypersurface h = make_example(2);
  const FieldElement t = FieldElement::t(h.field());
  c.expect(a_invariant(h) == 3, "a(R) != 3");
  const std::vector<CechSymbol> expected{{1, 1, 1}, {2, 2, 2}, {2, 1, 4}};
  auto basis = basis_of_degree(h, 0).basis;
  std::sort(basis.begin(), basis.end());
  auto sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  c.expect(basis == sorted, "degree-0 basis differs from {[x/yz],[x^2/y^2z^2],[x^2/yz^4]}");
  const CohomClass e1 = sym(h, 1, 1, 1), e2 = sym(h, 2, 2, 2), e3 = sym(h, 2, 1, 4);
  c.expect(frobenius_class(h, e1) == e2, "F(eta1) != eta2");
  c.expect(frobenius_class(h, e2) == e1, "F(eta2) != eta1");
  c.expect(frobenius_class(h, e3) == e1.scaled(t), "F(eta3) != t eta1");

  const auto gens = jacobian(h.f());
  for (const auto& [var, k] : std::vector<std::pair<int, int>>{{1, 7}, {2, 11}}) {
    Exponents e{0, 0, 0};
    e[var] = k;
    const auto w = ideal_membership_homogeneous(MPoly::monomial(h.ring(), e), gens);
    c.expect(w && w->verify(), "no verifying witness for power " + std::to_string(k));
    Exponents lower = e;
    lower[var] = k - 1;
    c.expect(!ideal_membership_homogeneous(MPoly::monomial(h.ring(), lower), gens),
             "a smaller power is already in Jac(f)");
  }
  const PowerContainment pc = jacobian_power_containment(h.f(), false);
  c.expect(pc.exponents == std::vector<int>{2, 7, 11}, "Jacobian exponents != (2,7,11)");
  const int rhs = hara_rhs(h, pc.exponents);
  c.expect(rhs == 13, "Hara threshold is not 2n > 13");
  c.expect(hara_bound(h, pc.exponents) == 7, "injectivity bound is not n > 6");
}

void criterion2(Checks& c) {
  const GradedHypersurface h = make_example(2);
  const GradedHypersurface up = h.base_changed();
  const PLinearMap phi = base_change_map(frobenius_matrix_on_piece(h, 0));
  const auto kernel = semilinear_kernel(phi);
  c.expect(kernel.size() == 1, "level-1 kernel is not 1-dimensional");
  const FieldDesc k = up.field();
  const FieldElement s = FieldElement::generator(k);
  // t^{1/2} eta2 + eta3
  const CohomClass v = sym(up, 2, 2, 2).scaled(s) + sym(up, 2, 1, 4);
  const GradedPiece piece = basis_of_degree(up, 0);
  if (kernel.size() == 1) {
    const Vector w = piece.coordinates(v);
    c.expect(in_span(kernel, w), "(0, t^{1/2}, 1) does not span the kernel");
    c.expect(primitive_normalized(kernel[0]) == w, "normalized kernel vector != (0, t^{1/2}, 1)");
  }
  c.expect(frobenius_class(up, v).is_zero(), "F(t^{1/2} eta2 + eta3) != 0");
}

void criterion3(Checks& c) {
  for (int p : {3, 5, 7}) {
    const std::string tag = "p=" + std::to_string(p) + ": ";
    const GradedHypersurface h = make_example(p);
    const FieldElement t = FieldElement::t(h.field());
    c.expect(a_invariant(h) == 2 * p * p - 6 * p + 2, tag + "a(R) != 2p^2-6p+2");
    const CohomClass a = sym(h, 1, 1, p), b = sym(h, 1, 2, 1);
    c.expect(frobenius_class(h, a) == a, tag + "F([x/(yz^p)]) != [x/(yz^p)]");
    c.expect(frobenius_class(h, b) == a.scaled(t), tag + "F([x/(y^2z)]) != t[x/(yz^p)]");
    c.expect(is_injective(frobenius_matrix_on_piece(h, 0)), tag + "degree-0 Frobenius not injective");

    const GradedHypersurface up = h.base_changed();
    const CohomClass v = sym(up, 1, 1, p).scaled(FieldElement::generator(up.field())) +
                         sym(up, 1, 2, 1).scaled(FieldElement::from_int(up.field(), p - 1));
    c.expect(frobenius_class(up, v).is_zero(), tag + "F(t^{1/p} eta1 + (p-1) eta2) != 0");
    const auto kernel = semilinear_kernel(base_change_map(frobenius_matrix_on_piece(h, 0)));
    c.expect(in_span(kernel, basis_of_degree(up, 0).coordinates(v)), tag + "vector outside computed kernel");

    const PowerContainment pc = jacobian_power_containment(h.f(), false);
    c.expect(pc.exponents == std::vector<int>{p - 2, 3 * p - 2, 2 * p * p - 3 * p}, tag + "Jacobian exponents");
    for (const auto& w : pc.witnesses) c.expect(w.verify(), tag + "Jacobian witness does not re-expand");
    c.expect(hara_bound(h, pc.exponents) == 3 * p - 6, tag + "bound is not n > 3p-7");
  }
}

void criterion4(Checks& c) {
  const GradedHypersurface h2 = make_example(2);
  for (int n = 7; n <= 20; ++n) {
    c.expect(is_injective(frobenius_matrix_on_piece(h2, -n)), "p=2: not injective in degree -" + std::to_string(n));
  }
  const GradedHypersurface h3 = make_example(3);
  for (int n = 3; n <= 15; ++n) {
    c.expect(is_injective(frobenius_matrix_on_piece(h3, -n)), "p=3: not injective in degree -" + std::to_string(n));
  }
}

void criterion5(Checks& c) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const std::string tag = "p=" + std::to_string(p) + ": ";
    const GradedHypersurface h = make_example(p);
    const FieldDesc k = h.field();
    const FieldElement one = FieldElement::one(k);
    TensorClass xi(k);
    if (p == 2) {
      // x^2u^2(z^2v + yw^2) / (y^2 z^4 v^2 w^4)
      xi = reduce_enveloping(h, {{one, {2, 0, 2}, {2, 1, 0}}, {one, {2, 1, 0}, {2, 0, 2}}}, 2, 4, 2, 4);
    } else {
      // xu(v z^{p-1} - y w^{p-1}) / (y^2 z^p v^2 w^p)
      const int q = static_cast<int>(p);
      xi = reduce_enveloping(h, {{one, {1, 0, q - 1}, {1, 1, 0}}, {-one, {1, 1, 0}, {1, 0, q - 1}}}, 2, q,
                             2, q);
    }
    c.expect(!xi.is_zero(), tag + "footnote class is zero");
    c.expect(enveloping_frobenius_on_class(h, xi).is_zero(), tag + "footnote class survives F");

    // gamma1 (x) gamma2' - gamma2 (x) gamma1' with F(gamma2) = t F(gamma1).
    const FieldElement t = FieldElement::t(k);
    const GradedPiece piece = basis_of_degree(h, 0);
    bool found = false;
    for (const auto& g1 : piece.basis) {
      for (const auto& g2 : piece.basis) {
        if (found || g1 == g2) continue;
        const CohomClass c1 = CohomClass::basis(k, g1), c2 = CohomClass::basis(k, g2);
        const CohomClass f1 = frobenius_class(h, c1);
        if (f1.is_zero() || !(frobenius_class(h, c2) == f1.scaled(t))) continue;
        found = true;
        const TensorClass combo = tensor(c1, c2) - tensor(c2, c1);
        c.expect(!combo.is_zero(), tag + "gamma combination is zero");
        c.expect(enveloping_frobenius_on_class(h, combo).is_zero(), tag + "gamma combination survives F");
      }
    }
    c.expect(found, tag + "no pair with F(gamma2) = t F(gamma1)");
    const EnvelopingCert e = certify_enveloping_not_f_injective(p);
    c.expect(e.footnote == xi, tag + "pipeline footnote class differs");
  }
}

void criterion6(Checks& c) {
  const auto dir = std::filesystem::temp_directory_path() / "frobcert_acceptance";
  std::filesystem::create_directories(dir);
  for (const char* claim : {"anti-nilpotent", "not-f-full"}) {
    for (int p : {2, 3, 5}) {
      const std::string tag = std::string(claim) + " p=" + std::to_string(p) + ": ";
      const auto a = dir / (std::string(claim) + std::to_string(p) + "a.json");
      const auto b = dir / (std::string(claim) + std::to_string(p) + "b.json");
      const std::string base = "certify " + std::string(claim) + " --p " + std::to_string(p) + " --out ";
      c.expect(run_cli(base + a.string()) == 0, tag + "first run did not exit 0");
      c.expect(run_cli(base + b.string()) == 0, tag + "second run did not exit 0");
      const std::string ta = slurp(a), tb = slurp(b);
      c.expect(!ta.empty() && ta == tb, tag + "outputs are not byte-identical");
      c.expect(run_cli("verify " + a.string()) == 0, tag + "verify did not exit 0");
      try {
        const Json cert = Json::parse(ta);
        c.expect(cert.at("verified").get<bool>(), tag + "certificate not marked verified");
        const VerifyReport r = verify_certificate(cert);
        c.expect(r.ok, tag + "in-process verification failed");
        c.expect(!cert.at("assumed").empty(), tag + "no assumption records");
        Json tampered = cert;
        if (std::string(claim) == "anti-nilpotent") {
          tampered["computed"]["degree0_map"]["matrix"][0][0] = "t^5+1";
        } else {
          tampered["computed"]["h2_dim"] = 99;
        }
        c.expect(!verify_certificate(tampered).ok, tag + "tampered certificate still verifies");
      } catch (const std::exception& e) {
        c.expect(false, tag + e.what());
      }
    }
  }
}

void criterion7(Checks& c) {
  const SelftestReport report = run_selftest(kDefaultSeed, 1000);
  c.expect(report.results.size() == 8, "expected 8 property suites");
  for (const auto& r : report.results) {
    c.expect(r.cases == 1000, r.name + ": case count");
    c.expect(r.failures == 0, r.name + ": " + r.first_failure);
  }
  const SelftestReport again = run_selftest(kDefaultSeed, 1000);
  for (std::size_t i = 0; i < report.results.size() && i < again.results.size(); ++i) {
    c.expect(report.results[i].digest == again.results[i].digest, report.results[i].name + ": case list differs");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<void(Checks&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "p=2 golden suite", 5, criterion1},
      {2, "p=2 base-change suite", 5, criterion2},
      {3, "p in {3,5,7} golden suite", 60, criterion3},
      {4, "negative-degree window", 0, criterion4},
      {5, "enveloping/Segre nilpotence", 0, criterion5},
      {6, "certificates", 0, criterion6},
      {7, "property suites", 30, criterion7},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && secs >= cr.limit_seconds) {
      checks.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(cr.limit_seconds));
    }
    const bool ok = checks.failures.empty();
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.name, secs);
    for (const auto& f : checks.failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
