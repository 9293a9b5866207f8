#ifndef FROBCERT_CERTIFY_HPP
#define FROBCERT_CERTIFY_HPP

// End-to-end pipelines over the example family
//
//   p = 2:  f = x^3 + t y z^7 + y^2 z^5 + y^3 z^3 + y^4 z + z^9,  weights (3,2,1)
//   p > 2:  f = x^{p-1} - t y^{2p-1} - y^{p-1} z^{p^2-p} - z^{2p^2-3p+1},
//           weights (2p-1, p-1, 1)
//
// over k = F_p(t). Each pipeline returns a typed result; `certificate` wraps
// one as JSON and `verify_certificate` recomputes it from p and the recorded
// options alone.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobcert/products.hpp"
#include "frobcert/serialize.hpp"

namespace frobcert {

GradedHypersurface make_example(std::uint32_t p);

enum class Pipeline { anti_nilpotence, segre };

/// Least n above the degree bound (6 for p = 2, 2p^2-6p+2 otherwise); the
/// Segre pipeline also needs n divisible by the lcm of the weights.
int default_veronese_index(std::uint32_t p, Pipeline pipeline);

struct CertifyOptions {
  std::optional<int> n;
  /// Veronese multiples -n*t checked for t = 1..window.
  int window = 3;
  /// Consecutive degrees checked past the Hara bound n0.
  int margin = 10;
  /// Segre H^3 pieces checked for t in [-segre_window, -1].
  int segre_window = 5;
  unsigned jobs = 1;
};

struct DegreeCheck {
  int degree = 0;
  std::size_t src_dim = 0;
  std::size_t dst_dim = 0;
  bool injective = false;
  /// Degree is a multiple of n or at most -n0, so T depends on it.
  bool required = false;
};

struct NormalityCert {
  std::uint32_t p = 0;
  GradedHypersurface hypersurface;
  PowerContainment containment;
};

struct FInjectivityCert {
  std::uint32_t p = 0;
  int n = 0;
  int a_invariant = 0;
  PowerContainment hara_powers;
  int hara_rhs = 0;
  int n0 = 0;
  GradedPiece degree0;
  bool degree0_injective = false;
  std::vector<DegreeCheck> negative_degrees;
};

struct AntiNilpotenceResult {
  FInjectivityCert f_injectivity;
  PLinearMap degree0_map;
  AntiNilpotenceWitness witness;
};

struct GeoFInjFailure {
  std::uint32_t p = 0;
  PLinearMap base_changed;
  std::size_t kernel_dim = 0;
  Vector kernel_vector;
  CohomClass image;
};

struct EnvelopingCert {
  std::uint32_t p = 0;
  CechSymbol gamma1;
  CechSymbol gamma2;
  TensorClass combination;
  TensorClass combination_image;
  TensorClass footnote;
  TensorClass footnote_image;
};

struct NonFFullCert {
  std::uint32_t p = 0;
  int n = 0;
  int weight_lcm = 0;
  bool standard_graded = false;
  FInjectivityCert t_injectivity;
  std::vector<KunnethReport> h2_report;
  std::vector<KunnethReport> h3_report;
  std::size_t h2_dim = 0;
  PLinearMap h2_map;
  bool h2_injective = false;
  std::vector<DegreeCheck> h3_checks;
  std::size_t kernel_dim = 0;
  Vector kernel_vector;
  CohomClass kernel_image;
};

NormalityCert certify_normality(std::uint32_t p, bool include_f);
FInjectivityCert certify_f_injective(std::uint32_t p, const CertifyOptions& options = {});
AntiNilpotenceResult certify_f_injective_not_anti_nilpotent(std::uint32_t p,
                                                            const CertifyOptions& options = {});
GeoFInjFailure certify_not_geometrically_f_injective(std::uint32_t p);
EnvelopingCert certify_enveloping_not_f_injective(std::uint32_t p);
NonFFullCert certify_not_f_full(std::uint32_t p, const CertifyOptions& options = {});

/// Footnote class in the tensor basis: eta2 (x) eta3' + eta3 (x) eta2' for
/// p = 2 and eta2 (x) eta1' - eta1 (x) eta2' otherwise.
TensorClass footnote_class(const GradedHypersurface& h);

/// Clears denominators, removes the content and makes the last nonzero
/// entry monic.
Vector primitive_normalized(const Vector& v);

const std::vector<std::string>& claim_names();

/// {"claim","paper_ref","computed","assumed","verified"}; `verified` is the
/// result of verify_certificate on the assembled document.
Json certificate(const std::string& claim, std::uint32_t p, const CertifyOptions& options = {},
                 bool include_f = true);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;
};

VerifyReport verify_certificate(const Json& cert, unsigned jobs = 1);

}  // namespace frobcert

#endif  // FROBCERT_CERTIFY_HPP
