// frobcert: command-line front end.
//
//   frobcert example --p 2
//   frobcert basis --p 3 --degree 0
//   frobcert frobenius --p 2 --degree 0 --format json
//   frobcert certify not-f-full --p 5 --out cert.json
//   frobcert verify cert.json
//   frobcert selftest --seed 7
//
// Exit status: 0 verified / ok, 1 certification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "frobcert/certify.hpp"
#include "frobcert/selftest.hpp"

namespace {

using namespace frobcert;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Flags {
  std::uint32_t p = 2;
  std::optional<int> n;
  int degree = 0;
  std::optional<int> window;
  std::string format;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  std::size_t cases = 1000;
  std::string out;
  bool no_f = false;
  std::string claim;
  std::string in;
};

void emit(const Flags& flags, const std::string& text) {
  if (flags.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(flags.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + flags.out);
  file << text;
}

std::string join_weights(const GradedHypersurface& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.ring()->nvars(); ++i) {
    if (i) s += ",";
    s += std::to_string(h.ring()->weight(i));
  }
  return s + ")";
}

int cmd_example(const Flags& flags) {
  const GradedHypersurface h = make_example(flags.p);
  if (flags.format == "json") {
    std::vector<int> w;
    for (const auto& v : h.ring()->vars()) w.push_back(v.weight);
    Json j{{"p", flags.p},     {"f", h.f().to_string()}, {"weights", w},
           {"m", h.m()},       {"degree", h.degree()},   {"a_invariant", a_invariant(h)}};
    emit(flags, j.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream out;
  out << "field        F_" << flags.p << "(t)\n"
      << "f            " << h.f().to_string() << "\n"
      << "weights      " << join_weights(h) << "\n"
      << "deg f        " << h.degree() << "\n"
      << "m            " << h.m() << "\n"
      << "a-invariant  " << a_invariant(h) << "\n";
  emit(flags, out.str());
  return kOk;
}

GradedPiece piece_for(const GradedHypersurface& h, const Flags& flags) {
  if (flags.n) return veronese_piece(VeroneseView(h, *flags.n), flags.degree);
  return basis_of_degree(h, flags.degree);
}

int cmd_basis(const Flags& flags) {
  const GradedHypersurface h = make_example(flags.p);
  const GradedPiece piece = piece_for(h, flags);
  if (flags.format == "json") {
    emit(flags, piece_to_json(piece).dump(2) + "\n");
    return kOk;
  }
  std::ostringstream out;
  out << "degree " << piece.degree;
  if (flags.n) out << " of the " << *flags.n << "-th Veronese";
  out << ", dim " << piece.dim() << "\n";
  for (const auto& l : piece.labels()) out << "  " << l << "\n";
  emit(flags, out.str());
  return kOk;
}

int cmd_frobenius(const Flags& flags) {
  const GradedHypersurface h = make_example(flags.p);
  const int d = flags.n ? flags.degree * *flags.n : flags.degree;
  const PLinearMap phi = frobenius_matrix_on_piece(h, d);
  if (flags.format == "json") {
    emit(flags, map_to_json(phi).dump(2) + "\n");
    return kOk;
  }
  std::ostringstream out;
  out << "F: degree " << d << " -> degree " << d * static_cast<int>(flags.p) << ", "
      << phi.dst().size() << "x" << phi.src().size() << ", v -> M v^(p)\n";
  out << "src:";
  for (const auto& l : phi.src()) out << " " << l;
  out << "\ndst:";
  for (const auto& l : phi.dst()) out << " " << l;
  out << "\n";
  for (std::size_t i = 0; i < phi.matrix().rows(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < phi.matrix().cols(); ++j) {
      out << (j ? ", " : "") << phi.matrix().at(i, j).to_string();
    }
    out << "]\n";
  }
  out << "injective: " << (is_injective(phi) ? "yes" : "no") << "\n";
  emit(flags, out.str());
  return kOk;
}

std::string cert_summary(const Json& cert) {
  std::ostringstream out;
  out << "claim     " << cert.at("claim").get<std::string>() << "\n"
      << "statement " << cert.at("paper_ref").get<std::string>() << "\n"
      << "verified  " << (cert.at("verified").get<bool>() ? "yes" : "no") << "\n"
      << "assumed\n";
  for (const auto& a : cert.at("assumed")) out << "  - " << a.at("ref").get<std::string>() << "\n";
  out << "computed keys:";
  for (const auto& [k, v] : cert.at("computed").items()) out << " " << k;
  out << "\n";
  return out.str();
}

int cmd_certify(const Flags& flags) {
  CertifyOptions options;
  options.n = flags.n;
  if (flags.window) {
    options.window = *flags.window;
    options.segre_window = *flags.window;
  }
  options.jobs = flags.jobs;
  Json cert;
  try {
    cert = certificate(flags.claim, flags.p, options, !flags.no_f);
  } catch (const CertificationFailure& e) {
    std::cerr << e.what() << "\n";
    return kFailed;
  }
  emit(flags, flags.format == "text" ? cert_summary(cert) : cert.dump(2) + "\n");
  if (!cert.at("verified").get<bool>()) {
    for (const auto& f : verify_certificate(cert, flags.jobs).failures) std::cerr << f << "\n";
    return kFailed;
  }
  return kOk;
}

int cmd_verify(const Flags& flags) {
  std::ifstream file(flags.in, std::ios::binary);
  if (!file) {
    std::cerr << "cannot read " << flags.in << "\n";
    return kUsage;
  }
  Json cert;
  try {
    cert = Json::parse(file);
  } catch (const std::exception& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return kUsage;
  }
  const VerifyReport r = verify_certificate(cert, flags.jobs);
  if (flags.format == "json") {
    std::cout << Json{{"ok", r.ok}, {"failures", r.failures}}.dump(2) << "\n";
  } else {
    std::cout << (r.ok ? "verified\n" : "NOT verified\n");
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  }
  return r.ok ? kOk : kFailed;
}

int cmd_selftest(const Flags& flags) {
  const SelftestReport report = run_selftest(flags.seed, flags.cases);
  if (flags.format == "json") {
    Json props = Json::array();
    for (const auto& r : report.results) {
      std::ostringstream digest;
      digest << std::hex << r.digest;
      props.push_back(Json{{"name", r.name},
                           {"cases", r.cases},
                           {"failures", r.failures},
                           {"first_failure", r.first_failure},
                           {"digest", digest.str()}});
    }
    emit(flags, Json{{"seed", report.seed}, {"ok", report.ok()}, {"properties", props}}.dump(2) + "\n");
  } else {
    emit(flags, format_report(report));
  }
  return report.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius actions on graded local cohomology over F_p(t)"};
  app.require_subcommand(1);
  Flags flags;

  auto add_p = [&](CLI::App* c) { c->add_option("--p", flags.p, "prime characteristic")->required(); };
  auto add_format = [&](CLI::App* c, const char* dflt) {
    c->add_option("--format", flags.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_str(dflt);
  };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", flags.out, "write output to a file"); };

  auto* example = app.add_subcommand("example", "hypersurface data");
  add_p(example);
  add_format(example, "text");
  add_out(example);

  auto* basis = app.add_subcommand("basis", "Cech basis of one graded piece");
  add_p(basis);
  basis->add_option("--degree", flags.degree, "degree (Veronese degree with --n)")->required();
  basis->add_option("--n", flags.n, "Veronese index")->check(CLI::PositiveNumber);
  add_format(basis, "text");
  add_out(basis);

  auto* frob = app.add_subcommand("frobenius", "Frobenius matrix on one graded piece");
  add_p(frob);
  frob->add_option("--degree", flags.degree, "source degree (Veronese degree with --n)")->required();
  frob->add_option("--n", flags.n, "Veronese index")->check(CLI::PositiveNumber);
  add_format(frob, "text");
  add_out(frob);

  auto* certify = app.add_subcommand("certify", "build and self-verify a certificate");
  certify->add_option("claim", flags.claim, "claim")->required()->check(CLI::IsMember(claim_names()));
  add_p(certify);
  certify->add_option("--n", flags.n, "Veronese index")->check(CLI::PositiveNumber);
  certify->add_option("--window", flags.window, "verification window size")->check(CLI::PositiveNumber);
  certify->add_option("--jobs", flags.jobs, "parallel degree checks")->check(CLI::PositiveNumber);
  certify->add_flag("--no-f", flags.no_f, "normality: use Jac(f) without f");
  add_format(certify, "json");
  add_out(certify);

  auto* verify = app.add_subcommand("verify", "re-verify a stored certificate");
  verify->add_option("file", flags.in, "certificate JSON")->required();
  verify->add_option("--jobs", flags.jobs, "parallel degree checks")->check(CLI::PositiveNumber);
  add_format(verify, "text");

  auto* selftest = app.add_subcommand("selftest", "randomized property suites");
  selftest->add_option("--seed", flags.seed, "RNG seed");
  selftest->add_option("--cases", flags.cases, "cases per property")->check(CLI::PositiveNumber);
  add_format(selftest, "text");
  add_out(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (flags.format.empty()) flags.format = *certify ? "json" : "text";

  try {
    if (*example) return cmd_example(flags);
    if (*basis) return cmd_basis(flags);
    if (*frob) return cmd_frobenius(flags);
    if (*certify) return cmd_certify(flags);
    if (*verify) return cmd_verify(flags);
    if (*selftest) return cmd_selftest(flags);
  } catch (const NotPrime& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const DimensionMismatch& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
