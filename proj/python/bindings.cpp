// Python module frobcert._core. Structured results cross the boundary as
// JSON text; the package __init__ decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobcert/certify.hpp"
#include "frobcert/selftest.hpp"

namespace py = pybind11;
using namespace frobcert;

namespace {

std::string example_json(std::uint32_t p) {
  const GradedHypersurface h = make_example(p);
  std::vector<int> w;
  for (const auto& v : h.ring()->vars()) w.push_back(v.weight);
  return Json{{"p", p},     {"f", h.f().to_string()}, {"weights", w},
              {"m", h.m()}, {"degree", h.degree()},   {"a_invariant", a_invariant(h)}}
      .dump();
}

std::string basis_json(std::uint32_t p, int degree, std::optional<int> n) {
  const GradedHypersurface h = make_example(p);
  const GradedPiece piece = n ? veronese_piece(VeroneseView(h, *n), degree) : basis_of_degree(h, degree);
  return piece_to_json(piece).dump();
}

std::string frobenius_json(std::uint32_t p, int degree, std::optional<int> n, unsigned level) {
  GradedHypersurface h = make_example(p);
  for (unsigned i = 0; i < level; ++i) h = h.base_changed();
  return map_to_json(frobenius_matrix_on_piece(h, n ? degree * *n : degree)).dump();
}

std::string certify_json(const std::string& claim, std::uint32_t p, std::optional<int> n,
                         std::optional<int> window, unsigned jobs, bool include_f) {
  CertifyOptions o;
  o.n = n;
  if (window) {
    o.window = *window;
    o.segre_window = *window;
  }
  o.jobs = jobs;
  return certificate(claim, p, o, include_f).dump(2) + "\n";
}

py::tuple verify_json(const std::string& text, unsigned jobs) {
  const VerifyReport r = verify_certificate(Json::parse(text), jobs);
  return py::make_tuple(r.ok, r.failures);
}

std::string selftest_json(std::uint64_t seed, std::size_t cases) {
  const SelftestReport report = run_selftest(seed, cases);
  Json props = Json::array();
  for (const auto& r : report.results) {
    props.push_back(Json{{"name", r.name},
                         {"cases", r.cases},
                         {"failures", r.failures},
                         {"first_failure", r.first_failure},
                         {"digest", r.digest}});
  }
  return Json{{"seed", report.seed}, {"ok", report.ok()}, {"properties", props}}.dump();
}

std::vector<std::vector<std::string>> kernel_strings(std::uint32_t p, unsigned level,
                                                     const std::vector<std::vector<std::string>>& rows,
                                                     unsigned frobenius_power) {
  const FieldDesc k{p, level};
  if (rows.empty()) throw DimensionMismatch("matrix needs at least one row");
  std::vector<Vector> parsed;
  for (const auto& row : rows) {
    Vector v;
    for (const auto& x : row) v.push_back(FieldElement::parse(k, x));
    parsed.push_back(std::move(v));
  }
  const std::size_t cols = parsed.front().size();
  std::vector<std::string> src, dst;
  for (std::size_t j = 0; j < cols; ++j) src.push_back("e" + std::to_string(j));
  for (std::size_t i = 0; i < parsed.size(); ++i) dst.push_back("f" + std::to_string(i));
  const PLinearMap phi(src, dst, Matrix::from_rows(k, cols, parsed), frobenius_power);
  std::vector<std::vector<std::string>> out;
  for (const auto& v : semilinear_kernel(phi)) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(x.to_string());
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Frobenius actions on graded local cohomology over F_p(t)";

  py::register_exception<Error>(m, "Error");
  py::register_exception<NotPrime>(m, "NotPrime");
  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch");
  py::register_exception<CertificationFailure>(m, "CertificationFailure");
  py::register_exception<NonStandardGrading>(m, "NonStandardGrading");

  m.def("claim_names", &claim_names);
  m.def("example_json", &example_json, py::arg("p"));
  m.def("a_invariant", [](std::uint32_t p) { return a_invariant(make_example(p)); }, py::arg("p"));
  m.def("default_veronese_index",
        [](std::uint32_t p, const std::string& pipeline) {
          if (pipeline != "segre" && pipeline != "anti-nilpotent") {
            throw ParseError("pipeline must be \"segre\" or \"anti-nilpotent\"");
          }
          return default_veronese_index(p, pipeline == "segre" ? Pipeline::segre : Pipeline::anti_nilpotence);
        },
        py::arg("p"), py::arg("pipeline") = "anti-nilpotent");
  m.def("basis_json", &basis_json, py::arg("p"), py::arg("degree"), py::arg("n") = std::nullopt);
  m.def("frobenius_json", &frobenius_json, py::arg("p"), py::arg("degree"), py::arg("n") = std::nullopt,
        py::arg("level") = 0);
  m.def("certify_json", &certify_json, py::arg("claim"), py::arg("p"), py::arg("n") = std::nullopt,
        py::arg("window") = std::nullopt, py::arg("jobs") = 1, py::arg("include_f") = true,
        py::call_guard<py::gil_scoped_release>());
  m.def("verify_json", &verify_json, py::arg("text"), py::arg("jobs") = 1);
  m.def("selftest_json", &selftest_json, py::arg("seed") = kDefaultSeed, py::arg("cases") = 1000,
        py::call_guard<py::gil_scoped_release>());
  m.def("semilinear_kernel", &kernel_strings, py::arg("p"), py::arg("level"), py::arg("rows"),
        py::arg("frobenius_power") = 1);

  m.def("frobenius_scalar",
        [](std::uint32_t p, unsigned level, const std::string& c) {
          return frobenius_scalar(FieldElement::parse({p, level}, c)).to_string();
        },
        py::arg("p"), py::arg("level"), py::arg("c"));
  m.def("p_component_split",
        [](std::uint32_t p, unsigned level, const std::string& c) {
          std::vector<std::string> out;
          for (const auto& w : p_component_split(FieldElement::parse({p, level}, c))) out.push_back(w.to_string());
          return out;
        },
        py::arg("p"), py::arg("level"), py::arg("c"));
  m.def("embed_up",
        [](std::uint32_t p, unsigned level, const std::string& c) {
          return embed_up(FieldElement::parse({p, level}, c)).to_string();
        },
        py::arg("p"), py::arg("level"), py::arg("c"));
  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
