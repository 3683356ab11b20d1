#include <pybind11/pybind11.h>

#include <string>

#include "modlift/error.hpp"
#include "modlift/exact/json.hpp"
#include "modlift/io.hpp"
#include "modlift/report.hpp"
#include "modlift/suite/verify.hpp"

namespace py = pybind11;
using namespace modlift;
using io::Json;

namespace {

ModulePtr build(const std::string& definition) {
  return io::build(io::parse_definition(io::parse_json_text(definition, "definition"))).module;
}

Limits limits(std::size_t cap_dim, std::uint64_t cap_hom) { return {cap_dim, cap_hom}; }

FiepOptions fiep_options(std::size_t n_max, std::uint64_t seed) {
  FiepOptions f;
  f.n_max = n_max;
  f.seed = seed;
  return f;
}

exact::SampleOptions samples(std::size_t size, std::uint64_t seed) {
  exact::SampleOptions s;
  s.size = size;
  s.seed = seed;
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Module-theoretic decision procedures over F_p and the exact localization backend.";
  m.attr("SCHEMA_VERSION") = io::kSchemaVersion;

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def(
      "property_report",
      [](const std::string& def, const std::string& subject, std::size_t cap_dim, std::uint64_t cap_hom,
         std::size_t n_max, std::uint64_t seed) {
        ReportOptions o{limits(cap_dim, cap_hom), fiep_options(n_max, seed)};
        return property_report(build(def), subject, o).dump();
      },
      py::arg("definition"), py::arg("subject") = "module", py::arg("cap_dim") = 8, py::arg("cap_hom") = 1u << 20,
      py::arg("n_max") = 3, py::arg("seed") = 1);

  m.def(
      "lattice",
      [](const std::string& def, const std::string& format, std::size_t cap_dim) {
        SubmoduleLattice lat = enumerate_submodules(*build(def), limits(cap_dim, Limits{}.max_hom));
        return format == "dot" ? io::lattice_to_dot(lat) : io::lattice_to_json(lat).dump();
      },
      py::arg("definition"), py::arg("format") = "json", py::arg("cap_dim") = 8);

  m.def(
      "summands",
      [](const std::string& def, std::size_t cap_dim) {
        return summands_report(build(def), limits(cap_dim, Limits{}.max_hom)).dump();
      },
      py::arg("definition"), py::arg("cap_dim") = 8);

  m.def(
      "fiep",
      [](const std::string& def, std::size_t n_max, std::uint64_t seed, std::size_t cap_dim) {
        return fiep_report(build(def), limits(cap_dim, Limits{}.max_hom), fiep_options(n_max, seed)).dump();
      },
      py::arg("definition"), py::arg("n_max") = 3, py::arg("seed") = 1, py::arg("cap_dim") = 8);

  m.def(
      "homs",
      [](const std::string& a, const std::string& b, std::uint64_t cap_hom) {
        return homs_report(build(a), build(b), limits(Limits{}.max_dim, cap_hom)).dump();
      },
      py::arg("source"), py::arg("target"), py::arg("cap_hom") = 1u << 20);

  m.def(
      "exact_case",
      [](const std::string& x, long p, long q, std::size_t sample_size, std::uint64_t seed) {
        exact::BigRational v = exact::parse_rational(x);
        auto s = samples(sample_size, seed);
        bool case_i = v != 0 && exact::valuation(v, q) >= 0;
        return exact::to_json(case_i ? exact::verify_example_case_i(v, p, q, std::nullopt, s)
                                     : exact::verify_example_case_ii(v, p, q, std::nullopt, s))
            .dump();
      },
      py::arg("x"), py::arg("p") = 2, py::arg("q") = 3, py::arg("sample_size") = 32, py::arg("seed") = 1);

  m.def(
      "graph_lemma",
      [](const std::string& x, long p, long q, std::size_t sample_size, std::uint64_t seed) {
        return exact::to_json(exact::graph_lemma_exact(exact::parse_rational(x), p, q, samples(sample_size, seed)))
            .dump();
      },
      py::arg("x"), py::arg("p") = 2, py::arg("q") = 3, py::arg("sample_size") = 32, py::arg("seed") = 1);

  m.def(
      "nonlocal_witness",
      [](long p, long q) { return exact::to_json(exact::nonlocal_witness(p, q)).dump(); }, py::arg("p") = 2,
      py::arg("q") = 3);

  m.def(
      "fiep_verdict",
      [](long p, long q) { return exact::to_json(exact::fiep_verdict_exact(p, q)).dump(); }, py::arg("p") = 2,
      py::arg("q") = 3);

  m.def(
      "remark", [](long a, long b) { return exact::to_json(exact::remark_z_checker(a, b)).dump(); }, py::arg("a"),
      py::arg("b"));

  m.def(
      "verify_paper",
      [](const std::string& config, bool with_durations) {
        suite::VerifyConfig c = suite::config_from_json(io::parse_json_text(config, "config"));
        suite::Manifest manifest;
        {
          py::gil_scoped_release release;
          manifest = suite::verify_paper(c);
        }
        return manifest.to_json(with_durations).dump();
      },
      py::arg("config") = "{}", py::arg("with_durations") = true);

  m.def("corpus", [] {
    Json out = Json::array();
    for (const suite::Fixture& f : suite::corpus()) {
      Json e = Json::object();
      for (const suite::Expectation& x : f.expected)
        e[x.property] = {{"value", x.value}, {"provenance", suite::to_string(x.provenance)}, {"oracle", x.oracle}};
      out.push_back({{"name", f.name}, {"definition", io::to_json(f.definition)}, {"expected", e}});
    }
    return out.dump();
  });
}
