#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "modlift/error.hpp"
#include "modlift/exact/json.hpp"
#include "modlift/io.hpp"
#include "modlift/report.hpp"
#include "modlift/suite/verify.hpp"

using namespace modlift;
using io::Json;

namespace {

enum Exit { kPass = 0, kFailed = 1, kUsage = 2, kCap = 3 };

struct Options {
  std::size_t cap_dim = Limits{}.max_dim;
  std::uint64_t cap_hom = Limits{}.max_hom;
  std::size_t n_max = FiepOptions{}.n_max;
  long p = 2;
  long q = 3;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;
  std::string config;

  Limits limits() const { return {cap_dim, cap_hom}; }
  FiepOptions fiep() const {
    FiepOptions f;
    f.n_max = n_max;
    f.seed = seed;
    return f;
  }
  exact::SampleOptions samples() const {
    exact::SampleOptions s;
    s.seed = seed;
    return s;
  }
};

void emit(const Options& o, const std::string& text) {
  std::cout << text;
  if (!o.out.empty()) io::write_text(o.out, text);
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

std::string yn(const Json& v) {
  if (v.is_null()) return "too large";
  return v.get<bool>() ? "yes" : "no";
}

void check_primes(const Options& o) {
  PrimeField(static_cast<std::int64_t>(o.p));
  PrimeField(static_cast<std::int64_t>(o.q));
  if (o.p == o.q) throw Error(ErrorKind::SchemaError, "--p and --q must be distinct primes");
}

ModulePtr load(const std::string& path) { return io::build(io::load_definition(path)).module; }

int cmd_report(const Options& o, const std::string& path) {
  io::ModuleDefinition d = io::load_definition(path);
  ModulePtr m = io::build(d).module;
  Json r = property_report(m, d.name, {o.limits(), o.fiep()});
  if (o.format == "text") {
    std::string t = d.name + " (dim " + std::to_string(m->dim()) + " over F_" + std::to_string(m->field().modulus()) + ")\n";
    for (auto it = r["verdicts"].begin(); it != r["verdicts"].end(); ++it) t += "  " + it.key() + ": " + yn(*it) + "\n";
    emit(o, t);
  } else {
    emit_json(o, r);
  }
  return r["too_large"].empty() ? kPass : kCap;
}

int cmd_lattice(const Options& o, const std::string& path) {
  ModulePtr m = load(path);
  SubmoduleLattice lat = enumerate_submodules(*m, o.limits());
  if (o.format == "dot")
    emit(o, io::lattice_to_dot(lat));
  else
    emit_json(o, io::lattice_to_json(lat));
  return kPass;
}

int cmd_exact_case(const Options& o, const std::string& x_text) {
  check_primes(o);
  exact::BigRational x = exact::parse_rational(x_text);
  exact::ExactReport r = exact::valuation(x, o.q) >= 0 && x != 0
                             ? exact::verify_example_case_i(x, o.p, o.q, std::nullopt, o.samples())
                             : exact::verify_example_case_ii(x, o.p, o.q, std::nullopt, o.samples());
  Json j = exact::to_json(r);
  if (o.format == "text") {
    std::string t = r.check + " x = " + exact::to_string(r.x) + ": " + (r.passed ? "pass" : "fail") + "\n";
    for (const exact::Certificate& c : r.certificates) t += "  [" + std::string(c.holds ? "ok" : "FAIL") + "] " + c.name + ": " + c.detail + "\n";
    emit(o, t);
  } else {
    emit_json(o, j);
  }
  return r.passed && r.unresolved.empty() ? kPass : kFailed;
}

int cmd_exact_graph(const Options& o, const std::string& x_text) {
  check_primes(o);
  exact::ExactReport r = exact::graph_lemma_exact(exact::parse_rational(x_text), o.p, o.q, o.samples());
  emit_json(o, exact::to_json(r));
  return r.passed && r.unresolved.empty() ? kPass : kFailed;
}

int cmd_remark(const Options& o, long a, long b) {
  exact::RemarkResult r = exact::remark_z_checker(a, b);
  Json j = exact::to_json(r);
  if (o.format == "text")
    emit(o, "f(" + std::to_string(a) + "n) = " + std::to_string(b) + "n: " + j["summary"].get<std::string>() + "\n  " +
                r.i_certificate + "\n  " + r.ii_certificate + "\n");
  else
    emit_json(o, j);
  return kPass;
}

int cmd_nonlocal(const Options& o) {
  check_primes(o);
  Json j = exact::to_json(exact::nonlocal_witness(o.p, o.q, o.samples()));
  emit_json(o, j);
  return j["passed"].get<bool>() ? kPass : kFailed;
}

int cmd_exact_fiep(const Options& o) {
  check_primes(o);
  exact::FiepVerdict v = exact::fiep_verdict_exact(o.p, o.q, o.samples());
  if (o.format == "text")
    emit(o, v.verdict + "\n  " + v.label + ": " + v.citation + "\n");
  else
    emit_json(o, exact::to_json(v));
  return v.premise_verified ? kPass : kFailed;
}

int cmd_verify(const Options& o, const CLI::App& sub, const std::vector<std::string>& select,
               const std::string& regenerate) {
  if (!regenerate.empty()) {
    Json g = suite::compute_golden(suite::corpus_definitions(), o.limits(), o.fiep());
    io::write_text(regenerate, g.dump(2) + "\n");
    const auto dir = std::filesystem::path(regenerate).parent_path() / "modules";
    std::filesystem::create_directories(dir);
    std::vector<suite::Fixture> fixtures = suite::corpus_from(g);
    for (const suite::Fixture& f : fixtures)
      io::write_text(dir / (f.name + ".json"), io::to_json(f.definition).dump(2) + "\n");
    std::cerr << "golden values written to " << regenerate << ", " << fixtures.size() << " definitions to "
              << dir.string() << "\n";
    return kPass;
  }
  suite::VerifyConfig c;
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw Error(ErrorKind::SchemaError, "cannot read " + o.config);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    c = suite::config_from_json(io::parse_json_text(text, o.config));
  }
  const CLI::App& app = *sub.get_parent();
  auto given = [&](const char* name) { return app.get_option(name)->count() > 0; };
  if (given("--cap-dim")) c.limits.max_dim = o.cap_dim;
  if (given("--cap-hom")) c.limits.max_hom = o.cap_hom;
  if (given("--n-max")) c.fiep.n_max = o.n_max;
  if (given("--p")) c.p = o.p;
  if (given("--q")) c.q = o.q;
  if (given("--seed")) c.fiep.seed = c.samples.seed = o.seed;
  if (!select.empty()) c.select = select;
  c = suite::config_from_json(suite::to_json(c));
  suite::Manifest m = suite::verify_paper(c);
  if (o.format == "text") {
    std::string t;
    for (const suite::ManifestEntry& e : m.entries)
      t += suite::to_string(e.verdict) + "  " + e.id + (e.witness.empty() ? "" : "  " + e.witness) + "\n";
    t += m.passed() ? "all checks passed\n" : "verification failed\n";
    emit(o, t);
  } else {
    emit_json(o, m.to_json());
  }
  if (m.passed()) return kPass;
  return m.cap_exceeded() ? kCap : kFailed;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::TooLarge:
      return kCap;
    case ErrorKind::SchemaError:
    case ErrorKind::NonPrime:
    case ErrorKind::ZeroInput:
    case ErrorKind::WrongBranch:
    case ErrorKind::NotWellDefined:
    case ErrorKind::NotClosed:
    case ErrorKind::NoUnity:
    case ErrorKind::NotAssociative:
    case ErrorKind::NotUnital:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::AlgebraMismatch:
      return kUsage;
    default:
      return kFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide module properties over finite algebras and verify the lifting/extending results."};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--cap-dim", o.cap_dim, "Largest module dimension for lattice enumeration")->check(CLI::PositiveNumber);
  app.add_option("--cap-hom", o.cap_hom, "Largest hom set enumerated")->check(CLI::PositiveNumber);
  app.add_option("--n-max", o.n_max, "Largest decomposition arity for FIEP")->check(CLI::PositiveNumber);
  app.add_option("--p", o.p, "First prime of the exact backend");
  app.add_option("--q", o.q, "Second prime of the exact backend");
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--out", o.out, "Also write the output to this file");
  app.add_option("--config", o.config, "verify-paper configuration file")->check(CLI::ExistingFile);

  std::string path, path_b;
  auto* report = app.add_subcommand("report", "Property report with witnesses");
  report->add_option("module", path, "Module definition (JSON)")->required();
  auto* lattice = app.add_subcommand("lattice", "Submodule lattice as DOT or JSON");
  lattice->add_option("module", path)->required();
  auto* fiep = app.add_subcommand("fiep", "Finite internal exchange property with witnesses");
  fiep->add_option("module", path)->required();
  auto* summands = app.add_subcommand("summands", "Direct summands with complements");
  summands->add_option("module", path)->required();
  auto* homs = app.add_subcommand("homs", "Basis and counts of Hom(A, B)");
  homs->add_option("a", path)->required();
  homs->add_option("b", path_b)->required();

  std::string x;
  long a = 2, b = 3;
  auto* exact_cmd = app.add_subcommand("exact", "Exact backend over Z_(p) x Q/Z_(q)");
  exact_cmd->require_subcommand(0, 1);
  exact_cmd->add_option("--x", x, "Multiplier num/den; picks case i or ii from its q-valuation");
  auto* remark = exact_cmd->add_subcommand("remark", "The map f(an) = bn on aZ");
  remark->add_option("--a", a)->required();
  remark->add_option("--b", b)->required();
  auto* nonlocal = exact_cmd->add_subcommand("nonlocal", "Two non-unit endomorphisms summing to 1");
  auto* exact_fiep = exact_cmd->add_subcommand("fiep", "Premise-verified exchange verdict");
  auto* graph = exact_cmd->add_subcommand("graph", "Graph decomposition of U x U for a case-ii map");
  graph->add_option("--x", x)->required();

  std::vector<std::string> select;
  std::string regenerate;
  auto* verify = app.add_subcommand("verify-paper", "Run every check and print the manifest");
  verify->add_option("--select", select, "Groups to run")->check(CLI::IsMember(suite::group_names()));
  verify->add_option("--regenerate-golden", regenerate, "Recompute golden values into this file and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*report) return cmd_report(o, path);
    if (*lattice) return cmd_lattice(o, path);
    if (*fiep) {
      emit_json(o, fiep_report(load(path), o.limits(), o.fiep()));
      return kPass;
    }
    if (*summands) {
      emit_json(o, summands_report(load(path), o.limits()));
      return kPass;
    }
    if (*homs) {
      emit_json(o, homs_report(load(path), load(path_b), o.limits()));
      return kPass;
    }
    if (*exact_cmd) {
      if (*remark) return cmd_remark(o, a, b);
      if (*nonlocal) return cmd_nonlocal(o);
      if (*exact_fiep) return cmd_exact_fiep(o);
      if (*graph) return cmd_exact_graph(o, x);
      if (x.empty()) throw Error(ErrorKind::SchemaError, "exact needs --x or a subcommand");
      return cmd_exact_case(o, x);
    }
    if (*verify) return cmd_verify(o, *verify, select, regenerate);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
