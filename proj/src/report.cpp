#include "modlift/report.hpp"

#include <functional>
#include <optional>

#include "modlift/error.hpp"

namespace modlift {

using io::Json;
using io::to_json;

namespace {

Json pair_json(const Submodule& a, const Submodule& b, const char* ka, const char* kb) {
  Json j;
  j[ka] = to_json(a);
  j[kb] = to_json(b);
  return j;
}

Json fiep_tables_json(const Analysis& a, const FiepResult& r) {
  Json tables = Json::array();
  for (const FiepWitnessTable& t : r.tables) {
    Json tj;
    tj["arity"] = t.arity;
    tj["decompositions_total"] = t.decompositions_total;
    tj["decompositions_checked"] = t.decompositions_checked;
    tj["sampled"] = t.sampled;
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
      FiepPairWitness w = t.row(i);
      Json row;
      row["summand"] = w.summand;
      row["parts"] = w.parts;
      row["chosen"] = w.chosen;
      rows.push_back(row);
    }
    tj["witnesses"] = rows;
    tables.push_back(tj);
  }
  Json j;
  j["pairs_checked"] = r.pairs_checked;
  j["seed"] = r.seed;
  j["members"] = Json::array();
  for (const Submodule& s : a.lattice().members()) j["members"].push_back(to_json(s));
  j["tables"] = tables;
  if (r.violation) {
    j["violation"] = {{"summand", r.violation->summand}, {"parts", r.violation->parts}};
  }
  return j;
}

}  // namespace

Json property_report(const ModulePtr& m, const std::string& subject, const ReportOptions& options) {
  Json report;
  report["schema_version"] = io::kSchemaVersion;
  report["subject"] = subject;
  report["field"] = m->field().modulus();
  report["dim"] = m->dim();
  Json verdicts, witnesses;
  Json too_large = Json::array();
  const char* names[] = {"small", "essential", "hollow", "uniform", "uniserial",
                         "lifting", "extending", "indecomposable", "fiep", "end_local"};
  for (const char* n : names) verdicts[n] = nullptr;
  for (const char* n : names) witnesses[n] = nullptr;

  auto guarded = [&](const std::vector<std::string>& props, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
      for (const std::string& p : props) {
        verdicts[p] = nullptr;
        too_large.push_back({{"property", p}, {"error", e.what()}});
      }
    }
  };

  std::optional<Analysis> analysis;
  guarded({"small", "essential", "hollow", "uniform", "uniserial", "lifting", "extending", "indecomposable", "fiep"},
          [&] {
            analysis.emplace(m, options.limits);
            const Analysis& a = *analysis;
            const SubmoduleLattice& lat = a.lattice();
            report["submodule_count"] = lat.size();
            report["hasse_edge_count"] = lat.hasse_edges().size();
            const Submodule rad = radical(a), soc = socle(a);
            Json small_list = Json::array(), ess_list = Json::array();
            for (const Submodule& s : lat.members()) {
              if (is_small(a, s)) small_list.push_back(to_json(s));
              if (is_essential(a, s)) ess_list.push_back(to_json(s));
            }
            verdicts["small"] = is_small(a, rad);
            witnesses["small"] = {{"radical", to_json(rad)}, {"small_submodules", small_list}};
            verdicts["essential"] = is_essential(a, soc);
            witnesses["essential"] = {{"socle", to_json(soc)}, {"essential_submodules", ess_list}};

            // Hollow: a proper N and proper X with N + X = M refute it.
            bool hollow = false, uniform = false;
            if (a.dim() > 0) {
              hollow = is_hollow(a);
              uniform = is_uniform(a);
            }
            verdicts["hollow"] = hollow;
            verdicts["uniform"] = uniform;
            if (a.dim() == 0) {
              witnesses["hollow"] = witnesses["uniform"] = {{"reason", "zero module"}};
            } else {
              for (std::size_t i = 0; i < lat.size() && !hollow && witnesses["hollow"].is_null(); ++i)
                for (std::size_t j = 0; j < lat.size(); ++j)
                  if (i != lat.top_index() && j != lat.top_index() && a.sum_dim(i, j) == a.dim()) {
                    witnesses["hollow"] = pair_json(lat[i], lat[j], "N", "X");
                    break;
                  }
              for (std::size_t i = 1; i < lat.size() && !uniform && witnesses["uniform"].is_null(); ++i)
                for (std::size_t j = 1; j < lat.size(); ++j)
                  if (lat.meet(i, j) == 0) {
                    witnesses["uniform"] = pair_json(lat[i], lat[j], "N", "Y");
                    break;
                  }
            }
            const bool uniserial = is_uniserial(a);
            verdicts["uniserial"] = uniserial;
            for (std::size_t i = 0; i < lat.size() && !uniserial && witnesses["uniserial"].is_null(); ++i)
              for (std::size_t j = 0; j < lat.size(); ++j)
                if (!lat.leq(i, j) && !lat.leq(j, i)) {
                  witnesses["uniserial"] = pair_json(lat[i], lat[j], "A", "B");
                  break;
                }

            auto search_json = [&](const SearchResult& r) {
              Json w;
              if (r.violation) {
                w["violation"] = {{"N", to_json(lat[*r.violation])}};
              } else {
                Json pairs = Json::array();
                for (auto [n, x] : r.witnesses) pairs.push_back(pair_json(lat[n], lat[x], "N", "X"));
                w["witnesses"] = pairs;
              }
              return w;
            };
            SearchResult lift = is_lifting(a);
            verdicts["lifting"] = lift.holds;
            witnesses["lifting"] = search_json(lift);
            SearchResult ext = is_extending(a);
            verdicts["extending"] = ext.holds;
            witnesses["extending"] = search_json(ext);

            const bool indec = is_indecomposable(a);
            verdicts["indecomposable"] = indec;
            if (!indec && a.dim() > 0) {
              for (std::size_t s : a.summands())
                if (s != 0 && s != lat.top_index()) {
                  witnesses["indecomposable"] = pair_json(lat[s], lat[*a.complement(s)], "X", "Y");
                  break;
                }
            }

            FiepResult fr = has_fiep(a, options.fiep);
            verdicts["fiep"] = fr.holds;
            witnesses["fiep"] = fiep_tables_json(a, fr);
          });

  guarded({"end_local"}, [&] {
    EndRing e = endomorphism_ring(*m, options.limits);
    LocalityResult r = is_local(e);
    verdicts["end_local"] = r.local;
    Json w;
    w["dim"] = e.basis.size();
    w["units"] = e.unit_count();
    w["elements"] = e.elements.size();
    if (r.witness) {
      w["non_units_summing_to_unit"] = Json::array({to_json(e.elements[r.witness->first]),
                                                    to_json(e.elements[r.witness->second])});
    }
    witnesses["end_local"] = w;
  });

  report["verdicts"] = verdicts;
  report["witnesses"] = witnesses;
  report["too_large"] = too_large;
  return report;
}

Json summands_report(const ModulePtr& m, const Limits& limits) {
  Analysis a(m, limits);
  Json list = Json::array();
  for (std::size_t s : a.summands()) list.push_back(pair_json(a.lattice()[s], a.lattice()[*a.complement(s)], "summand", "complement"));
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["count"] = a.summands().size();
  j["summands"] = list;
  return j;
}

Json fiep_report(const ModulePtr& m, const Limits& limits, const FiepOptions& options) {
  Analysis a(m, limits);
  FiepResult r = has_fiep(a, options);
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["holds"] = r.holds;
  j["n_max"] = options.n_max;
  j.update(fiep_tables_json(a, r));
  return j;
}

Json homs_report(const ModulePtr& a, const ModulePtr& b, const Limits& limits) {
  if (!same_algebra(*a, *b)) throw Error(ErrorKind::AlgebraMismatch, "modules are over different algebras");
  auto basis = hom_basis(*a, *b);
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["source_dim"] = a->dim();
  j["target_dim"] = b->dim();
  j["dim"] = basis.size();
  j["size"] = saturating_power(a->field().modulus(), basis.size());
  Json mats = Json::array();
  for (const Matrix& h : basis) mats.push_back(to_json(h));
  j["basis"] = mats;
  std::size_t n_epi = 0, n_mono = 0;
  for (const Matrix& h : enumerate_span(a->field(), basis, a->dim(), b->dim(), limits)) {
    const std::size_t r = rank(a->field(), h);
    n_epi += r == b->dim();
    n_mono += r == a->dim();
  }
  j["epimorphisms"] = n_epi;
  j["monomorphisms"] = n_mono;
  return j;
}

}  // namespace modlift
