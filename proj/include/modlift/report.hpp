#pragma once

#include <string>

#include "modlift/io.hpp"
#include "modlift/properties.hpp"

namespace modlift {

struct ReportOptions {
  Limits limits;
  FiepOptions fiep;
};

/// Verdicts for small, essential, hollow, uniform, uniserial, lifting,
/// extending, indecomposable, fiep and end_local with their witnesses.
/// "small" asks whether Rad(M) is small in M and "essential" whether Soc(M)
/// is essential in M; both list every submodule with the property. A
/// property whose computation exceeds a cap gets a null verdict and an entry
/// under "too_large".
io::Json property_report(const ModulePtr& m, const std::string& subject, const ReportOptions& options = {});

/// Summands, with their canonical complements.
io::Json summands_report(const ModulePtr& m, const Limits& limits = {});
io::Json fiep_report(const ModulePtr& m, const Limits& limits, const FiepOptions& options);
io::Json homs_report(const ModulePtr& a, const ModulePtr& b, const Limits& limits = {});

}  // namespace modlift
