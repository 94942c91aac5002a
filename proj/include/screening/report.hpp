#pragma once

#include <optional>
#include <string>
#include <vector>

#include "screening/catalog.hpp"
#include "screening/curvature.hpp"

namespace screening {

// Everything the analysis has to say about one catalog entry. Math failures
// land in `error` instead of aborting the batch; the affected fields stay
// empty while the rest are still filled in.
struct ReportEntry {
    std::string name;
    double sensitivity;
    double specificity;
    double epsilon;
    Concavity concavity;
    std::optional<double> threshold;
    std::optional<double> ppv_at_threshold;
    std::optional<double> oracle_threshold;
    std::optional<double> oracle_residual;
    std::optional<double> auc_closed;
    std::optional<double> auc_numeric;
    std::optional<double> auc_residual;
    std::optional<double> current_prevalence;
    std::optional<double> ppv_at_current;
    std::optional<double> npv_at_current;
    std::optional<bool> below_threshold;
    std::optional<std::string> error;
};

std::vector<ReportEntry> report(const std::vector<TestCatalogEntry>& entries);

// JSON and CSV renderings carry the same values, rounded to 6 significant
// digits; undefined math fields come out as JSON null and CSV "undefined".
std::string render_report(const std::vector<ReportEntry>& entries, TextFormat format);

} // namespace screening
