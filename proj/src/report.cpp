#include "screening/report.hpp"

#include <cstdlib>
#include <sstream>

#include "json.hpp"

#include "screening/integrals.hpp"

namespace screening {

namespace {

using json = nlohmann::ordered_json;

// Rounds through the 6-significant-digit rendering so JSON and CSV carry the
// same value, not just the same-looking prefix.
double sig6_value(double value) {
    return std::strtod(format_sig6(value).c_str(), nullptr);
}

json json_number(const std::optional<double>& value) {
    if (!value) return nullptr;
    return sig6_value(*value);
}

std::string csv_number(const std::optional<double>& value, const char* when_empty) {
    if (!value) return when_empty;
    return format_sig6(*value);
}

} // namespace

std::vector<ReportEntry> report(const std::vector<TestCatalogEntry>& entries) {
    std::vector<ReportEntry> rows;
    rows.reserve(entries.size());

    for (const auto& entry : entries) {
        const auto test = entry.characteristics();

        ReportEntry row{};
        row.name = entry.name;
        row.sensitivity = test.sensitivity();
        row.specificity = test.specificity();
        const auto concavity = classify(test);
        row.epsilon = concavity.epsilon;
        row.concavity = concavity.kind;
        row.current_prevalence = entry.current_prevalence;

        const auto record_error = [&row](const MathError& e) {
            if (row.error) {
                *row.error += "; ";
                *row.error += e.what();
            } else {
                row.error = e.what();
            }
        };

        try {
            const auto thresholds = threshold_report(test);
            row.threshold = thresholds.threshold;
            row.ppv_at_threshold = thresholds.ppv_at_threshold;
            row.oracle_threshold = thresholds.oracle_threshold;
            row.oracle_residual = thresholds.oracle_residual;
        } catch (const MathError& e) {
            record_error(e);
        }

        try {
            const auto area = auc(test);
            row.auc_closed = area.auc_closed;
            row.auc_numeric = area.auc_numeric;
            row.auc_residual = area.residual;
        } catch (const MathError& e) {
            record_error(e);
        }

        if (entry.current_prevalence) {
            try {
                row.ppv_at_current = ppv(test, *entry.current_prevalence);
            } catch (const MathError& e) {
                record_error(e);
            }
            try {
                row.npv_at_current = npv(test, *entry.current_prevalence);
            } catch (const MathError& e) {
                record_error(e);
            }
            if (row.threshold) {
                row.below_threshold = *entry.current_prevalence < *row.threshold;
            }
        }

        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_report(const std::vector<ReportEntry>& entries, TextFormat format) {
    if (format == TextFormat::json) {
        json document = json::array();
        for (const auto& entry : entries) {
            json object;
            object["name"] = entry.name;
            object["sensitivity"] = sig6_value(entry.sensitivity);
            object["specificity"] = sig6_value(entry.specificity);
            object["epsilon"] = sig6_value(entry.epsilon);
            object["concavity"] = to_string(entry.concavity);
            object["threshold"] = json_number(entry.threshold);
            object["ppv_at_threshold"] = json_number(entry.ppv_at_threshold);
            object["oracle_threshold"] = json_number(entry.oracle_threshold);
            object["oracle_residual"] = json_number(entry.oracle_residual);
            object["auc_closed"] = json_number(entry.auc_closed);
            object["auc_numeric"] = json_number(entry.auc_numeric);
            object["auc_residual"] = json_number(entry.auc_residual);
            object["current_prevalence"] = json_number(entry.current_prevalence);
            object["ppv_at_current"] = json_number(entry.ppv_at_current);
            object["npv_at_current"] = json_number(entry.npv_at_current);
            if (entry.below_threshold) {
                object["below_threshold"] = *entry.below_threshold;
            } else {
                object["below_threshold"] = nullptr;
            }
            if (entry.error) {
                object["error"] = *entry.error;
            } else {
                object["error"] = nullptr;
            }
            document.push_back(std::move(object));
        }
        return document.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "name,sensitivity,specificity,epsilon,concavity,threshold,ppv_at_threshold,"
           "oracle_threshold,oracle_residual,auc_closed,auc_numeric,auc_residual,"
           "current_prevalence,ppv_at_current,npv_at_current,below_threshold,error\n";
    for (const auto& entry : entries) {
        out << csv_field(entry.name) << ',' << format_sig6(entry.sensitivity) << ','
            << format_sig6(entry.specificity) << ',' << format_sig6(entry.epsilon) << ','
            << to_string(entry.concavity) << ',' << csv_number(entry.threshold, "undefined")
            << ',' << csv_number(entry.ppv_at_threshold, "undefined") << ','
            << csv_number(entry.oracle_threshold, "undefined") << ','
            << csv_number(entry.oracle_residual, "undefined") << ','
            << csv_number(entry.auc_closed, "undefined") << ','
            << csv_number(entry.auc_numeric, "undefined") << ','
            << csv_number(entry.auc_residual, "undefined") << ','
            << csv_number(entry.current_prevalence, "") << ','
            << csv_number(entry.ppv_at_current, "") << ','
            << csv_number(entry.npv_at_current, "") << ',';
        if (entry.below_threshold) out << (*entry.below_threshold ? "true" : "false");
        out << ',';
        if (entry.error) out << csv_field(*entry.error);
        out << '\n';
    }
    return out.str();
}

} // namespace screening
