#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "screening/catalog.hpp"
#include "screening/core.hpp"
#include "screening/curvature.hpp"
#include "screening/curve.hpp"
#include "screening/format.hpp"
#include "screening/integrals.hpp"
#include "screening/paradox.hpp"
#include "screening/report.hpp"
#include "screening/svg.hpp"

namespace {

using json = nlohmann::ordered_json;

using screening::format_full;
using screening::format_sig6;
using screening::TextFormat;

void write_output(const std::string& path, const std::string& data) {
    if (path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw screening::ValidationError("cannot open output file: " + path);
    out << data;
    if (!out) throw screening::ValidationError("failed writing output file: " + path);
}

TextFormat parse_format(const std::string& name) {
    if (name == "json") return TextFormat::json;
    if (name == "csv") return TextFormat::csv;
    throw screening::ValidationError("format must be json or csv, got \"" + name + "\"");
}

json json_opt(const std::optional<double>& value) {
    if (!value) return nullptr;
    return *value;
}

std::string csv_opt(const std::optional<double>& value) {
    if (!value) return "undefined";
    return format_sig6(*value);
}

void run_metrics(std::int64_t tp, std::int64_t fp, std::int64_t fn, std::int64_t tn,
                 const std::string& format, const std::string& out_path) {
    const auto metrics =
        screening::metrics_from_counts(screening::ConfusionMatrix(tp, fp, fn, tn));

    if (parse_format(format) == TextFormat::json) {
        json object;
        object["prevalence"] = metrics.prevalence;
        object["sensitivity"] = metrics.sensitivity;
        object["specificity"] = metrics.specificity;
        object["ppv"] = json_opt(metrics.ppv);
        object["npv"] = json_opt(metrics.npv);
        write_output(out_path, object.dump(2) + "\n");
        return;
    }
    std::ostringstream out;
    out << "prevalence,sensitivity,specificity,ppv,npv\n"
        << format_sig6(metrics.prevalence) << ',' << format_sig6(metrics.sensitivity) << ','
        << format_sig6(metrics.specificity) << ',' << csv_opt(metrics.ppv) << ','
        << csv_opt(metrics.npv) << '\n';
    write_output(out_path, out.str());
}

void run_threshold(double a, double b, const std::string& format,
                   const std::string& out_path) {
    const screening::TestCharacteristics test(a, b);
    const auto report = screening::threshold_report(test);

    if (parse_format(format) == TextFormat::json) {
        json object;
        object["sensitivity"] = a;
        object["specificity"] = b;
        object["epsilon"] = report.concavity.epsilon;
        object["concavity"] = screening::to_string(report.concavity.kind);
        object["threshold"] = json_opt(report.threshold);
        object["ppv_at_threshold"] = json_opt(report.ppv_at_threshold);
        object["oracle_threshold"] = json_opt(report.oracle_threshold);
        object["oracle_residual"] = json_opt(report.oracle_residual);
        write_output(out_path, object.dump(2) + "\n");
        return;
    }
    std::ostringstream out;
    out << "sensitivity,specificity,epsilon,concavity,threshold,ppv_at_threshold,"
           "oracle_threshold,oracle_residual\n"
        << format_sig6(a) << ',' << format_sig6(b) << ','
        << format_sig6(report.concavity.epsilon) << ','
        << screening::to_string(report.concavity.kind) << ','
        << csv_opt(report.threshold) << ',' << csv_opt(report.ppv_at_threshold) << ','
        << csv_opt(report.oracle_threshold) << ',' << csv_opt(report.oracle_residual)
        << '\n';
    write_output(out_path, out.str());
}

void run_auc(double a, double b, const std::string& format, const std::string& out_path) {
    const screening::TestCharacteristics test(a, b);
    const auto report = screening::auc(test);

    if (parse_format(format) == TextFormat::json) {
        json object;
        object["sensitivity"] = a;
        object["specificity"] = b;
        object["epsilon"] = report.epsilon;
        object["auc_closed"] = report.auc_closed;
        object["auc_numeric"] = report.auc_numeric;
        object["residual"] = report.residual;
        write_output(out_path, object.dump(2) + "\n");
        return;
    }
    std::ostringstream out;
    out << "sensitivity,specificity,epsilon,auc_closed,auc_numeric,residual\n"
        << format_sig6(a) << ',' << format_sig6(b) << ',' << format_sig6(report.epsilon)
        << ',' << format_sig6(report.auc_closed) << ',' << format_sig6(report.auc_numeric)
        << ',' << format_sig6(report.residual) << '\n';
    write_output(out_path, out.str());
}

void run_curve(double a, double b, int samples, const std::string& name,
               const std::string& format, const std::string& out_path,
               const std::string& svg_path) {
    const screening::TestCharacteristics test(a, b);
    const auto curve = screening::sample_curve(test, samples, name);

    if (!svg_path.empty()) write_output(svg_path, screening::render_svg(curve));

    if (parse_format(format) == TextFormat::json) {
        json object;
        object["name"] = curve.name;
        object["sensitivity"] = curve.sensitivity;
        object["specificity"] = curve.specificity;
        object["epsilon"] = curve.epsilon;
        object["threshold"] = json_opt(curve.threshold);
        object["ppv_at_threshold"] = json_opt(curve.ppv_at_threshold);
        json rows = json::array();
        for (const auto& row : curve.rows) {
            rows.push_back({{"phi", row.phi},
                            {"ppv", row.ppv},
                            {"slope", row.slope},
                            {"curvature", row.curvature}});
        }
        object["samples"] = std::move(rows);
        write_output(out_path, object.dump(2) + "\n");
        return;
    }
    std::ostringstream out;
    out << "phi,ppv,slope,curvature\n";
    for (const auto& row : curve.rows) {
        out << format_full(row.phi) << ',' << format_full(row.ppv) << ','
            << format_full(row.slope) << ',' << format_full(row.curvature) << '\n';
    }
    write_output(out_path, out.str());
}

std::string read_stream_or_file(const std::string& path, std::istream& fallback) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << fallback.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw screening::ValidationError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

screening::paradox::ParadoxScenario parse_scenario(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw screening::ParseError(std::string("scenario JSON: ") + e.what());
    }
    if (!document.is_object()) {
        throw screening::ValidationError("scenario JSON must be an object");
    }

    static const std::set<std::string> known_keys = {
        "sensitivity",        "specificity", "initial_prevalence",
        "treatment_efficacy", "screening_coverage", "rounds"};
    for (const auto& [key, unused] : document.items()) {
        if (!known_keys.count(key)) {
            throw screening::ValidationError("scenario: unknown field \"" + key + "\"");
        }
    }
    const auto number = [&document](const char* key) {
        if (!document.contains(key) || !document.at(key).is_number()) {
            throw screening::ValidationError(std::string("scenario: missing numeric field \"") +
                                             key + "\"");
        }
        return document.at(key).get<double>();
    };
    if (!document.contains("rounds") || !document.at("rounds").is_number_integer()) {
        throw screening::ValidationError("scenario: missing integer field \"rounds\"");
    }

    return screening::paradox::ParadoxScenario(
        screening::TestCharacteristics(number("sensitivity"), number("specificity")),
        number("initial_prevalence"), number("treatment_efficacy"),
        number("screening_coverage"), document.at("rounds").get<int>());
}

void run_simulate(const std::string& scenario_path, const std::string& out_path) {
    const auto scenario = parse_scenario(read_stream_or_file(scenario_path, std::cin));
    const auto trajectory = screening::paradox::run(scenario);

    std::ostringstream out;
    out << "round,prevalence,ppv\n";
    for (const auto& point : trajectory.series) {
        out << point.round << ',' << format_full(point.prevalence) << ','
            << format_full(point.ppv) << '\n';
    }
    write_output(out_path, out.str());

    std::cerr << "threshold: "
              << (trajectory.threshold ? format_sig6(*trajectory.threshold) : "undefined")
              << ", crossing: "
              << (trajectory.crossing_round ? std::to_string(*trajectory.crossing_round)
                                            : "none")
              << '\n';
}

void run_report(const std::string& catalog_path, const std::string& catalog_format,
                const std::string& format, const std::string& out_path) {
    TextFormat in_format;
    if (!catalog_format.empty()) {
        in_format = parse_format(catalog_format);
    } else if (catalog_path.size() >= 5 &&
               catalog_path.substr(catalog_path.size() - 5) == ".json") {
        in_format = TextFormat::json;
    } else if (catalog_path.size() >= 4 &&
               catalog_path.substr(catalog_path.size() - 4) == ".csv") {
        in_format = TextFormat::csv;
    } else {
        throw screening::ValidationError(
            "cannot infer catalog format from \"" + catalog_path +
            "\"; pass --catalog-format json|csv");
    }

    const auto text = read_stream_or_file(catalog_path, std::cin);
    std::istringstream stream(text);
    const auto entries = screening::parse_catalog(stream, in_format);
    const auto rows = screening::report(entries);
    write_output(out_path, screening::render_report(rows, parse_format(format)));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prevalence-dependent screening-curve analysis for diagnostic tests"};
    app.require_subcommand(1);

    std::int64_t tp = 0, fp = 0, fn = 0, tn = 0;
    double a = 0.0, b = 0.0;
    int samples = 101;
    std::string name;
    std::string format_json = "json";
    std::string format_csv = "csv";
    std::string out_path;
    std::string svg_path;
    std::string scenario_path;
    std::string catalog_path;
    std::string catalog_format;

    auto* metrics = app.add_subcommand(
        "metrics", "Prevalence, sensitivity, specificity, ppv, npv from raw counts");
    metrics->add_option("--tp", tp, "true positives")->required();
    metrics->add_option("--fp", fp, "false positives")->required();
    metrics->add_option("--fn", fn, "false negatives")->required();
    metrics->add_option("--tn", tn, "true negatives")->required();
    metrics->add_option("--format", format_json, "json or csv");
    metrics->add_option("--out", out_path, "output path (default stdout)");
    metrics->callback([&] { run_metrics(tp, fp, fn, tn, format_json, out_path); });

    auto* threshold = app.add_subcommand(
        "threshold", "Prevalence threshold, concavity class, and the numeric cross-check");
    threshold->add_option("-a,--sensitivity", a, "sensitivity")->required();
    threshold->add_option("-b,--specificity", b, "specificity")->required();
    threshold->add_option("--format", format_json, "json or csv");
    threshold->add_option("--out", out_path, "output path (default stdout)");
    threshold->callback([&] { run_threshold(a, b, format_json, out_path); });

    auto* auc = app.add_subcommand(
        "auc", "Area under the screening curve, closed form vs quadrature");
    auc->add_option("-a,--sensitivity", a, "sensitivity")->required();
    auc->add_option("-b,--specificity", b, "specificity")->required();
    auc->add_option("--format", format_json, "json or csv");
    auc->add_option("--out", out_path, "output path (default stdout)");
    auc->callback([&] { run_auc(a, b, format_json, out_path); });

    auto* curve = app.add_subcommand(
        "curve", "Sample the ppv curve (phi, ppv, slope, curvature) and optionally render SVG");
    curve->add_option("-a,--sensitivity", a, "sensitivity")->required();
    curve->add_option("-b,--specificity", b, "specificity")->required();
    curve->add_option("--samples", samples, "row count (default 101)");
    curve->add_option("--name", name, "label for SVG and JSON metadata");
    curve->add_option("--format", format_csv, "csv or json");
    curve->add_option("--out", out_path, "output path (default stdout)");
    curve->add_option("--svg", svg_path, "also render the curve as SVG to this path");
    curve->callback(
        [&] { run_curve(a, b, samples, name, format_csv, out_path, svg_path); });

    auto* simulate = app.add_subcommand(
        "simulate", "Run a screen-and-treat scenario and print the prevalence trajectory");
    simulate->add_option("scenario", scenario_path, "scenario JSON file, or - for stdin")
        ->required();
    simulate->add_option("--out", out_path, "output path (default stdout)");
    simulate->callback([&] { run_simulate(scenario_path, out_path); });

    auto* report = app.add_subcommand(
        "report", "Full threshold and AUC report for every catalog entry");
    report->add_option("catalog", catalog_path, "catalog file (.json or .csv), or - for stdin")
        ->required();
    report->add_option("--catalog-format", catalog_format,
                       "override input format inference: json or csv");
    report->add_option("--format", format_json, "output format: json or csv");
    report->add_option("--out", out_path, "output path (default stdout)");
    report->callback(
        [&] { run_report(catalog_path, catalog_format, format_json, out_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const screening::MathError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const screening::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
