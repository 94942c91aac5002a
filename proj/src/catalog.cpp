#include "screening/catalog.hpp"

#include <charconv>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"

#include "screening/format.hpp"

namespace screening {

namespace {

using json = nlohmann::ordered_json;

const char* const kRateHeader = "name,sensitivity,specificity,prevalence";
const char* const kCountHeader = "name,tp,fp,fn,tn,prevalence";

[[noreturn]] void fail_entry(std::size_t index, const std::string& message) {
    throw ValidationError("catalog entry " + std::to_string(index + 1) + ": " + message);
}

[[noreturn]] void fail_line(std::size_t line, const std::string& message) {
    throw ValidationError("catalog line " + std::to_string(line) + ": " + message);
}

double number_field(const json& object, const char* key, std::size_t index) {
    const auto& value = object.at(key);
    if (!value.is_number()) fail_entry(index, std::string(key) + " must be a number");
    return value.get<double>();
}

std::int64_t count_field(const json& object, const char* key, std::size_t index) {
    const auto& value = object.at(key);
    if (!value.is_number_integer()) {
        fail_entry(index, std::string(key) + " must be a non-negative integer");
    }
    const auto count = value.get<std::int64_t>();
    if (count < 0) fail_entry(index, std::string(key) + " must be a non-negative integer");
    return count;
}

TestCatalogEntry entry_from_json(const json& object, std::size_t index) {
    if (!object.is_object()) fail_entry(index, "must be a JSON object");

    static const std::set<std::string> known_keys = {
        "name", "sensitivity", "specificity", "tp", "fp", "fn", "tn", "prevalence"};
    for (const auto& [key, unused] : object.items()) {
        if (!known_keys.count(key)) fail_entry(index, "unknown field \"" + key + "\"");
    }

    if (!object.contains("name") || !object.at("name").is_string()) {
        fail_entry(index, "missing string field \"name\"");
    }
    const auto name = object.at("name").get<std::string>();
    if (name.empty()) fail_entry(index, "name must not be empty");

    const bool has_rates = object.contains("sensitivity") || object.contains("specificity");
    const bool has_counts = object.contains("tp") || object.contains("fp") ||
                            object.contains("fn") || object.contains("tn");
    if (has_rates == has_counts) {
        fail_entry(index, "give either sensitivity/specificity or tp/fp/fn/tn, exactly one");
    }

    TestCatalogEntry entry{name, TestCharacteristics(0.0, 0.0), std::nullopt};
    if (has_rates) {
        if (!object.contains("sensitivity") || !object.contains("specificity")) {
            fail_entry(index, "sensitivity and specificity must come together");
        }
        const double a = number_field(object, "sensitivity", index);
        const double b = number_field(object, "specificity", index);
        try {
            entry.source = TestCharacteristics(a, b);
        } catch (const ValidationError& e) {
            fail_entry(index, e.what());
        }
    } else {
        for (const char* key : {"tp", "fp", "fn", "tn"}) {
            if (!object.contains(key)) {
                fail_entry(index, std::string("missing count field \"") + key + "\"");
            }
        }
        const auto tp = count_field(object, "tp", index);
        const auto fp = count_field(object, "fp", index);
        const auto fn = count_field(object, "fn", index);
        const auto tn = count_field(object, "tn", index);
        try {
            entry.source = ConfusionMatrix(tp, fp, fn, tn);
        } catch (const ValidationError& e) {
            fail_entry(index, e.what());
        }
    }
    if (object.contains("prevalence")) {
        const double prevalence = number_field(object, "prevalence", index);
        try {
            detail::require_probability(prevalence, "prevalence");
        } catch (const ValidationError& e) {
            fail_entry(index, e.what());
        }
        entry.current_prevalence = prevalence;
    }
    return entry;
}

std::vector<TestCatalogEntry> parse_json_catalog(std::istream& input) {
    json document;
    try {
        document = json::parse(input);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("catalog JSON: ") + e.what());
    }
    if (!document.is_array()) {
        throw ValidationError("catalog JSON must be an array of entry objects");
    }
    std::vector<TestCatalogEntry> entries;
    entries.reserve(document.size());
    for (std::size_t i = 0; i < document.size(); ++i) {
        entries.push_back(entry_from_json(document[i], i));
    }
    return entries;
}

// Splits one CSV record; fields may be double-quoted, with "" for a literal
// quote. Embedded newlines are not supported.
std::vector<std::string> split_csv(const std::string& line, std::size_t line_number) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            if (!field.empty()) fail_line(line_number, "stray quote inside unquoted field");
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
        ++i;
    }
    if (quoted) fail_line(line_number, "unterminated quoted field");
    fields.push_back(std::move(field));
    return fields;
}

double parse_double(const std::string& text, const char* key, std::size_t line) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        fail_line(line, std::string(key) + " is not a number: \"" + text + "\"");
    }
    return value;
}

std::int64_t parse_count(const std::string& text, const char* key, std::size_t line) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        fail_line(line, std::string(key) + " is not an integer: \"" + text + "\"");
    }
    return value;
}

std::vector<TestCatalogEntry> parse_csv_catalog(std::istream& input) {
    std::vector<TestCatalogEntry> entries;
    std::string line;
    std::size_t line_number = 0;
    bool header_seen = false;
    bool rate_form = false;

    while (std::getline(input, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        if (!header_seen) {
            if (line == kRateHeader) {
                rate_form = true;
            } else if (line == kCountHeader) {
                rate_form = false;
            } else {
                fail_line(line_number, "header must be \"" + std::string(kRateHeader) +
                                           "\" or \"" + std::string(kCountHeader) + "\"");
            }
            header_seen = true;
            continue;
        }

        const auto fields = split_csv(line, line_number);
        const std::size_t expected = rate_form ? 4 : 6;
        if (fields.size() != expected) {
            fail_line(line_number, "expected " + std::to_string(expected) + " fields, got " +
                                       std::to_string(fields.size()));
        }
        if (fields[0].empty()) fail_line(line_number, "name must not be empty");

        TestCatalogEntry entry{fields[0], TestCharacteristics(0.0, 0.0), std::nullopt};
        if (rate_form) {
            const double a = parse_double(fields[1], "sensitivity", line_number);
            const double b = parse_double(fields[2], "specificity", line_number);
            try {
                entry.source = TestCharacteristics(a, b);
            } catch (const ValidationError& e) {
                fail_line(line_number, e.what());
            }
        } else {
            const auto tp = parse_count(fields[1], "tp", line_number);
            const auto fp = parse_count(fields[2], "fp", line_number);
            const auto fn = parse_count(fields[3], "fn", line_number);
            const auto tn = parse_count(fields[4], "tn", line_number);
            try {
                entry.source = ConfusionMatrix(tp, fp, fn, tn);
            } catch (const ValidationError& e) {
                fail_line(line_number, e.what());
            }
        }
        const std::string& prevalence_field = fields[expected - 1];
        if (!prevalence_field.empty()) {
            const double prevalence = parse_double(prevalence_field, "prevalence", line_number);
            try {
                detail::require_probability(prevalence, "prevalence");
            } catch (const ValidationError& e) {
                fail_line(line_number, e.what());
            }
            entry.current_prevalence = prevalence;
        }
        entries.push_back(std::move(entry));
    }

    if (!header_seen) throw ParseError("catalog CSV is empty: header row required");
    return entries;
}

} // namespace

TestCharacteristics TestCatalogEntry::characteristics() const {
    if (const auto* rates = std::get_if<TestCharacteristics>(&source)) return *rates;
    const auto metrics = metrics_from_counts(std::get<ConfusionMatrix>(source));
    return TestCharacteristics(metrics.sensitivity, metrics.specificity);
}

std::vector<TestCatalogEntry> parse_catalog(std::istream& input, TextFormat format) {
    auto entries = format == TextFormat::json ? parse_json_catalog(input)
                                                 : parse_csv_catalog(input);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!seen.insert(entries[i].name).second) {
            fail_entry(i, "duplicate name \"" + entries[i].name + "\"");
        }
    }
    return entries;
}

std::string render_catalog(const std::vector<TestCatalogEntry>& entries, TextFormat format) {
    if (format == TextFormat::json) {
        json document = json::array();
        for (const auto& entry : entries) {
            const auto rates = entry.characteristics();
            json object = {{"name", entry.name},
                           {"sensitivity", rates.sensitivity()},
                           {"specificity", rates.specificity()}};
            if (entry.current_prevalence) object["prevalence"] = *entry.current_prevalence;
            document.push_back(std::move(object));
        }
        return document.dump(2) + "\n";
    }

    std::ostringstream out;
    out << kRateHeader << '\n';
    for (const auto& entry : entries) {
        const auto rates = entry.characteristics();
        out << csv_field(entry.name) << ',' << format_full(rates.sensitivity()) << ','
            << format_full(rates.specificity()) << ',';
        if (entry.current_prevalence) out << format_full(*entry.current_prevalence);
        out << '\n';
    }
    return out.str();
}

} // namespace screening
