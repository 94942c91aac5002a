#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "screening/core.hpp"
#include "screening/format.hpp"

namespace screening {

// One named test, given either as rates or as raw confusion-matrix counts,
// optionally tagged with the prevalence it currently operates at.
struct TestCatalogEntry {
    std::string name;
    std::variant<TestCharacteristics, ConfusionMatrix> source;
    std::optional<double> current_prevalence;

    TestCharacteristics characteristics() const;
};

// Reads a whole catalog, validating every entry; the first violation throws
// with the offending entry and field named. Duplicate names are rejected.
std::vector<TestCatalogEntry> parse_catalog(std::istream& input, TextFormat format);

// Writes entries back out in the rate form, full precision, so a re-parse
// reproduces (name, sensitivity, specificity) exactly.
std::string render_catalog(const std::vector<TestCatalogEntry>& entries, TextFormat format);

} // namespace screening
