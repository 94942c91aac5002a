#pragma once

#include <string>

namespace screening {

enum class TextFormat { json, csv };

// Shortest decimal form that parses back to the identical double.
std::string format_full(double value);

// Six significant digits, for human-facing tables.
std::string format_sig6(double value);

// Text with &, <, >, " escaped for embedding in XML attribute or text nodes.
std::string xml_escape(const std::string& text);

// Field quoted per CSV rules when it contains a comma or a quote.
std::string csv_field(const std::string& text);

} // namespace screening
