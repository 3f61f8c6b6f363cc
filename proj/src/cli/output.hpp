#pragma once

// Row-oriented documents rendered as CSV, JSON or plain text.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace ptrig::cli {

enum class Format { csv, json, text };

struct OutputSpec {
  Format format = Format::text;
  int precision = 5;        // decimal digits, 1..17
  std::string destination;  // empty: standard output
};

enum class Style {
  fixed,       // precision digits after the point
  scientific,  // precision significant digits after the leading one
  automatic,   // fixed for moderate magnitudes, scientific otherwise
};

struct Number {
  double value = 0.0;
  Style style = Style::fixed;
};

// monostate renders as null / empty cell / "-".
using Cell = std::variant<std::monostate, bool, std::int64_t, Number, std::string>;

struct Document {
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::optional<std::uint64_t> seed;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Column blocks printed as separate tables in text mode; empty means one block.
  std::vector<std::vector<std::size_t>> text_blocks;
};

// Infinity is "∞" (text), an empty cell (CSV) and null (JSON).
std::string format_number(double v, Style style, int precision);

std::string render(const Document& doc, const OutputSpec& spec);

// Writes to spec.destination, or to out when it is empty.
void emit(const Document& doc, const OutputSpec& spec, std::ostream& out);

}  // namespace ptrig::cli
