#include "cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "ptrig/errors.hpp"

#ifndef PTRIG_VERSION
#define PTRIG_VERSION "0.0.0"
#endif

namespace ptrig::cli {
namespace {

using nlohmann::ordered_json;

// Bumped whenever a JSON key or CSV header changes.
constexpr int kSchemaVersion = 1;

std::string finite_text(double v, Style style, int precision) {
  if (style == Style::automatic) {
    const double a = std::abs(v);
    style = (a == 0.0 || (a >= 1e-4 && a < 1e9)) ? Style::fixed : Style::scientific;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, style == Style::fixed ? "%.*f" : "%.*e", precision, v);
  std::string s = buf;
  // A value that rounds to zero prints without a sign.
  if (s[0] == '-' && s.find_first_not_of("-0.e+", 1) == std::string::npos) s.erase(0, 1);
  return s;
}

std::string cell_text(const Cell& c, Format f, int precision) {
  struct Visitor {
    Format f;
    int precision;
    std::string operator()(std::monostate) const { return f == Format::text ? "-" : ""; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(const Number& n) const {
      if (std::isinf(n.value) && f == Format::csv) return "";
      return format_number(n.value, n.style, precision);
    }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{f, precision}, c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

ordered_json cell_json(const Cell& c, int precision) {
  if (const auto* n = std::get_if<Number>(&c)) {
    if (!std::isfinite(n->value)) return nullptr;
    // Round through the printed form so every format carries the same digits.
    return std::strtod(finite_text(n->value, n->style, precision).c_str(), nullptr);
  }
  if (std::holds_alternative<std::monostate>(c)) return nullptr;
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  return std::get<std::string>(c);
}

std::string render_csv(const Document& doc, int precision) {
  std::string out;
  for (std::size_t j = 0; j < doc.columns.size(); ++j) {
    if (j) out += ',';
    out += csv_escape(doc.columns[j]);
  }
  out += '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += csv_escape(cell_text(row[j], Format::csv, precision));
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Document& doc, int precision) {
  ordered_json meta;
  meta["version"] = PTRIG_VERSION;
  meta["schema"] = kSchemaVersion;
  meta["seed"] = doc.seed ? ordered_json(*doc.seed) : ordered_json(nullptr);
  meta["config"] = doc.config;
  ordered_json rows = ordered_json::array();
  for (const auto& row : doc.rows) {
    ordered_json r = ordered_json::object();
    for (std::size_t j = 0; j < row.size(); ++j) r[doc.columns[j]] = cell_json(row[j], precision);
    rows.push_back(std::move(r));
  }
  ordered_json top;
  top["meta"] = std::move(meta);
  top["rows"] = std::move(rows);
  return top.dump(2) + '\n';
}

std::string render_text(const Document& doc, int precision) {
  std::vector<std::vector<std::size_t>> blocks = doc.text_blocks;
  if (blocks.empty()) {
    blocks.emplace_back();
    for (std::size_t j = 0; j < doc.columns.size(); ++j) blocks[0].push_back(j);
  }
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += '\n';
    for (std::size_t k = 0; k < blocks[b].size(); ++k) {
      if (k) out += '\t';
      out += doc.columns[blocks[b][k]];
    }
    out += '\n';
    for (const auto& row : doc.rows) {
      for (std::size_t k = 0; k < blocks[b].size(); ++k) {
        if (k) out += '\t';
        out += cell_text(row[blocks[b][k]], Format::text, precision);
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace

std::string format_number(double v, Style style, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "∞" : "-∞";
  return finite_text(v, style, precision);
}

std::string render(const Document& doc, const OutputSpec& spec) {
  switch (spec.format) {
    case Format::csv: return render_csv(doc, spec.precision);
    case Format::json: return render_json(doc, spec.precision);
    case Format::text: break;
  }
  return render_text(doc, spec.precision);
}

void emit(const Document& doc, const OutputSpec& spec, std::ostream& out) {
  const std::string text = render(doc, spec);
  if (spec.destination.empty()) {
    out << text;
    return;
  }
  std::ofstream f(spec.destination, std::ios::binary);
  if (!f) throw DomainError("cannot open output file: " + spec.destination);
  f << text;
  if (!f) throw DomainError("failed writing output file: " + spec.destination);
}

}  // namespace ptrig::cli
