#include "output.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zetareg/errors.hpp"

namespace zetareg::cli {
namespace {

using Json = nlohmann::ordered_json;

Json cell_json(const Cell& cell) {
  struct Visitor {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(bool b) const { return b; }
    Json operator()(std::int64_t n) const { return n; }
    Json operator()(double x) const { return x; }
    Json operator()(Complex z) const { return format_complex(z); }
    Json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

Json record_json(const Record& record) {
  Json obj = Json::object();
  for (const auto& [key, value] : record.fields()) obj[key] = cell_json(value);
  return obj;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k > 0) line += ',';
    line += csv_field(fields[k]);
  }
  line += '\n';
  return line;
}

}  // namespace

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t n) const { return std::to_string(n); }
    std::string operator()(double x) const { return format_double(x); }
    std::string operator()(Complex z) const { return format_complex(z); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

Record& Record::set(std::string key, Cell value) {
  for (auto& field : fields_) {
    if (field.first == key) {
      field.second = std::move(value);
      return *this;
    }
  }
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::string render_json(const CommandOutput& out, const Meta& meta) {
  Json doc = Json::object();
  doc["command"] = out.command;
  doc["params"] = record_json(out.params);
  Json results = Json::array();
  for (const auto& record : out.results) results.push_back(record_json(record));
  doc["results"] = std::move(results);
  doc["meta"] = Json{{"seed", meta.seed}, {"tol", meta.tol}, {"version", meta.version}};
  return doc.dump(2) + "\n";
}

std::string render_csv(const CommandOutput& out) {
  CsvTable table;
  for (const auto& record : out.results) {
    for (const auto& [key, value] : record.fields()) {
      if (std::find(table.header.begin(), table.header.end(), key) == table.header.end()) {
        table.header.push_back(key);
      }
    }
  }
  for (const auto& record : out.results) {
    std::vector<std::string> row(table.header.size());
    for (const auto& [key, value] : record.fields()) {
      const auto it = std::find(table.header.begin(), table.header.end(), key);
      row[static_cast<std::size_t>(it - table.header.begin())] = cell_text(value);
    }
    table.rows.push_back(std::move(row));
  }
  return write_csv(table);
}

std::string render_plain(const CommandOutput& out, const Meta& meta) {
  std::ostringstream text;
  text << out.command;
  for (const auto& [key, value] : out.params.fields()) text << ' ' << key << '=' << cell_text(value);
  text << '\n';
  for (std::size_t k = 0; k < out.results.size(); ++k) {
    text << '[' << k << ']';
    for (const auto& [key, value] : out.results[k].fields()) {
      text << "  " << key << '=' << cell_text(value);
    }
    text << '\n';
  }
  for (const auto& note : out.notes) text << note << '\n';
  text << "seed=" << meta.seed << " tol=" << format_double(meta.tol) << " version=" << meta.version
       << '\n';
  return text.str();
}

std::string render(const CommandOutput& out, const Meta& meta, Format format) {
  switch (format) {
    case Format::kJson: return render_json(out, meta);
    case Format::kCsv: return render_csv(out);
    case Format::kPlain: return render_plain(out, meta);
  }
  return {};
}

CsvTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool at_field_start = true;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (quoted) {
      if (c != '"') {
        field += c;
      } else if (k + 1 < text.size() && text[k + 1] == '"') {
        field += '"';
        ++k;
      } else {
        quoted = false;
      }
      continue;
    }
    if (c == '"' && at_field_start) {
      quoted = true;
      at_field_start = false;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      at_field_start = true;
    } else if (c == '\n') {
      fields.push_back(std::move(field));
      field.clear();
      lines.push_back(std::move(fields));
      fields.clear();
      at_field_start = true;
    } else {
      field += c;
      at_field_start = false;
    }
  }
  if (quoted) throw ParseError("csv: unterminated quoted field");
  if (!fields.empty() || !field.empty()) {
    throw ParseError("csv: missing newline after the last row");
  }

  CsvTable table;
  if (lines.empty()) return table;
  table.header = std::move(lines.front());
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (lines[k].size() != table.header.size()) {
      throw ParseError("csv: row " + std::to_string(k) + " has " +
                       std::to_string(lines[k].size()) + " fields, header has " +
                       std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(lines[k]));
  }
  return table;
}

std::string write_csv(const CsvTable& table) {
  if (table.header.empty()) return {};
  std::string out = csv_line(table.header);
  for (const auto& row : table.rows) out += csv_line(row);
  return out;
}

}  // namespace zetareg::cli
