#ifndef ZETAREG_TOOLS_OUTPUT_HPP_
#define ZETAREG_TOOLS_OUTPUT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "zetareg/complex.hpp"

namespace zetareg::cli {

// A single output value.  Complex values travel as "re+imi" strings in
// every format.
using Cell = std::variant<std::monostate, bool, std::int64_t, double, Complex, std::string>;

std::string cell_text(const Cell& cell);

// Ordered key/value pairs; insertion order is output order.
class Record {
 public:
  Record& set(std::string key, Cell value);
  const std::vector<std::pair<std::string, Cell>>& fields() const { return fields_; }

 private:
  std::vector<std::pair<std::string, Cell>> fields_;
};

struct CommandOutput {
  std::string command;
  Record params;
  std::vector<Record> results;
  std::vector<std::string> notes;  // plain format only
  bool verification_failed = false;
};

struct Meta {
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::string version;
};

enum class Format { kJson, kCsv, kPlain };

// {command, params, results[], meta{seed, tol, version}}, two-space indent.
std::string render_json(const CommandOutput& out, const Meta& meta);

// Header is the union of result keys in first-seen order; missing cells
// are empty.
std::string render_csv(const CommandOutput& out);

std::string render_plain(const CommandOutput& out, const Meta& meta);

std::string render(const CommandOutput& out, const Meta& meta, Format format);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC 4180 with LF line endings.  Throws ParseError on an unterminated
// quote or a row whose width differs from the header.
CsvTable parse_csv(std::string_view text);

// Quotes a field only when it contains a comma, quote, CR or LF, so
// write_csv(parse_csv(render_csv(x))) == render_csv(x).
std::string write_csv(const CsvTable& table);

}  // namespace zetareg::cli

#endif  // ZETAREG_TOOLS_OUTPUT_HPP_
