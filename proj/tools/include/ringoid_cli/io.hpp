#ifndef RINGOID_CLI_IO_HPP_
#define RINGOID_CLI_IO_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ringoid/cayley_table.hpp"
#include "ringoid/ringoid.hpp"

namespace ringoid::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// What an input file holds: one table, or a (plus, times) pair that need
/// not be distributive.
struct TableInput {
  CayleyTable                plus;
  std::optional<CayleyTable> times;
};

// Text: a line with n, n rows for plus, a blank line, n rows for times.
// The times block may be omitted.  Lines starting with '#' are ignored.
TableInput  parse_text(std::string_view text);
std::string render_text(Ringoid const& r);

// JSON: {"n":3,"plus":[[...]],"times":[[...]]}; "times" may be omitted.
TableInput     parse_json(std::string_view text);
nlohmann::json to_json(Ringoid const& r);
nlohmann::json table_json(CayleyTable const& t);

/// JSON if the first non-blank character is '{', text otherwise.
TableInput parse_any(std::string_view text);

/// The requirement of distributivity is applied here; throws
/// std::invalid_argument with the reason otherwise.
Ringoid to_ringoid(TableInput const& in);

/// One JSONL record: n, plus, times, canonical, flags.
nlohmann::json ringoid_record(Ringoid const& r, bool canonical);
nlohmann::json flags_json(RingoidFlags const& f);

}  // namespace ringoid::cli

#endif  // RINGOID_CLI_IO_HPP_
