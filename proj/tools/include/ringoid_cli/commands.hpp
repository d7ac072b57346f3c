#ifndef RINGOID_CLI_COMMANDS_HPP_
#define RINGOID_CLI_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringoid/search.hpp"

namespace ringoid::cli {

// Exit codes shared by all commands.
inline constexpr int kExitOk        = 0;
inline constexpr int kExitCheckFail = 1;
inline constexpr int kExitBadInput  = 2;
inline constexpr int kExitRefused   = 3;

/// Ordered key/value report; values are already formatted.
using Report = std::vector<std::pair<std::string, std::string>>;

/// Report for a table file (one groupoid or a pair of tables).
Report check_report(std::string const& text);

struct CheckOptions {
  std::string              input;   // path, "-" for stdin
  std::string              format = "text";  // text | json
  std::vector<std::string> expect;  // key=value
};
int cmd_check(CheckOptions const& o, std::ostream& out, std::ostream& err);

struct EnumerateOptions {
  SearchSpec  spec;
  RunOptions  run;
  std::string out_path;         // empty: stdout
  std::string format = "text";  // jsonl | csv | text
};
int cmd_enumerate(EnumerateOptions const& o, std::ostream& out, std::ostream& err);

/// Published counts; absent cells are std::nullopt.
std::optional<std::uint64_t> published_count(TimesClass c, std::size_t n);

struct ReproduceOptions {
  std::size_t             max_order = 5;
  std::vector<TimesClass> classes{TimesClass::General, TimesClass::Commutative,
                                  TimesClass::Associative};
  bool                    include_unknown = false;
  RunOptions              run;
};
int cmd_reproduce_table(ReproduceOptions const& o, std::ostream& out, std::ostream& err);

struct ScanOptions {
  std::size_t         order = 3;
  GroupoidConstraints constraints;
  ScanMethod          method  = ScanMethod::Auto;
  std::size_t         samples = 1000;
  std::uint64_t       seed    = 1;
  bool                parasemifields = false;
  std::string         format         = "text";  // text | jsonl
};
int cmd_scan_groupoids(ScanOptions const& o, std::ostream& out, std::ostream& err);

struct DemoOptions {
  std::vector<std::size_t> moduli{1, 3, 5, 7, 9};
  long                     window = 50;
};
int cmd_demo_examples(DemoOptions const& o, std::ostream& out, std::ostream& err);

}  // namespace ringoid::cli

#endif  // RINGOID_CLI_COMMANDS_HPP_
