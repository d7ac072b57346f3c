#include "ringoid_cli/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace ringoid::cli {

ParseError::ParseError(std::size_t line, std::size_t column, std::string const& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::size_t value;
  std::size_t column;
};

struct Line {
  std::size_t        number;
  std::vector<Token> tokens;
  std::size_t        end_column;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t       number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    auto const       nl  = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text                 = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!raw.empty() && raw.back() == '\r') {
      raw.remove_suffix(1);
    }
    Line line{number, {}, raw.size() + 1};
    std::size_t i = 0;
    while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) {
      ++i;
    }
    if (i < raw.size() && raw[i] == '#') {
      continue;
    }
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == ',') {
        ++i;
        continue;
      }
      std::size_t value = 0;
      auto const [ptr, ec] = std::from_chars(raw.data() + i, raw.data() + raw.size(), value);
      std::size_t const used = static_cast<std::size_t>(ptr - (raw.data() + i));
      if (ec != std::errc{} || used == 0 ||
          (ptr != raw.data() + raw.size() && *ptr != ' ' && *ptr != '\t' && *ptr != ',')) {
        throw ParseError(number, i + 1, "expected a non-negative integer");
      }
      line.tokens.push_back({value, i + 1});
      i += used;
    }
    lines.push_back(std::move(line));
    if (text.empty()) {
      break;
    }
  }
  return lines;
}

CayleyTable read_block(std::vector<Line> const& lines, std::size_t& at, std::size_t n,
                       char const* name) {
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (std::size_t row = 0; row < n; ++row) {
    if (at >= lines.size() || lines[at].tokens.empty()) {
      std::size_t const where = at < lines.size() ? lines[at].number
                                                  : (lines.empty() ? 1 : lines.back().number + 1);
      throw ParseError(where, 1,
                       std::string(name) + ": expected row " + std::to_string(row) +
                           " of " + std::to_string(n));
    }
    auto const& line = lines[at++];
    if (line.tokens.size() != n) {
      std::size_t const col = line.tokens.size() > n ? line.tokens[n].column : line.end_column;
      throw ParseError(line.number, col,
                       std::string(name) + ": row has " + std::to_string(line.tokens.size()) +
                           " entries, expected " + std::to_string(n));
    }
    for (auto const& tok : line.tokens) {
      if (tok.value >= n) {
        throw ParseError(line.number, tok.column,
                         std::string(name) + ": entry " + std::to_string(tok.value) +
                             " outside 0.." + std::to_string(n - 1));
      }
      entries.push_back(static_cast<Element>(tok.value));
    }
  }
  return CayleyTable(n, std::move(entries));
}

void skip_blank(std::vector<Line> const& lines, std::size_t& at) {
  while (at < lines.size() && lines[at].tokens.empty()) {
    ++at;
  }
}

}  // namespace

TableInput parse_text(std::string_view text) {
  auto const  lines = tokenize(text);
  std::size_t at    = 0;
  skip_blank(lines, at);
  if (at == lines.size()) {
    throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "empty input");
  }
  auto const& header = lines[at++];
  if (header.tokens.size() != 1) {
    throw ParseError(header.number, header.tokens.size() > 1 ? header.tokens[1].column : 1,
                     "first line must hold only the order n");
  }
  std::size_t const n = header.tokens[0].value;
  if (n == 0 || n > kMaxOrder) {
    throw ParseError(header.number, header.tokens[0].column,
                     "order must be in 1.." + std::to_string(kMaxOrder));
  }
  TableInput in{read_block(lines, at, n, "plus"), std::nullopt};
  if (at < lines.size() && !lines[at].tokens.empty()) {
    throw ParseError(lines[at].number, 1, "expected a blank line between the tables");
  }
  skip_blank(lines, at);
  if (at < lines.size()) {
    in.times = read_block(lines, at, n, "times");
    skip_blank(lines, at);
    if (at < lines.size()) {
      throw ParseError(lines[at].number, lines[at].tokens.front().column,
                       "unexpected content after the times table");
    }
  }
  return in;
}

namespace {

void render_rows(std::ostringstream& os, CayleyTable const& t) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      os << (b == 0 ? "" : " ") << static_cast<unsigned>(t(a, b));
    }
    os << '\n';
  }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

CayleyTable json_table(nlohmann::json const& j, std::size_t n, char const* name) {
  auto fail = [&](std::string const& what) {
    throw ParseError(1, 1, std::string(name) + ": " + what);
  };
  if (!j.is_array() || j.size() != n) {
    fail("expected an array of " + std::to_string(n) + " rows");
  }
  std::vector<Element> entries;
  for (std::size_t a = 0; a < n; ++a) {
    auto const& row = j[a];
    if (!row.is_array() || row.size() != n) {
      fail("row " + std::to_string(a) + " must have " + std::to_string(n) + " entries");
    }
    for (auto const& v : row) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= n) {
        fail("row " + std::to_string(a) + " has an entry outside 0.." + std::to_string(n - 1));
      }
      entries.push_back(static_cast<Element>(v.get<std::size_t>()));
    }
  }
  return CayleyTable(n, std::move(entries));
}

}  // namespace

std::string render_text(Ringoid const& r) {
  std::ostringstream os;
  os << r.size() << '\n';
  render_rows(os, r.plus());
  os << '\n';
  render_rows(os, r.times());
  return os.str();
}

TableInput parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    auto const [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, column, "malformed JSON");
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned()) {
    throw ParseError(1, 1, "expected an object with an unsigned \"n\"");
  }
  std::size_t const n = j["n"].get<std::size_t>();
  if (n == 0 || n > kMaxOrder) {
    throw ParseError(1, 1, "order must be in 1.." + std::to_string(kMaxOrder));
  }
  if (!j.contains("plus")) {
    throw ParseError(1, 1, "missing \"plus\"");
  }
  TableInput in{json_table(j["plus"], n, "plus"), std::nullopt};
  if (j.contains("times")) {
    in.times = json_table(j["times"], n, "times");
  }
  return in;
}

TableInput parse_any(std::string_view text) {
  auto const first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parse_json(text);
  }
  return parse_text(text);
}

nlohmann::json table_json(CayleyTable const& t) {
  auto rows = nlohmann::json::array();
  for (std::size_t a = 0; a < t.size(); ++a) {
    auto row = nlohmann::json::array();
    for (std::size_t b = 0; b < t.size(); ++b) {
      row.push_back(static_cast<unsigned>(t(a, b)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(Ringoid const& r) {
  return {{"n", r.size()}, {"plus", table_json(r.plus())}, {"times", table_json(r.times())}};
}

Ringoid to_ringoid(TableInput const& in) {
  if (!in.times) {
    throw std::invalid_argument("input has no times table");
  }
  return Ringoid(in.plus, *in.times);
}

nlohmann::json flags_json(RingoidFlags const& f) {
  return {
      {"plus_commutative", f.plus_commutative},
      {"plus_associative", f.plus_associative},
      {"plus_idempotent", f.plus_idempotent},
      {"times_associative", f.times_associative},
      {"times_commutative", f.times_commutative},
      {"times_quasigroup", f.times_quasigroup},
      {"has_neutral_zero", f.has_neutral_zero},
      {"has_absorbing_zero", f.has_absorbing_zero},
  };
}

nlohmann::json ringoid_record(Ringoid const& r, bool canonical) {
  nlohmann::json j = to_json(r);
  j["canonical"]   = canonical;
  j["flags"]       = flags_json(r.flags());
  return j;
}

}  // namespace ringoid::cli
