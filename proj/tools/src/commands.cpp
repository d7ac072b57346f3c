#include "ringoid_cli/commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "ringoid/congruences.hpp"
#include "ringoid/ideals.hpp"
#include "ringoid/symmetry.hpp"
#include "ringoid_cli/io.hpp"

namespace ringoid::cli {

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string format_partition(Partition const& p) {
  std::string s;
  for (auto const& cls : p.classes()) {
    s += s.empty() ? "{" : "/{";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      s += (i ? "," : "") + std::to_string(cls[i]);
    }
    s += "}";
  }
  return s;
}

std::string format_stats(CayleyTable const& t) {
  std::string s;
  for (std::size_t x = 0; x < t.size(); ++x) {
    auto const st = element_stats(t, static_cast<Element>(x));
    s += (x ? " " : "") + std::to_string(x) + ":(" + std::to_string(st.nl) + "," +
         std::to_string(st.nr) + "," + std::to_string(st.al) + "," +
         std::to_string(st.ar) + ")";
  }
  return s;
}

std::string format_optional(std::optional<Element> e) {
  return e ? std::to_string(*e) : "none";
}

void groupoid_section(Report& rep, std::string const& prefix, CayleyTable const& t) {
  rep.emplace_back(prefix + "associative", yes_no(is_associative(t)));
  rep.emplace_back(prefix + "commutative", yes_no(is_commutative(t)));
  rep.emplace_back(prefix + "idempotent", yes_no(is_idempotent(t)));
  rep.emplace_back(prefix + "quasigroup", yes_no(is_quasigroup(t)));
  rep.emplace_back(prefix + "neutral", format_optional(neutral_element(t)));
  rep.emplace_back(prefix + "absorbing", format_optional(absorbing_element(t)));
  auto const aut = automorphisms(t);
  rep.emplace_back(prefix + "aut_size", std::to_string(aut.size()));
  rep.emplace_back(prefix + "aut_transitive", yes_no(is_transitive(aut)));
  rep.emplace_back(prefix + "aut_triply_transitive", yes_no(is_triply_transitive(aut)));
  std::string full;
  try {
    full = std::string(to_string(full_aut_classification(t)));
  } catch (std::logic_error const&) {
    full = "unclassified";
  }
  rep.emplace_back(prefix + "full_aut", full);
  rep.emplace_back(prefix + "stats", format_stats(t));
  if (is_transitive(aut)) {
    rep.emplace_back(prefix + "stats_lemmas", yes_no(stats_lemmas_check(t).holds()));
  }
}

void ringoid_section(Report& rep, Ringoid const& r) {
  auto const& f = r.flags();
  rep.emplace_back("semiring", yes_no(f.semiring()));
  rep.emplace_back("generalised_parasemifield", yes_no(f.generalised_parasemifield()));
  auto const flags = flags_json(f);
  for (auto const& [key, value] : flags.items()) {
    rep.emplace_back(key, yes_no(value.get<bool>()));
  }
  bool const simple = is_congruence_simple(r);
  rep.emplace_back("congruence_simple", yes_no(simple));
  if (!simple) {
    rep.emplace_back("congruence_witness", format_partition(congruence_witness(r)));
  }
  if (r.size() <= kMaxIdealEnumeration) {
    rep.emplace_back("ideal_simple", yes_no(is_ideal_simple(r)));
    rep.emplace_back("ideal_free", yes_no(is_ideal_free(r)));
    rep.emplace_back("k_ideal_simple", yes_no(is_k_ideal_simple(r)));
  } else {
    rep.emplace_back("ideal_simple", "skipped");
    rep.emplace_back("ideal_free", "skipped");
    rep.emplace_back("k_ideal_simple", "skipped");
  }
  bool const idempotent_semiring = f.semiring() && f.plus_idempotent;
  rep.emplace_back("k_ideal_simple_fast",
                   idempotent_semiring ? yes_no(k_ideal_simple_fast(r)) : "n/a");
  rep.emplace_back("trichotomy", r.size() <= kMaxIdealEnumeration
                                     ? std::string(to_string(trichotomy(r)))
                                     : "skipped");
  bool const neutral = neutral_element(r.plus()).has_value();
  rep.emplace_back("plus_dichotomy", f.semiring() && neutral
                                         ? std::string(to_string(plus_dichotomy(r)))
                                         : "n/a");
  rep.emplace_back("no_neutral_dichotomy",
                   f.semiring() && !neutral && !f.plus_idempotent
                       ? std::string(to_string(no_neutral_dichotomy(r)))
                       : "n/a");
  rep.emplace_back("aut_size", std::to_string(automorphisms(r).size()));
}

std::string read_input(std::string const& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

Report check_report(std::string const& text) {
  TableInput const in = parse_any(text);
  Report           rep;
  rep.emplace_back("n", std::to_string(in.plus.size()));
  if (!in.times) {
    groupoid_section(rep, "", in.plus);
    return rep;
  }
  if (in.times->size() != in.plus.size()) {
    throw std::invalid_argument("tables differ in size");
  }
  bool const distributive = is_distributive(in.plus, *in.times);
  rep.emplace_back("distributive", yes_no(distributive));
  if (distributive) {
    ringoid_section(rep, Ringoid(in.plus, *in.times));
  }
  groupoid_section(rep, "plus.", in.plus);
  groupoid_section(rep, "times.", *in.times);
  return rep;
}

int cmd_check(CheckOptions const& o, std::ostream& out, std::ostream& err) {
  Report rep;
  try {
    rep = check_report(read_input(o.input));
  } catch (ParseError const& e) {
    err << "error: " << o.input << ": " << e.what() << '\n';
    return kExitBadInput;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  if (o.format == "json") {
    nlohmann::ordered_json j;
    for (auto const& [k, v] : rep) {
      j[k] = v;
    }
    out << j.dump(2) << '\n';
  } else {
    for (auto const& [k, v] : rep) {
      out << k << ": " << v << '\n';
    }
  }
  int status = kExitOk;
  for (auto const& e : o.expect) {
    auto const eq = e.find('=');
    if (eq == std::string::npos) {
      err << "error: --expect wants key=value, got " << e << '\n';
      return kExitBadInput;
    }
    std::string const key = e.substr(0, eq), want = e.substr(eq + 1);
    auto it = std::find_if(rep.begin(), rep.end(), [&](auto const& kv) { return kv.first == key; });
    std::string const got = it == rep.end() ? "<missing>" : it->second;
    if (got != want) {
      err << "FAIL " << key << " expected=" << want << " actual=" << got << '\n';
      status = kExitCheckFail;
    }
  }
  return status;
}

namespace {

void write_csv(std::ostream& os, EnumerationResult const& r, RunOptions const& run) {
  os << "# " << r.provenance.engine_version << " jobs=" << run.jobs
     << " units_run=" << r.provenance.units_run
     << " units_resumed=" << r.provenance.units_resumed << " leaves=" << r.leaves
     << " prune=" << (r.spec.prune ? "on" : "off") << '\n';
  os << "order,class,filter,count,seconds\n";
  os << r.spec.order << ',' << to_string(r.spec.times_class()) << ','
     << to_string(r.spec.filter) << ',' << r.count() << ',' << std::fixed
     << std::setprecision(3) << r.provenance.seconds << '\n';
}

void write_records(std::ostream& os, EnumerationResult const& r, std::string const& format) {
  if (r.ringoids) {
    for (std::size_t i = 0; i < r.ringoids->size(); ++i) {
      auto const& ring = (*r.ringoids)[i];
      if (format == "jsonl") {
        os << ringoid_record(ring, true).dump() << '\n';
      } else {
        os << (i ? "\n" : "") << render_text(ring);
      }
    }
  }
  if (r.groupoids) {
    for (auto const& t : *r.groupoids) {
      if (format == "jsonl") {
        nlohmann::json j = {{"n", t.size()}, {"table", table_json(t)}, {"canonical", true}};
        os << j.dump() << '\n';
      } else {
        for (std::size_t a = 0; a < t.size(); ++a) {
          for (std::size_t b = 0; b < t.size(); ++b) {
            os << (b ? " " : "") << static_cast<unsigned>(t(a, b));
          }
          os << '\n';
        }
        os << '\n';
      }
    }
  }
}

std::string summary_line(EnumerationResult const& r) {
  std::ostringstream os;
  os << "order=" << r.spec.order << " structure=" << to_string(r.spec.structure)
     << " class=" << to_string(r.spec.times_class())
     << " filter=" << to_string(r.spec.filter) << " count=" << r.count()
     << " (total=" << r.counts.total << " commutative=" << r.counts.commutative
     << " associative=" << r.counts.associative << ") seconds=" << std::fixed
     << std::setprecision(3) << r.provenance.seconds;
  return os.str();
}

}  // namespace

int cmd_enumerate(EnumerateOptions const& o, std::ostream& out, std::ostream& err) {
  if (o.format != "jsonl" && o.format != "csv" && o.format != "text") {
    err << "error: unknown format " << o.format << '\n';
    return kExitBadInput;
  }
  EnumerationResult r;
  try {
    r = enumerate(o.spec, o.run);
  } catch (ResourceCeilingExceeded const& e) {
    err << "refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write " << o.out_path << '\n';
      return kExitBadInput;
    }
  }
  std::ostream& data = o.out_path.empty() ? out : file;
  if (o.format == "csv") {
    write_csv(data, r, o.run);
  } else {
    write_records(data, r, o.format);
  }
  (o.out_path.empty() && !o.spec.count_only && o.format != "csv" ? err : out)
      << summary_line(r) << '\n';
  return kExitOk;
}

std::optional<std::uint64_t> published_count(TimesClass c, std::size_t n) {
  // Congruence-simple semirings with idempotent addition and absorbing zero,
  // up to isomorphism; orders 2..6.  The order-6 general count is unknown.
  static std::map<std::pair<TimesClass, std::size_t>, std::uint64_t> const table = {
      {{TimesClass::General, 2}, 2},      {{TimesClass::General, 3}, 5},
      {{TimesClass::General, 4}, 428},    {{TimesClass::General, 5}, 138167},
      {{TimesClass::Commutative, 2}, 2},  {{TimesClass::Commutative, 3}, 1},
      {{TimesClass::Commutative, 4}, 21}, {{TimesClass::Commutative, 5}, 715},
      {{TimesClass::Commutative, 6}, 59640},
      {{TimesClass::Associative, 2}, 2},  {{TimesClass::Associative, 3}, 0},
      {{TimesClass::Associative, 4}, 0},  {{TimesClass::Associative, 5}, 0},
      {{TimesClass::Associative, 6}, 1},
  };
  auto it = table.find({c, n});
  return it == table.end() ? std::nullopt : std::optional(it->second);
}

int cmd_reproduce_table(ReproduceOptions const& o, std::ostream& out, std::ostream& err) {
  if (o.max_order < 1 || o.max_order > 6) {
    err << "error: --max-order must be in 1..6\n";
    return kExitBadInput;
  }
  struct Cell {
    std::optional<std::uint64_t> computed;
    std::optional<std::uint64_t> expected;
  };
  std::map<std::pair<TimesClass, std::size_t>, Cell> cells;
  for (auto c : o.classes) {
    for (std::size_t n = 1; n <= o.max_order; ++n) {
      Cell cell{std::nullopt, published_count(c, n)};
      bool const unknown = n >= 2 && !cell.expected;
      if (!unknown || o.include_unknown) {
        SearchSpec s;
        s.order             = n;
        s.times_commutative = c == TimesClass::Commutative;
        s.times_associative = c == TimesClass::Associative;
        s.count_only        = true;
        try {
          cell.computed = enumerate(s, o.run).count();
        } catch (std::exception const& e) {
          err << "error: " << to_string(c) << " n=" << n << ": " << e.what() << '\n';
          return kExitBadInput;
        }
      }
      cells[{c, n}] = cell;
    }
  }
  auto fmt = [](std::optional<std::uint64_t> v) {
    return v ? std::to_string(*v) : std::string("?");
  };
  out << std::left << std::setw(16) << "n" << "|";
  for (std::size_t n = 1; n <= o.max_order; ++n) {
    out << std::right << std::setw(10) << n;
  }
  out << '\n' << std::string(17 + 10 * o.max_order, '-') << '\n';
  for (auto c : o.classes) {
    out << std::left << std::setw(16) << ("# " + std::string(to_string(c))) << "|";
    for (std::size_t n = 1; n <= o.max_order; ++n) {
      out << std::right << std::setw(10) << fmt(cells[{c, n}].computed);
    }
    out << '\n';
  }
  out << '\n';
  bool all_pass = true;
  for (auto c : o.classes) {
    for (std::size_t n = 1; n <= o.max_order; ++n) {
      auto const& cell = cells[{c, n}];
      out << to_string(c) << " n=" << n << " computed=" << fmt(cell.computed);
      if (cell.expected) {
        bool const pass = cell.computed == cell.expected;
        all_pass        = all_pass && pass;
        out << " expected=" << *cell.expected << (pass ? " PASS" : " FAIL");
      } else if (n == 1) {
        out << " expected=- (no published value)";
      } else if (cell.computed) {
        out << " expected=? (new, unverified)";
      } else {
        out << " expected=? skipped";
      }
      out << '\n';
    }
  }
  return all_pass ? kExitOk : kExitCheckFail;
}

int cmd_scan_groupoids(ScanOptions const& o, std::ostream& out, std::ostream& err) {
  try {
    if (o.parasemifields) {
      auto const rep = scan_parasemifields(o.order);
      out << "order=" << rep.order << " quasigroups=" << rep.quasigroups
          << " found=" << rep.found.size()
          << " commutative_semigroup_plus=" << rep.commutative_semigroup_plus
          << " associative_plus=" << rep.associative_plus
          << " commutative_plus=" << rep.commutative_plus
          << " all_plus_transitive=" << yes_no(rep.all_plus_transitive)
          << " plus_without_neutral_or_absorbing="
          << yes_no(rep.all_plus_without_neutral_or_absorbing) << '\n';
      if (o.format == "jsonl") {
        for (auto const& r : rep.found) {
          out << ringoid_record(r, true).dump() << '\n';
        }
      }
      bool const ok = rep.all_plus_transitive &&
                      (o.order < 2 || (rep.commutative_semigroup_plus == 0 &&
                                       rep.all_plus_without_neutral_or_absorbing));
      return ok ? kExitOk : kExitCheckFail;
    }
    auto const res = scan_transitive_groupoids(o.order, o.constraints, o.method,
                                               o.samples, o.seed);
    bool lemmas_ok = true;
    for (auto const& t : res.tables) {
      auto const lemmas = stats_lemmas_check(t);
      lemmas_ok         = lemmas_ok && lemmas.holds();
      std::string full;
      try {
        full = std::string(to_string(full_aut_classification(t)));
      } catch (std::logic_error const&) {
        full = "unclassified";
      }
      if (o.format == "jsonl") {
        nlohmann::json j = {{"n", t.size()},
                            {"table", table_json(t)},
                            {"aut_size", automorphisms(t).size()},
                            {"stats",
                             {lemmas.common.nl, lemmas.common.nr, lemmas.common.al,
                              lemmas.common.ar}},
                            {"stats_lemmas", lemmas.holds()},
                            {"full_aut", full}};
        out << j.dump() << '\n';
      } else {
        for (std::size_t a = 0; a < t.size(); ++a) {
          for (std::size_t b = 0; b < t.size(); ++b) {
            out << (b ? " " : "") << static_cast<unsigned>(t(a, b));
          }
          out << '\n';
        }
        out << "aut=" << automorphisms(t).size() << " stats=(" << lemmas.common.nl << ','
            << lemmas.common.nr << ',' << lemmas.common.al << ',' << lemmas.common.ar
            << ") lemmas=" << (lemmas.holds() ? "hold" : "FAIL") << " full_aut=" << full
            << "\n\n";
      }
    }
    (o.format == "jsonl" ? err : out)
        << "order=" << o.order << " candidates=" << res.candidates
        << " prefiltered=" << res.prefiltered << " found=" << res.tables.size()
        << (res.exhaustive ? " exhaustive" : " sampled, not exhaustive") << '\n';
    return lemmas_ok ? kExitOk : kExitCheckFail;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}

int cmd_demo_examples(DemoOptions const& o, std::ostream& out, std::ostream& err) {
  bool all_ok = true;
  for (std::size_t m : o.moduli) {
    if (m % 2 == 0) {
      err << "error: midpoint needs odd m, got " << m << '\n';
      return kExitBadInput;
    }
    CayleyTable const plus  = midpoint_groupoid(m);
    CayleyTable const times = cyclic_addition(m);
    bool const        distributive = is_distributive(plus, times);
    auto const        aut          = automorphisms(plus);
    auto const        stats        = element_stats(plus, 0);
    bool const        transitive   = is_transitive(aut);
    bool const        lemmas       = transitive && stats_lemmas_check(plus).holds();
    bool const        unit_stats =
        stats.nl == 1 && stats.nr == 1 && stats.al == 1 && stats.ar == 1;
    bool const quasigroups = is_quasigroup(plus) && is_quasigroup(times);
    bool const via_mult    = parasemifield_check_via_mult(plus, times);
    bool const no_special =
        m == 1 || (!neutral_element(plus) && !absorbing_element(plus));
    bool const translations = [&] {
      auto const shifts = cyclic_translations(m);
      for (auto const& g : shifts.elements()) {
        if (!aut.contains(g)) {
          return false;
        }
      }
      return true;
    }();
    bool const ok = distributive && transitive && lemmas && unit_stats && quasigroups &&
                    via_mult && no_special && translations && is_commutative(plus) &&
                    is_group(times);
    all_ok = all_ok && ok;
    out << "midpoint m=" << m << ": distributive=" << yes_no(distributive)
        << " parasemifield=" << yes_no(via_mult) << " aut=" << aut.size()
        << " transitive=" << yes_no(transitive) << " stats=(" << stats.nl << ','
        << stats.nr << ',' << stats.al << ',' << stats.ar << ")"
        << " no_neutral_or_absorbing=" << yes_no(no_special) << (ok ? " PASS" : " FAIL")
        << '\n';
  }
  long const  k        = o.window;
  std::size_t triples  = 0;
  bool        max_plus = true;
  for (long a = -k; a <= k; ++a) {
    for (long b = -k; b <= k; ++b) {
      for (long c = -k; c <= k; ++c) {
        ++triples;
        max_plus = max_plus && a + std::max(b, c) == std::max(a + b, a + c) &&
                   std::max(a, b) + c == std::max(a + c, b + c);
      }
    }
  }
  all_ok = all_ok && max_plus;
  out << "(Z,max,+) on [-" << k << "," << k << "]: " << triples
      << " triples, distributive=" << yes_no(max_plus)
      << " (sampled, not a proof)" << (max_plus ? " PASS" : " FAIL") << '\n';
  return all_ok ? kExitOk : kExitCheckFail;
}

}  // namespace ringoid::cli
