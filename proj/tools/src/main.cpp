#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "ringoid_cli/commands.hpp"

namespace {

using namespace ringoid;

double work_ceiling_from_env() {
  if (char const* env = std::getenv("RINGOID_WORK_CEILING")) {
    try {
      return std::stod(env);
    } catch (std::exception const&) {
      std::cerr << "warning: ignoring unparsable RINGOID_WORK_CEILING=" << env << '\n';
    }
  }
  return kDefaultWorkCeiling;
}

std::vector<std::string> const kClassNames = {"general", "commutative", "associative"};
std::vector<std::string> const kFilterNames = {"congruence-simple", "k-ideal-simple",
                                               "ideal-simple", "all"};

StructureClass structure_of(std::string const& s) {
  if (s == "groupoid") {
    return StructureClass::Groupoid;
  }
  if (s == "parasemifield") {
    return StructureClass::ParasemifieldCandidate;
  }
  return StructureClass::IdempotentSemiringWithZero;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ringoid checker and enumerator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kEngineVersion));

  cli::CheckOptions check;
  auto*             check_cmd = app.add_subcommand("check", "Report properties of a table file");
  check_cmd->add_option("input", check.input, "Table file (text or JSON), - for stdin")
      ->required();
  check_cmd->add_option("--format", check.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  check_cmd->add_option("--expect", check.expect, "key=value that must hold (repeatable)");

  cli::EnumerateOptions en;
  en.run.jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string  en_class  = "general";
  std::string  en_filter = "congruence-simple";
  std::string  structure = "semiring";
  std::string  prune    = "on";
  std::size_t  shard_begin = 0;
  std::size_t  shard_end   = WorkRange{}.end;
  auto*        en_cmd   = app.add_subcommand("enumerate", "Enumerate simple structures");
  en_cmd->add_option("--order", en.spec.order, "Carrier size")->required()->check(CLI::Range(1, 8));
  en_cmd->add_option("--structure", structure, "Structure family")
      ->check(CLI::IsMember({"semiring", "groupoid", "parasemifield"}));
  en_cmd->add_option("--class", en_class, "Multiplication class")
      ->check(CLI::IsMember(kClassNames));
  en_cmd->add_option("--filter", en_filter, "Simplicity filter")
      ->check(CLI::IsMember(kFilterNames));
  en_cmd->add_flag("--count-only", en.spec.count_only, "Count without materialising");
  en_cmd->add_option("--out", en.out_path, "Output file (default stdout)");
  en_cmd->add_option("--format", en.format, "Output format")
      ->check(CLI::IsMember({"jsonl", "csv", "text"}));
  en_cmd->add_option("--jobs", en.run.jobs, "Worker threads")->check(CLI::PositiveNumber);
  en_cmd->add_option("--checkpoint", en.run.checkpoint_path, "Checkpoint file");
  en_cmd->add_flag("--resume", en.run.resume, "Resume from the checkpoint (count-only)");
  en_cmd->add_option("--prune", prune, "k-ideal pruning")->check(CLI::IsMember({"on", "off"}));
  en_cmd->add_option("--shard-begin", shard_begin, "First work unit");
  en_cmd->add_option("--shard-end", shard_end, "One past the last work unit");

  cli::ReproduceOptions rep;
  rep.run.jobs = en.run.jobs;
  std::vector<std::string> rep_classes;
  auto* rep_cmd = app.add_subcommand("reproduce-table", "Recompute the published count grid");
  rep_cmd->add_option("--max-order", rep.max_order, "Largest order")->check(CLI::Range(1, 6));
  rep_cmd->add_option("--class", rep_classes, "Rows to compute (repeatable)")
      ->check(CLI::IsMember(kClassNames));
  rep_cmd->add_flag("--include-unknown", rep.include_unknown,
                    "Also compute cells without a published value");
  rep_cmd->add_option("--jobs", rep.run.jobs, "Worker threads")->check(CLI::PositiveNumber);

  cli::ScanOptions scan;
  std::string      method = "auto";
  auto* scan_cmd = app.add_subcommand("scan-groupoids", "Groupoids with transitive automorphisms");
  scan_cmd->add_option("--order", scan.order, "Carrier size")->required()->check(CLI::Range(1, 12));
  scan_cmd->add_flag("--commutative", scan.constraints.commutative);
  scan_cmd->add_flag("--associative", scan.constraints.associative);
  scan_cmd->add_flag("--quasigroup", scan.constraints.quasigroup);
  scan_cmd->add_flag("--idempotent", scan.constraints.idempotent);
  scan_cmd->add_option("--method", method, "Candidate source")
      ->check(CLI::IsMember({"auto", "raw", "invariant"}));
  scan_cmd->add_option("--samples", scan.samples, "Random tables when order > 5");
  scan_cmd->add_option("--seed", scan.seed, "Sampling seed");
  scan_cmd->add_flag("--parasemifields", scan.parasemifields,
                     "Search generalised parasemifields instead (order <= 4)");
  scan_cmd->add_option("--format", scan.format, "Output format")
      ->check(CLI::IsMember({"text", "jsonl"}));

  cli::DemoOptions demo;
  auto* demo_cmd = app.add_subcommand("demo-examples", "Midpoint parasemifields and (Z,max,+)");
  demo_cmd->add_option("--moduli", demo.moduli, "Odd moduli");
  demo_cmd->add_option("--window", demo.window, "Half-width of the (Z,max,+) sample")
      ->check(CLI::Range(0, 1000));

  CLI11_PARSE(app, argc, argv);

  double const ceiling = work_ceiling_from_env();
  if (*check_cmd) {
    return cli::cmd_check(check, std::cout, std::cerr);
  }
  if (*en_cmd) {
    en.spec.structure         = structure_of(structure);
    en.spec.filter            = *parse_filter(en_filter);
    en.spec.times_commutative = en_class == "commutative";
    en.spec.times_associative = en_class == "associative";
    en.spec.prune             = prune == "on";
    en.spec.shard             = {shard_begin, shard_end};
    en.run.work_ceiling       = ceiling;
    return cli::cmd_enumerate(en, std::cout, std::cerr);
  }
  if (*rep_cmd) {
    if (!rep_classes.empty()) {
      rep.classes.clear();
      for (auto const& c : rep_classes) {
        rep.classes.push_back(*parse_times_class(c));
      }
    }
    rep.run.work_ceiling = ceiling;
    return cli::cmd_reproduce_table(rep, std::cout, std::cerr);
  }
  if (*scan_cmd) {
    scan.method = method == "raw"       ? ScanMethod::RawTables
                  : method == "invariant" ? ScanMethod::InvariantTables
                                          : ScanMethod::Auto;
    return cli::cmd_scan_groupoids(scan, std::cout, std::cerr);
  }
  return cli::cmd_demo_examples(demo, std::cout, std::cerr);
}
