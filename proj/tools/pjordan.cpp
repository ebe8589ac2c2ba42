// pjordan: exact Jordan-type computations for order-p unipotent elements of
// classical groups. Subcommands: predict, oracle, verify-theorem1, prop2-scan.
// Reports are JSON Lines on stdout (or a table with --table); diagnostics go
// to stderr. Exit codes: 0 ok, 1 a sweep produced FAIL verdicts, 2 invalid
// input, 3 size limit.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pjordan/sweep.hpp"

namespace {

using namespace pjordan;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  if (out.empty()) fail(Errc::InvalidArgument, "empty list '" + s + "'");
  return out;
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dash = s.find('-');
  if (dash == std::string::npos) {
    int v = std::stoi(s);
    return {v, v};
  }
  return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
}

struct OutputOptions {
  bool table = false;
};

void emit_report(const cli::VerdictReport& rep, const OutputOptions& out, bool& header_done) {
  if (out.table) {
    if (!header_done) {
      std::cout << cli::table_header() << "\n";
      header_done = true;
    }
    std::cout << cli::to_table_row(rep) << "\n";
  } else {
    std::cout << cli::to_json_line(rep) << "\n";
  }
}

int exit_code_for(const Error& e) {
  return e.code == Errc::SizeLimit ? 3 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan block structure of order-p unipotent elements in irreducible "
               "representations of classical groups, over GF(p), in exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand name

  OutputOptions out;
  long long max_dim = 3000;
  int threads = 1;
  bool allow_uncertified = false;
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON Lines output (default)");
  app.add_flag("--table", out.table, "human-readable table instead of JSON");
  app.add_option("--max-dim", max_dim, "dimension cap for oracle constructions");
  app.add_option("--threads", threads, "worker threads for sweeps");
  app.add_flag("--allow-uncertified", allow_uncertified,
               "run oracle comparisons even for constructions not on the certified list");

  std::string family_str = "A", part_str, weight_str, construction_str;
  int rank = 0, p = 0;

  auto add_case_flags = [&](CLI::App* cmd, bool need_weight) {
    cmd->add_option("-f,--family", family_str, "group family: A, B, C or D")->required();
    cmd->add_option("-r,--rank", rank, "group rank")->required();
    cmd->add_option("-p,--prime", p, "odd prime")->required();
    cmd->add_option("--part", part_str, "Jordan partition of the natural module, e.g. 3,1,1,1")
        ->required();
    if (need_weight)
      cmd->add_option("-w,--weight", weight_str, "highest weight in fundamental coordinates")
          ->required();
  };

  CLI::App* cmd_predict = app.add_subcommand("predict", "invariants of one case, no oracle");
  add_case_flags(cmd_predict, true);

  CLI::App* cmd_oracle =
      app.add_subcommand("oracle", "build the construction matrix and compare with predictions");
  add_case_flags(cmd_oracle, false);
  cmd_oracle->add_option("-c,--construction", construction_str,
                         "construction, e.g. S3, E2, S2xS1@1 (factors joined by x, @t twists)")
      ->required();

  std::string families_str = "A", ranks_str, primes_str;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify-theorem1", "sweep all valid classes and certified constructions; check the "
                         "size-p lower bound case by case");
  cmd_verify->add_option("--families", families_str, "comma list of families, e.g. A,C");
  cmd_verify->add_option("--ranks", ranks_str, "rank range lo-hi")->required();
  cmd_verify->add_option("--primes", primes_str, "comma list of odd primes")->required();

  int scan_m = 0, scan_a = 0;
  CLI::App* cmd_scan = app.add_subcommand(
      "prop2-scan", "size-p counts of S^a of the natural module for the regular class of the "
                    "rank-m subgroup, across a rank range");
  cmd_scan->add_option("-f,--family", family_str, "group family: A or C")->required();
  cmd_scan->add_option("-m", scan_m, "rank of the embedded subgroup")->required();
  cmd_scan->add_option("-a", scan_a, "symmetric power degree")->required();
  cmd_scan->add_option("-p,--prime", p, "odd prime")->required();
  cmd_scan->add_option("--ranks", ranks_str, "rank range lo-hi")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(cmd_predict) || app.got_subcommand(cmd_oracle)) {
      GroupType g{family_from_char(family_str.at(0)), rank};
      UnipotentClass cls = validate_class(g, p, parse_int_list(part_str));
      RootSystem rs = build_root_system(g);
      LabelledDiagram diagram = diagram_from_partition(rs, cls);

      cli::VerdictReport rep;
      if (app.got_subcommand(cmd_predict)) {
        Weight w{parse_int_list(weight_str)};
        if (static_cast<int>(w.fund.size()) != rank)
          fail(Errc::InvalidArgument, "weight length must equal the rank");
        if (is_zero(w)) fail(Errc::InvalidArgument, "weight must be nonzero");
        rep.key = cli::make_case_key(cls, w, "");
        rep.prediction = modp::predict(cls, diagram, w, p);
        auto outcome = modp::theorem1_verdict(*rep.prediction, modp::BlockMultiset{}, p);
        rep.verdict = rep.prediction->theorem1_hypothesis ? modp::Verdict::Undetermined
                                                          : outcome.verdict;
        if (rep.prediction->theorem1_hypothesis) rep.reason = "prediction only, oracle not run";
      } else {
        oracle::Construction c = oracle::parse_construction(construction_str);
        for (const auto& f : c.factors)
          if (f.kind == oracle::Factor::Kind::Ext && f.param > rank)
            fail(Errc::InvalidArgument, "exterior power index exceeds the rank");
        rep = cli::run_case(cls, c, max_dim, allow_uncertified);
      }
      bool header_done = false;
      emit_report(rep, out, header_done);
      return rep.verdict == modp::Verdict::SkippedSize ? 3 : 0;
    }

    if (app.got_subcommand(cmd_verify)) {
      cli::SweepOptions opt;
      for (char fc : families_str)
        if (fc != ',' && fc != ' ') opt.families.push_back(family_from_char(fc));
      auto [lo, hi] = parse_range(ranks_str);
      opt.rank_lo = lo;
      opt.rank_hi = hi;
      opt.primes = parse_int_list(primes_str);
      opt.max_dim = max_dim;
      opt.threads = threads;
      opt.allow_uncertified = allow_uncertified;

      bool header_done = false;
      cli::Summary summary = cli::theorem1_sweep(
          opt, [&](const cli::VerdictReport& rep) { emit_report(rep, out, header_done); });
      if (!out.table) std::cout << cli::to_json_line(summary) << "\n";
      else
        std::cout << "total " << summary.total << "  pass " << summary.pass << "  fail "
                  << summary.fail << "  undetermined " << summary.undetermined
                  << "  skipped " << summary.skipped_uncertified + summary.skipped_size << "\n";
      return summary.fail > 0 ? 1 : 0;
    }

    if (app.got_subcommand(cmd_scan)) {
      cli::Prop2Options opt;
      opt.family = family_from_char(family_str.at(0));
      opt.m = scan_m;
      opt.a = scan_a;
      opt.p = p;
      auto [lo, hi] = parse_range(ranks_str);
      opt.rank_lo = lo;
      opt.rank_hi = hi;
      opt.max_dim = max_dim;
      cli::Prop2Result res = cli::prop2_scan(opt);

      std::ostringstream os;
      os << "{\"schema\":\"pjordan/1\",\"prop2\":{\"family\":\"" << family_str.at(0)
         << "\",\"m\":" << opt.m << ",\"a\":" << opt.a << ",\"p\":" << opt.p << ",\"c\":" << res.c
         << ",\"regime\":\"" << res.regime << "\",\"ranks\":[";
      for (size_t i = 0; i < res.ranks.size(); ++i) os << (i ? "," : "") << res.ranks[i];
      os << "],\"size_p_counts\":[";
      for (size_t i = 0; i < res.size_p_counts.size(); ++i)
        os << (i ? "," : "") << res.size_p_counts[i];
      os << "],\"checked_values\":[";
      for (size_t i = 0; i < res.checked_values.size(); ++i)
        os << (i ? "," : "") << res.checked_values[i];
      os << "],\"constant\":" << (res.constant ? "true" : "false") << "}}";
      std::cout << os.str() << "\n";
      return res.constant ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
