#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "lacunary/errors.hpp"

namespace lacunary::cli {

namespace {

void add_jobs(CLI::App* sub, unsigned& jobs) {
  sub->add_option("--jobs,-j", jobs, "Worker threads; output order does not depend on it")->check(CLI::Range(1U, 256U));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lacunary binomial sums T(N,r,m) and T*(N,r,m)", "lacunary"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "Evaluate sums with one engine");
  c->add_option("--N", compute.n, "Modulus of the residue class")->required()->check(CLI::Range(2, 1 << 20));
  c->add_option("--r", compute.r, "Residue class (reduced mod N)");
  c->add_option("--m", compute.m, "Exponent: value, list or range such as 0..20")->required();
  c->add_option("--kind", compute.kind, "plain or star");
  c->add_option("--engine", compute.engine, "direct, poly, circulant, split:<d>, recurrence, cosine");
  c->add_option("--modulus", compute.modulus, "Reduce modulo an integer, or p2:<p> for p^2");
  c->add_flag("--json", compute.json, "One JSON object per line");
  c->add_flag("--no-verify", compute.no_verify, "Skip re-checking values against direct summation");
  add_jobs(c, compute.jobs);

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Cross-check every engine and identity");
  v->add_option("--max-N", verify.max_n)->check(CLI::Range(2, 64));
  v->add_option("--max-m", verify.max_m)->check(CLI::Range(1, 100000));
  add_jobs(v, verify.jobs);
  v->add_flag("--inject-fault", verify.inject_fault)->group("");

  TableOptions table;
  auto* t = app.add_subcommand("table", "Print characteristic recurrence coefficients");
  t->add_option("--max-N", table.max_n)->check(CLI::Range(2, 64));
  t->add_option("--family", table.family)->check(CLI::IsMember({"plain", "star", "both"}));

  FltScanOptions flt;
  auto* f = app.add_subcommand("flt-scan", "Check T(N,0,p) = 1 mod p^2 over a prime range");
  f->add_option("--from", flt.from);
  f->add_option("--to", flt.to);
  f->add_flag("--json", flt.json);
  add_jobs(f, flt.jobs);

  CongruenceOptions cong;
  auto* g = app.add_subcommand("congruence", "Run the harmonic-sum congruence suites");
  g->add_option("--from", cong.from);
  g->add_option("--to", cong.to);
  g->add_option("--max-N", cong.max_n)->check(CLI::Range(2, 64));
  g->add_option("--lehmer-max-N", cong.lehmer_max_n)->check(CLI::Range(2, 64));
  add_jobs(g, cong.jobs);

  OeisOptions oeis;
  auto* o = app.add_subcommand("oeis-check", "Compare a b-file with computed values");
  o->add_option("file", oeis.file, "b-file path")->required();
  o->add_option("--N", oeis.n)->required()->check(CLI::Range(2, 1 << 20));
  o->add_option("--r", oeis.r);
  o->add_option("--kind", oeis.kind);
  o->add_option("--engine", oeis.engine);
  add_jobs(o, oeis.jobs);

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Time engines against each other");
  b->add_option("--N", bench.n, "One or more N, comma separated");
  b->add_option("--m", bench.m);
  b->add_option("--modulus", bench.modulus);
  b->add_option("--engines", bench.engines);
  b->add_flag("--json", bench.json);

  ProbeOptions probe;
  auto* p = app.add_subcommand("skew-probe", "Compare readings of the even-N skew block formula");
  p->alias("eq17-probe");
  p->add_option("--N", probe.n)->check(CLI::Range(2, 64));
  p->add_option("--max-m", probe.max_m)->check(CLI::Range(0, 500));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out, err);
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (t->parsed()) return cmd_table(table, out, err);
    if (f->parsed()) return cmd_flt_scan(flt, out, err);
    if (g->parsed()) return cmd_congruence(cong, out, err);
    if (o->parsed()) return cmd_oeis_check(oeis, out, err);
    if (b->parsed()) return cmd_bench(bench, out, err);
    if (p->parsed()) return cmd_skew_probe(probe, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_usage;
}

}  // namespace lacunary::cli
