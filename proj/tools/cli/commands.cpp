#include "commands.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lacunary/bfile.hpp"
#include "lacunary/congruences.hpp"
#include "lacunary/engines.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/evaluate.hpp"
#include "lacunary/parallel.hpp"
#include "lacunary/recurrence.hpp"
#include "output.hpp"

namespace lacunary::cli {

namespace {

constexpr std::uint64_t verify_on_print_limit = 200;
constexpr std::uint64_t large_exponent_warning = 1000000;

// Errors raised while reading flags are usage errors, not math failures.
template <class F>
auto from_flags(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

template <class F>
auto timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  auto result = f();
  const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
  return std::pair{std::move(result), static_cast<std::int64_t>(us.count())};
}

std::string label(const SumParams& p) {
  std::ostringstream os;
  os << (p.kind() == Kind::plain ? "T(" : "T*(") << p.n() << ',' << p.r() << ',' << p.m() << ')';
  return os.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::uint64_t> scan_primes(std::uint64_t from, std::uint64_t to) {
  if (to > PrimeContext::max_prime) throw UsageError("--to must not exceed " + std::to_string(PrimeContext::max_prime));
  if (to < 3 || to < from) return {};
  return primes_between(std::max<std::uint64_t>(from, 3), to);
}

}  // namespace

int cmd_compute(const ComputeOptions& o, std::ostream& out, std::ostream& err) {
  const Kind kind = from_flags([&] { return parse_kind(o.kind); });
  const EngineId engine = from_flags([&] { return EngineId::parse(o.engine); });
  const std::optional<std::uint64_t> modulus =
      o.modulus.empty() ? std::nullopt : std::optional(from_flags([&] { return parse_modulus(o.modulus); }));
  const auto ms = from_flags([&] { return parse_index_list(o.m); });
  std::vector<SumParams> batch;
  from_flags([&] {
    for (auto m : ms) batch.emplace_back(o.n, o.r, m, kind);
    return 0;
  });

  if (!modulus && engine.exact() && *std::max_element(ms.begin(), ms.end()) > large_exponent_warning)
    err << "warning: exact values for m > 10^6 are very large; consider --modulus\n";

  struct Item {
    OutputRecord record;
    std::optional<std::string> expected;
  };
  const auto items = parallel_map(batch.size(), o.jobs, [&](std::size_t i) {
    auto [e, us] = timed([&] { return evaluate(batch[i], engine, modulus); });
    Item item{OutputRecord::from(e, us), std::nullopt};
    if (!o.no_verify && batch[i].m() <= verify_on_print_limit) {
      BigInt ref = direct_value(batch[i]).value;
      if (modulus) ref = floor_mod(ref, BigInt(*modulus));
      if (ref != e.value) item.expected = to_string(ref);
    }
    return item;
  });

  int status = exit_ok;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& [rec, expected] = items[i];
    if (o.json)
      out << nlohmann::json(rec).dump() << '\n';
    else
      out << format_human(rec) << '\n';
    if (expected) {
      err << "verification failed: " << label(batch[i]) << " from " << rec.engine << " is " << rec.value
          << ", direct summation gives " << *expected << '\n';
      status = exit_failure;
    }
  }
  return status;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream&) {
  struct Job {
    int n;
    Kind kind;
  };
  std::vector<Job> jobs;
  for (int n = 2; n <= o.max_n; ++n)
    for (Kind kind : {Kind::plain, Kind::alternating}) jobs.push_back({n, kind});

  struct Tally {
    std::size_t checks = 0;
    std::size_t skipped = 0;
    std::vector<std::string> failures;
  };
  const auto tallies = parallel_map(jobs.size(), o.jobs, [&](std::size_t idx) {
    const auto [n, kind] = jobs[idx];
    const bool alt = kind == Kind::alternating;
    Tally t;
    for (std::uint64_t m = 0; m <= o.max_m; ++m) {
      const auto circulant = circulant_engine({n, alt}, m);
      for (int r = 0; r < n; ++r) {
        const SumParams p(n, r, m, kind);
        const BigInt ref = direct_value(p).value;
        auto check = [&](const std::string& engine, const BigInt& got) {
          ++t.checks;
          if (got != ref)
            t.failures.push_back(label(p) + " " + engine + " gives " + to_string(got) + ", direct gives " +
                                 to_string(ref));
        };
        BigInt poly = poly_engine(p).value;
        if (o.inject_fault && r == 0 && m == o.max_m) poly += 1;
        check("poly", poly);
        check("circulant", circulant[r]);
        check("recurrence", recur_eval(recurrence_for(p), m));
        if (r == 0) {
          for (int d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            try {
              check("split:" + std::to_string(d), split_engine(n, d, m, kind).value.value);
            } catch (const NumericConfidenceError&) {
              ++t.skipped;
            }
          }
        }
        if (!alt && m >= 1 && m <= 50) check("cosine", ramus_cosine(p).value.value);
        if (alt) check("2T(2N,r,m)-T(N,r,m)", star_from_plain(n, r, m).value);
        if (!alt && r == 0 && n % 2 == 0) check("half-modulus form", plain_from_halves(n, m).value);
      }
    }
    return t;
  });

  Tally total;
  for (const auto& t : tallies) {
    total.checks += t.checks;
    total.skipped += t.skipped;
    total.failures.insert(total.failures.end(), t.failures.begin(), t.failures.end());
  }
  out << "verify N=2.." << o.max_n << " m=0.." << o.max_m << ": " << total.checks << " comparisons, "
      << total.failures.size() << " mismatches";
  if (total.skipped) out << ", " << total.skipped << " split evaluations beyond float precision skipped";
  out << '\n';
  if (total.failures.empty()) {
    out << "all N, r, m, kind and engine combinations agree\n";
    return exit_ok;
  }
  for (const auto& f : total.failures) out << "MISMATCH " << f << '\n';
  return exit_failure;
}

int cmd_table(const TableOptions& o, std::ostream& out, std::ostream&) {
  std::vector<Family> families;
  if (o.family != "star") families.push_back(Family::plain);
  if (o.family != "plain") families.push_back(Family::star);
  for (Family family : families) {
    out << (family == Family::plain ? "(x-1)^N - 1, sums T(N,0,m)" : "(x-1)^N + 1, sums T*(N,0,m)") << '\n';
    for (int n = 2; n <= o.max_n; ++n) {
      out << "N=" << std::left << std::setw(3) << n << std::right;
      for (const auto& c : recurrence_coeffs(n, family).coeffs) out << ' ' << std::setw(5) << c;
      out << '\n';
    }
  }
  return exit_ok;
}

int cmd_flt_scan(const FltScanOptions& o, std::ostream& out, std::ostream&) {
  const auto primes = scan_primes(o.from, o.to);
  const auto reports =
      parallel_map(primes.size(), o.jobs, [&](std::size_t i) { return flt_criterion_scan(PrimeContext(primes[i])); });

  std::vector<std::string> met;
  std::vector<std::string> hit_lines;
  for (const auto& rep : reports) {
    if (o.json) {
      nlohmann::json j;
      j["p"] = rep.p;
      j["residues"] = nlohmann::json::object();
      for (const auto& e : rep.entries) j["residues"][std::to_string(e.n)] = e.t_mod_p2.value();
      j["hits"] = rep.hits;
      j["skipped"] = rep.skipped;
      j["obstruction"] = rep.flt_first_case_obstruction_met;
      out << j.dump() << '\n';
    } else {
      out << "p=" << rep.p << " T(N,0,p) mod p^2:";
      for (const auto& e : rep.entries) out << ' ' << e.n << ':' << e.t_mod_p2.value();
      out << " | hits:";
      if (rep.hits.empty()) out << " none";
      for (int n : rep.hits) out << ' ' << n;
      if (!rep.skipped.empty()) out << " | skipped N>=" << rep.skipped.front();
      out << " | obstruction " << (rep.flt_first_case_obstruction_met ? "MET" : "not met") << '\n';
    }
    if (rep.flt_first_case_obstruction_met) met.push_back(std::to_string(rep.p));
    if (!rep.hits.empty()) {
      std::string line = "p=" + std::to_string(rep.p) + " N=";
      for (std::size_t k = 0; k < rep.hits.size(); ++k) line += (k ? "," : "") + std::to_string(rep.hits[k]);
      hit_lines.push_back(line);
    }
  }
  if (!o.json && !reports.empty()) {
    out << "scanned " << reports.size() << " primes; full obstruction met by: ";
    if (met.empty()) out << "none";
    for (const auto& p : met) out << p << ' ';
    out << '\n';
    for (const auto& h : hit_lines) out << "T(N,0,p) = 1 mod p^2 at " << h << '\n';
  }
  return exit_ok;
}

int cmd_congruence(const CongruenceOptions& o, std::ostream& out, std::ostream&) {
  const auto primes = scan_primes(o.from, o.to);
  constexpr int suites = 4;
  static constexpr const char* names[suites] = {"sun-plain", "sun-star", "supplement", "lehmer"};

  struct Counts {
    std::array<std::array<std::size_t, 3>, suites> outcomes{};
    std::vector<std::string> failures;
  };
  const auto counts = parallel_map(primes.size(), o.jobs, [&](std::size_t i) {
    const PrimeContext ctx(primes[i]);
    Counts c;
    auto record = [&](int suite, CheckOutcome outcome, int n, int j = 0) {
      ++c.outcomes[suite][static_cast<int>(outcome)];
      if (outcome == CheckOutcome::fails)
        c.failures.push_back(std::string(names[suite]) + " p=" + std::to_string(ctx.p()) + " N=" + std::to_string(n) +
                             (j ? " j=" + std::to_string(j) : ""));
    };
    for (int n = 2; n <= o.max_n; ++n) {
      record(0, sun_plain_check(ctx, n), n);
      record(1, sun_star_check(ctx, n), n);
      record(2, supplement_check(ctx, n), n);
    }
    for (int n = 2; n <= o.lehmer_max_n; ++n)
      for (int j = 1; j < n; ++j) {
        const std::uint64_t k = static_cast<std::uint64_t>(j) * ctx.p() / n;
        record(3, k >= 1 ? (lehmer_check(ctx, n, j) ? CheckOutcome::holds : CheckOutcome::fails)
                         : CheckOutcome::not_applicable,
               n, j);
      }
    return c;
  });

  Counts total;
  for (const auto& c : counts) {
    for (int s = 0; s < suites; ++s)
      for (int k = 0; k < 3; ++k) total.outcomes[s][k] += c.outcomes[s][k];
    total.failures.insert(total.failures.end(), c.failures.begin(), c.failures.end());
  }
  out << primes.size() << " primes in [" << o.from << ", " << o.to << "], N <= " << o.max_n << " (Lehmer N <= "
      << o.lehmer_max_n << ")\n";
  for (int s = 0; s < suites; ++s)
    out << std::left << std::setw(11) << names[s] << std::right << " holds " << std::setw(6) << total.outcomes[s][0]
        << "  fails " << std::setw(3) << total.outcomes[s][1] << "  n/a " << std::setw(4) << total.outcomes[s][2]
        << '\n';
  for (const auto& f : total.failures) out << "FAILED " << f << '\n';
  return total.failures.empty() ? exit_ok : exit_failure;
}

int cmd_oeis_check(const OeisOptions& o, std::ostream& out, std::ostream&) {
  const Kind kind = from_flags([&] { return parse_kind(o.kind); });
  const EngineId engine = from_flags([&] { return EngineId::parse(o.engine); });
  const BFile bfile = read_bfile(o.file);
  if (bfile.offset() < 0) throw UsageError("b-file indices must be non-negative");
  const SumParams shape = from_flags([&] { return SumParams(o.n, o.r, 0, kind); });

  const auto computed = parallel_map(bfile.terms.size(), o.jobs, [&](std::size_t i) {
    const auto m = static_cast<std::uint64_t>(bfile.terms[i].first);
    return evaluate(SumParams(shape.n(), shape.r(), m, kind), engine).value;
  });
  const SumParams first(shape.n(), shape.r(), static_cast<std::uint64_t>(bfile.offset()), kind);
  for (std::size_t i = 0; i < computed.size(); ++i) {
    const auto& [index, value] = bfile.terms[i];
    if (computed[i] != value) {
      out << bfile.id << ": mismatch at m=" << index << ": file has " << value << ", " << engine.str() << " gives "
          << computed[i] << '\n';
      return exit_failure;
    }
  }
  out << bfile.id << ": " << computed.size() << " terms match " << label(first) << " onward (m=" << bfile.offset()
      << ".." << bfile.terms.back().first << ")\n";
  return exit_ok;
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  const auto ns = from_flags([&] { return parse_index_list(o.n); });
  const std::optional<std::uint64_t> modulus =
      o.modulus.empty() ? std::nullopt : std::optional(from_flags([&] { return parse_modulus(o.modulus); }));
  std::vector<EngineId> engines;
  for (const auto& name : split_list(o.engines)) engines.push_back(from_flags([&] { return EngineId::parse(name); }));
  if (engines.empty()) throw UsageError("no engines given");

  int status = exit_ok;
  if (!o.json)
    out << std::left << std::setw(5) << "N" << std::setw(14) << "engine" << std::right << std::setw(12) << "micros"
        << "  value\n";
  for (auto n64 : ns) {
    const SumParams params = from_flags([&] { return SumParams(static_cast<long long>(n64), 0, o.m); });
    std::optional<BigInt> reference;
    for (const auto& engine : engines) {
      try {
        auto [e, us] = timed([&] { return evaluate(params, engine, modulus); });
        const OutputRecord rec = OutputRecord::from(e, us);
        if (o.json)
          out << nlohmann::json(rec).dump() << '\n';
        else
          out << std::left << std::setw(5) << rec.n << std::setw(14) << rec.engine << std::right << std::setw(12)
              << rec.micros << "  " << rec.value << '\n';
        if (!reference) {
          reference = e.value;
        } else if (*reference != e.value) {
          err << "engines disagree for " << label(params) << ": " << engine.str() << " gives " << e.value << '\n';
          status = exit_failure;
        }
      } catch (const Error& e) {
        err << "error: " << engine.str() << " on " << label(params) << ": " << e.what() << '\n';
        status = exit_failure;
      }
    }
  }
  return status;
}

int cmd_skew_probe(const ProbeOptions& o, std::ostream& out, std::ostream&) {
  const SkewProbe probe = probe_skew_readings(o.n, o.max_m);
  out << "T*(" << o.n << ",0,m) against ((a+bi)^k + (a-bi)^k)/2 at entry (0,0)\n";
  for (std::size_t i = 0; i < probe.readings.size(); ++i) out << "  [" << i << "] " << probe.readings[i].label << '\n';
  out << std::setw(4) << "m" << std::setw(16) << "T*";
  for (std::size_t i = 0; i < probe.readings.size(); ++i) out << std::setw(16) << ("[" + std::to_string(i) + "]");
  out << '\n';
  for (const auto& row : probe.rows) {
    out << std::setw(4) << row.m << std::setw(16) << row.expected;
    for (const auto& c : row.candidates) out << std::setw(16) << (c ? to_string(*c) : std::string("n/a"));
    out << '\n';
  }
  for (std::size_t i = 0; i < probe.readings.size(); ++i)
    out << "[" << i << "] " << (probe.reading_matches(i) ? "matches" : "does not match") << '\n';
  return exit_ok;
}

}  // namespace lacunary::cli
