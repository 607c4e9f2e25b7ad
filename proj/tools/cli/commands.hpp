#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lacunary::cli {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

/// Bad flags or input files; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ComputeOptions {
  int n = 2;
  long long r = 0;
  std::string m = "0";
  std::string kind = "plain";
  std::string engine = "poly";
  std::string modulus;
  bool json = false;
  bool no_verify = false;
  unsigned jobs = 1;
};

struct VerifyOptions {
  int max_n = 8;
  std::uint64_t max_m = 60;
  unsigned jobs = 1;
  bool inject_fault = false;
};

struct TableOptions {
  int max_n = 10;
  std::string family = "both";
};

struct FltScanOptions {
  std::uint64_t from = 5;
  std::uint64_t to = 100;
  bool json = false;
  unsigned jobs = 1;
};

struct CongruenceOptions {
  std::uint64_t from = 5;
  std::uint64_t to = 500;
  int max_n = 10;
  int lehmer_max_n = 6;
  unsigned jobs = 1;
};

struct OeisOptions {
  std::string file;
  int n = 2;
  long long r = 0;
  std::string kind = "plain";
  std::string engine = "poly";
  unsigned jobs = 1;
};

struct BenchOptions {
  std::string n = "12";
  std::uint64_t m = 1000;
  std::string modulus;
  std::string engines = "direct,poly,circulant,recurrence";
  bool json = false;
};

struct ProbeOptions {
  int n = 4;
  std::uint64_t max_m = 12;
};

int cmd_compute(const ComputeOptions& o, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err);
int cmd_table(const TableOptions& o, std::ostream& out, std::ostream& err);
int cmd_flt_scan(const FltScanOptions& o, std::ostream& out, std::ostream& err);
int cmd_congruence(const CongruenceOptions& o, std::ostream& out, std::ostream& err);
int cmd_oeis_check(const OeisOptions& o, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err);
int cmd_skew_probe(const ProbeOptions& o, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs the subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lacunary::cli
