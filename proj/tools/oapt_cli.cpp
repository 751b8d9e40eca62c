#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "oapt/oapt.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct NRange {
  int lo = 4;
  int hi = 10;
};

// "7" or "4..10".
bool parse_n(const std::string& s, NRange& out) {
  try {
    const auto dots = s.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      out.lo = out.hi = std::stoi(s, &used);
      return used == s.size();
    }
    const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    out.lo = std::stoi(a, &used);
    if (used != a.size()) return false;
    out.hi = std::stoi(b, &used);
    return used == b.size() && out.lo <= out.hi;
  } catch (const std::exception&) {
    return false;
  }
}

// Owns a string returned by the library.
struct LibString {
  char* p = nullptr;
  ~LibString() { oapt_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Failure {
  oapt_status status;
  std::string message;
};

void check(oapt_status s) {
  if (s != OAPT_OK) throw Failure{s, oapt_last_error()};
}

int report_failure(const Failure& f) {
  std::cerr << "error: " << f.message << "\n";
  return kExitUsage;
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout.flush());
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{OAPT_INVALID_ARGUMENT, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using ConfigPtr = std::unique_ptr<oapt_config, decltype(&oapt_config_free)>;
using ReportPtr = std::unique_ptr<oapt_report, decltype(&oapt_report_free)>;
using ScaffoldPtr = std::unique_ptr<oapt_scaffold, decltype(&oapt_scaffold_free)>;

struct VerifyOptions {
  std::string n = "4..10";
  std::vector<int> ks;
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  std::string scaffold;
  bool no_timing = false;
  unsigned threads = 0;
};

int finish_report(const oapt_report* report, const VerifyOptions& o) {
  LibString text;
  check(oapt_report_render(report, o.format == "csv" ? OAPT_FORMAT_CSV : OAPT_FORMAT_JSON,
                           o.no_timing ? 0 : 1, &text.p));
  if (!write_output(o.out, text.str())) {
    std::cerr << "error: cannot write " << o.out << "\n";
    return kExitUsage;
  }
  std::size_t passed = 0, failed = 0, skipped = 0;
  check(oapt_report_counts(report, &passed, &failed, &skipped));
  std::cerr << "PASS " << passed << "  FAIL " << failed << "  SKIPPED " << skipped << "\n";
  return failed == 0 ? kExitPass : kExitFail;
}

int cmd_verify(const VerifyOptions& o) {
  std::cerr << oapt_scope_banner() << "\n";
  if (!o.scaffold.empty()) {
    oapt_scaffold* raw = nullptr;
    check(oapt_scaffold_parse(read_file(o.scaffold).c_str(), &raw));
    ScaffoldPtr s(raw, oapt_scaffold_free);
    oapt_report* rep = nullptr;
    check(oapt_scaffold_verify(s.get(), &rep));
    ReportPtr report(rep, oapt_report_free);
    return finish_report(report.get(), o);
  }
  NRange range;
  if (!parse_n(o.n, range)) throw Failure{OAPT_INVALID_ARGUMENT, "bad --n '" + o.n + "' (use 7 or 4..10)"};
  oapt_config* raw = nullptr;
  check(oapt_config_new(&raw));
  ConfigPtr config(raw, oapt_config_free);
  check(oapt_config_set_n_range(config.get(), range.lo, range.hi));
  for (int k : o.ks) check(oapt_config_add_k(config.get(), k));
  for (const auto& s : o.suites) check(oapt_config_add_suite(config.get(), s.c_str()));
  check(oapt_config_set_seed(config.get(), o.seed));
  check(oapt_config_set_threads(config.get(), o.threads));
  LibString echo;
  check(oapt_config_echo(config.get(), &echo.p));
  std::cerr << "config: " << echo.str() << "\n";
  oapt_report* rep = nullptr;
  check(oapt_verify(config.get(), &rep));
  ReportPtr report(rep, oapt_report_free);
  return finish_report(report.get(), o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for orthogonal apartments in Hilbert Grassmannians"};
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run verification suites over an (n, k) range");
  verify->add_option("--n", vo.n, "n or a..b range")->capture_default_str();
  verify->add_option("--k", vo.ks, "Restrict to these k (repeatable); default every valid k");
  verify->add_option("--suite", vo.suites, std::string("Suite (repeatable): ") + oapt_suite_names());
  verify->add_option("--seed", vo.seed, "RNG seed")->capture_default_str();
  verify->add_option("--format", vo.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  verify->add_option("--out", vo.out, "Output path (default stdout)");
  verify->add_option("--scaffold", vo.scaffold, "Check a scaffold JSON file instead of running suites");
  verify->add_flag("--no-timing", vo.no_timing, "Omit the millis field");
  verify->add_option("--threads", vo.threads, "Worker threads (0 = hardware)");

  std::string scan_n = "4..12", scan_out;
  std::vector<int> scan_ks;
  auto* scan = app.add_subcommand("scan", "CSV table of case tags, c-values and collisions");
  scan->add_option("--n", scan_n, "n or a..b range")->capture_default_str();
  scan->add_option("--k", scan_ks, "Restrict to these k (repeatable)");
  scan->add_option("--out", scan_out, "Output path (default stdout)");

  auto* witness = app.add_subcommand("witness", "Print exact witness constructions with self-checks");
  witness->require_subcommand(1);
  int wn = 0, wk = 0, wi = 1, wj = 2, wcount = 3;
  auto* inexact = witness->add_subcommand("inexact", "Base with b_i, b_j mixed");
  inexact->add_option("--n", wn, "Ambient dimension")->required();
  inexact->add_option("--k", wk, "Level")->required();
  inexact->add_option("--i", wi, "First index (1-based)")->capture_default_str();
  inexact->add_option("--j", wj, "Second index (1-based)")->capture_default_str();
  auto* triple = witness->add_subcommand("compatible-triple", "Mutually compatible witnesses for an adjacent pair");
  triple->add_option("--n", wn, "Ambient dimension")->required();
  triple->add_option("--k", wk, "Level")->required();
  triple->add_option("--count", wcount, "Number of witnesses")->capture_default_str();

  int sn = 0, sk = 0;
  std::string skind = "identity", sout;
  auto* scaffold = app.add_subcommand("scaffold", "Emit a sample scaffold file");
  scaffold->add_option("--n", sn, "Ambient dimension")->required();
  scaffold->add_option("--k", sk, "Level")->required();
  scaffold->add_option("--kind", skind, "identity | single-swap | single-perp | base-mixing")
      ->capture_default_str();
  scaffold->add_option("--out", sout, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(vo);

    if (*scan) {
      NRange range;
      if (!parse_n(scan_n, range)) throw Failure{OAPT_INVALID_ARGUMENT, "bad --n '" + scan_n + "'"};
      LibString csv;
      check(oapt_scan_csv(range.lo, range.hi, scan_ks.data(), scan_ks.size(), &csv.p));
      return write_output(scan_out, csv.str()) ? kExitPass : kExitUsage;
    }

    if (*witness) {
      LibString text;
      int ok = 0;
      if (*inexact)
        check(oapt_witness_inexact(wn, wk, wi, wj, &text.p, &ok));
      else
        check(oapt_witness_compatible_triple(wn, wk, wcount, &text.p, &ok));
      std::cout << text.str();
      return ok ? kExitPass : kExitFail;
    }

    if (*scaffold) {
      oapt_scaffold* raw = nullptr;
      check(oapt_scaffold_example(sn, sk, skind.c_str(), &raw));
      ScaffoldPtr s(raw, oapt_scaffold_free);
      LibString json;
      check(oapt_scaffold_to_json(s.get(), &json.p));
      return write_output(sout, json.str() + "\n") ? kExitPass : kExitUsage;
    }
  } catch (const Failure& f) {
    return report_failure(f);
  }
  return kExitUsage;
}
