#include "cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nsopt/optimizer.hpp"
#include "nsopt/rates.hpp"
#include "nsopt/report.hpp"
#include "nsopt/schur_weyl.hpp"
#include "nsopt/verify.hpp"

namespace nsopt {

namespace {

struct Options {
  int d = 0;
  int n = 0;
  int nmax = 0;
  int kmax = 0;
  std::string method = "auto";
  std::string format = "table";
  std::string check;
  std::string partition;
  std::uint64_t budget = 10'000'000;
  int jobs = 1;
};

OutputFormat format_of(const Options& o) {
  auto f = parse_format(o.format);
  if (!f)
    throw std::invalid_argument("--format '" + o.format + "': expected table, csv or json");
  return *f;
}

// Exact arithmetic on factorials of n is the practical limit, not 2^31.
void check_ranges(const Options& o) {
  if (o.d > 1024) throw std::invalid_argument("--d above the supported limit of 1024");
  if (o.n > 1'000'000) throw std::invalid_argument("--n above the supported limit of 1000000");
  if (o.nmax > 100'000) throw std::invalid_argument("--nmax above the supported limit of 100000");
  if (o.kmax > 100'000) throw std::invalid_argument("--kmax above the supported limit of 100000");
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("--partition: '" + item + "' is not a valid part");
    }
  }
  if (parts.empty()) throw std::invalid_argument("--partition: no components");
  return parts;
}

int do_decompose(const Options& o, std::ostream& out) {
  const auto fmt = format_of(o);
  if (count_partitions(o.n, o.d, o.budget) > o.budget)
    throw std::invalid_argument("decompose: partition count exceeds the budget of " +
                                std::to_string(o.budget) + " (raise --budget)");
  out << render_decomposition(decomposition(o.d, o.n), fmt);
  return 0;
}

int do_maximize(const Options& o, std::ostream& out, std::ostream& err) {
  const auto fmt = format_of(o);
  if (o.d < 2) throw std::invalid_argument("maximize: --d must be >= 2");
  if (o.n < 1) throw std::invalid_argument("maximize: --n must be >= 1");
  const BruteOptions opts{o.budget, o.jobs};
  Optimum opt;
  if (o.method == "auto") {
    opt = maximize_auto(o.d, o.n, opts, &err);
  } else if (o.method == "brute") {
    opt = maximize_brute(o.d, o.n, opts);
  } else if (o.method == "closed") {
    if (o.d == 2)
      opt = maximize_qubit_closed(o.n);
    else if (o.d == 3)
      opt = maximize_qutrit_closed(o.n);
    else
      throw std::invalid_argument("maximize: closed form available for --d 2 or --d 3 only");
  } else if (o.method == "local") {
    opt = maximize_local(o.d, o.n);
    if (o.d >= 4) err << "note: local search is heuristic for d >= 4\n";
  } else {
    throw std::invalid_argument("maximize: unknown --method '" + o.method +
                                "' (expected auto, brute, closed or local)");
  }
  out << render_optimum(opt, fmt);
  return 0;
}

int do_rate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto fmt = format_of(o);
  RateReport report;
  if (!o.partition.empty()) {
    auto parts = parse_parts(o.partition);
    const int d = o.d > 0 ? o.d : static_cast<int>(parts.size());
    Partition p(std::move(parts), d);
    report.d = d;
    report.n = p.n();
    report.f = multiplicity(p);
    report.partition = std::move(p);
  } else {
    if (o.d < 2 || o.n < 1)
      throw std::invalid_argument("rate: need --partition, or --d and --n to rate the optimum");
    const BruteOptions opts{o.budget, o.jobs};
    auto opt = maximize_auto(o.d, o.n, opts, &err);
    report.d = o.d;
    report.n = o.n;
    report.f = opt.max_multiplicity;
    report.partition = opt.argmax.front();
  }
  report.f_bits = bit_length(report.f);
  report.rate = code_rate(report.partition);
  out << render_rate(report, fmt);
  return 0;
}

int do_rate_series(const Options& o, std::ostream& out) {
  const auto fmt = format_of(o);
  out << render_rate_series(balanced_rate_series(o.d, o.kmax), fmt);
  return 0;
}

int do_qubit_table(const Options& o, std::ostream& out) {
  const auto fmt = format_of(o);
  out << render_qubit_table(qubit_table_rows(o.nmax), fmt);
  return 0;
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto fmt = format_of(o);
  VerifyParams params;
  params.d = o.d;
  params.nmax = o.nmax;
  params.kmax = o.kmax;
  params.budget = o.budget;
  params.jobs = o.jobs;
  const auto report = run_verification(o.check, params);
  out << render_verification(report, fmt);
  err << "elapsed: " << report.elapsed.count() << " ms\n";
  return report.pass ? 0 : 2;
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format: table, csv or json")
      ->default_val("table");
}

void add_budget_jobs(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget", o.budget, "Largest partition count brute force will enumerate")
      ->default_val(10'000'000);
  cmd->add_option("--jobs", o.jobs, "Worker threads (output is independent of the count)")
      ->default_val(1)
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact block decompositions of collective rotation channels and "
               "maximal noiseless-subsystem dimensions"};
  app.name("nsopt");
  app.require_subcommand(1);
  Options o;

  auto* decompose = app.add_subcommand(
      "decompose", "List every irreducible block (partition, f, g) for (d, n)");
  decompose->add_option("--d", o.d, "Qudit levels (>= 2)")->required();
  decompose->add_option("--n", o.n, "Number of qudits (>= 1)")->required();
  add_format(decompose, o);
  add_budget_jobs(decompose, o);

  auto* maximize = app.add_subcommand(
      "maximize", "Find all partitions maximizing the multiplicity f for (d, n)");
  maximize->add_option("--d", o.d, "Qudit levels (>= 2)")->required();
  maximize->add_option("--n", o.n, "Number of qudits (>= 1)")->required();
  maximize->add_option("--method", o.method, "auto, brute, closed or local")
      ->default_val("auto");
  add_format(maximize, o);
  add_budget_jobs(maximize, o);

  auto* rate = app.add_subcommand(
      "rate", "Error-correction rate log_d(f)/n of a partition or of the (d, n) optimum");
  rate->add_option("--d", o.d, "Qudit levels");
  rate->add_option("--n", o.n, "Number of qudits");
  rate->add_option("--partition", o.partition, "Explicit partition, e.g. 6,4");
  add_format(rate, o);
  add_budget_jobs(rate, o);

  auto* series = app.add_subcommand(
      "rate-series", "Rates of the balanced partitions (k,...,k) for k = 1..kmax");
  series->add_option("--d", o.d, "Qudit levels (>= 2)")->required();
  series->add_option("--kmax", o.kmax, "Largest k")->required()->check(CLI::PositiveNumber);
  add_format(series, o);

  auto* qtable = app.add_subcommand(
      "qubit-table", "d=2 optimum table: n, r*, f(n-r*,r*), floor(log2 f) for n = 3..nmax");
  qtable->add_option("--nmax", o.nmax, "Last row (>= 3)")->required();
  add_format(qtable, o);

  auto* verify = app.add_subcommand("verify", "Run a named invariant sweep (exit 2 on failure)");
  verify->add_option("--check", o.check, "Check name; see --help-checks")->required();
  verify->add_option("--nmax", o.nmax, "Override the check's n range");
  verify->add_option("--kmax", o.kmax, "Override the check's k range");
  verify->add_option("--d", o.d, "Restrict to one d where the check sweeps several");
  add_format(verify, o);
  add_budget_jobs(verify, o);

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  std::string prog = "nsopt";
  argv.push_back(prog.data());
  for (auto& a : storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run 'nsopt --help' for usage\n";
    return 1;
  }

  try {
    check_ranges(o);
    if (decompose->parsed()) return do_decompose(o, out);
    if (maximize->parsed()) return do_maximize(o, out, err);
    if (rate->parsed()) return do_rate(o, out, err);
    if (series->parsed()) return do_rate_series(o, out);
    if (qtable->parsed()) return do_qubit_table(o, out);
    if (verify->parsed()) return do_verify(o, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace nsopt
