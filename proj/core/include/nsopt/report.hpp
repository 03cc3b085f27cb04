#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsopt/optimizer.hpp"
#include "nsopt/rates.hpp"
#include "nsopt/schur_weyl.hpp"
#include "nsopt/verify.hpp"

namespace nsopt {

/// Output formats shared by every renderer. CSV uses no quoting: every
/// field is an integer, a decimal, or a parenthesized tuple with semicolon
/// separators, e.g. (21;16;12). JSON keys are emitted sorted and big
/// integers as decimal strings, so emitted text re-parses and re-emits
/// byte-identically.
enum class OutputFormat { table, csv, json };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Deterministic %.*g formatting (C locale), default 12 significant digits.
std::string format_significant(double v, int digits = 12);

struct QubitTableRow {
  int n = 0;
  int r_star = 0;
  BigInt f;
  int log2_floor = 0;  // exact, from the bit length
};

/// Rows n = 3..n_max of the d=2 optimum table. Requires n_max >= 3.
std::vector<QubitTableRow> qubit_table_rows(int n_max);

struct RateReport {
  int d = 0;
  int n = 0;
  Partition partition{{0}, 1};
  BigInt f;
  int f_bits = 0;
  double rate = 0;
};

std::string render_decomposition(const DecompositionTable& table, OutputFormat format);
std::string render_optimum(const Optimum& opt, OutputFormat format);
std::string render_rate(const RateReport& report, OutputFormat format);
std::string render_rate_series(const RateSeries& series, OutputFormat format);
std::string render_qubit_table(const std::vector<QubitTableRow>& rows, OutputFormat format);
std::string render_verification(const VerificationReport& report, OutputFormat format);

}  // namespace nsopt
