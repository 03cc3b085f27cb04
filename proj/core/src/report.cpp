#include "nsopt/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace nsopt {

using json = nlohmann::json;

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string format_significant(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

namespace {

std::string dump(const json& j) { return j.dump() + "\n"; }

// Left-aligned columns separated by two spaces; trailing spaces trimmed.
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

json partition_json(const Partition& p) { return json(p.parts()); }

}  // namespace

std::vector<QubitTableRow> qubit_table_rows(int n_max) {
  if (n_max < 3) throw std::invalid_argument("qubit_table_rows: n_max must be >= 3");
  std::vector<QubitTableRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max - 2));
  for (int n = 3; n <= n_max; ++n) {
    QubitTableRow row;
    row.n = n;
    row.r_star = qubit_r_star(n);
    row.f = binomial(n, row.r_star) - binomial(n, row.r_star - 1);
    row.log2_floor = bit_length(row.f) - 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_decomposition(const DecompositionTable& table, OutputFormat format) {
  const char* marker = table.consistent() ? "ok" : "MISMATCH";
  switch (format) {
    case OutputFormat::table: {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"partition", "f", "g"});
      for (const auto& b : table.blocks)
        rows.push_back({b.partition.str(), b.multiplicity.str(), b.dimension.str()});
      std::string out = "d=" + std::to_string(table.d) + " n=" + std::to_string(table.n) + "\n";
      out += aligned(rows);
      out += "total = " + table.total.str() + " = " + std::to_string(table.d) + "^" +
             std::to_string(table.n) + " [" + marker + "]\n";
      return out;
    }
    case OutputFormat::csv: {
      std::string out = "partition,f,g\n";
      for (const auto& b : table.blocks)
        out += b.partition.str(';') + "," + b.multiplicity.str() + "," + b.dimension.str() + "\n";
      out += "total," + table.total.str() + "," + table.expected.str() + "," + marker + "\n";
      return out;
    }
    case OutputFormat::json: {
      json blocks = json::array();
      for (const auto& b : table.blocks)
        blocks.push_back({{"partition", partition_json(b.partition)},
                          {"multiplicity", b.multiplicity.str()},
                          {"dimension", b.dimension.str()}});
      return dump({{"d", table.d},
                   {"n", table.n},
                   {"blocks", blocks},
                   {"total", table.total.str()},
                   {"expected", table.expected.str()},
                   {"consistent", table.consistent()}});
    }
  }
  return {};
}

std::string render_optimum(const Optimum& opt, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: {
      std::string out = "d=" + std::to_string(opt.d) + " n=" + std::to_string(opt.n) +
                        " method=" + std::string(method_name(opt.method)) +
                        " tie=" + (opt.tie ? "true" : "false") + "\n";
      out += "max multiplicity = " + opt.max_multiplicity.str() + "\n";
      out += "argmax:";
      for (const auto& p : opt.argmax) out += " " + p.str();
      out += "\n";
      return out;
    }
    case OutputFormat::csv: {
      std::string out = "d,n,max_multiplicity,argmax,tie,method\n";
      out += std::to_string(opt.d) + "," + std::to_string(opt.n) + "," +
             opt.max_multiplicity.str() + ",";
      for (std::size_t i = 0; i < opt.argmax.size(); ++i) {
        if (i) out += ' ';
        out += opt.argmax[i].str(';');
      }
      out += std::string(",") + (opt.tie ? "true" : "false") + "," +
             std::string(method_name(opt.method)) + "\n";
      return out;
    }
    case OutputFormat::json: {
      json argmax = json::array();
      for (const auto& p : opt.argmax) argmax.push_back(partition_json(p));
      return dump({{"d", opt.d},
                   {"n", opt.n},
                   {"max_multiplicity", opt.max_multiplicity.str()},
                   {"argmax", argmax},
                   {"tie", opt.tie},
                   {"method", std::string(method_name(opt.method))}});
    }
  }
  return {};
}

std::string render_rate(const RateReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: {
      std::string out = "d=" + std::to_string(report.d) + " n=" + std::to_string(report.n) + "\n";
      out += "partition: " + report.partition.str() + "\n";
      out += "f = " + report.f.str() + " (" + std::to_string(report.f_bits) + " bits)\n";
      out += "rate = " + format_significant(report.rate) + "\n";
      return out;
    }
    case OutputFormat::csv:
      return "d,n,partition,f,f_bits,rate\n" + std::to_string(report.d) + "," +
             std::to_string(report.n) + "," + report.partition.str(';') + "," + report.f.str() +
             "," + std::to_string(report.f_bits) + "," + format_significant(report.rate) + "\n";
    case OutputFormat::json:
      return dump({{"d", report.d},
                   {"n", report.n},
                   {"partition", partition_json(report.partition)},
                   {"f", report.f.str()},
                   {"f_bits", report.f_bits},
                   {"rate", report.rate}});
  }
  return {};
}

std::string render_rate_series(const RateSeries& series, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"k", "n", "rate", "f_bits"});
      for (const auto& e : series.entries)
        rows.push_back({std::to_string(e.k), std::to_string(e.n), format_significant(e.rate),
                        std::to_string(e.f_bits)});
      return "d=" + std::to_string(series.d) + "\n" + aligned(rows);
    }
    case OutputFormat::csv: {
      std::string out = "k,n,rate,f_bits\n";
      for (const auto& e : series.entries)
        out += std::to_string(e.k) + "," + std::to_string(e.n) + "," +
               format_significant(e.rate) + "," + std::to_string(e.f_bits) + "\n";
      return out;
    }
    case OutputFormat::json: {
      json entries = json::array();
      for (const auto& e : series.entries)
        entries.push_back({{"k", e.k}, {"n", e.n}, {"rate", e.rate}, {"f_bits", e.f_bits}});
      return dump({{"d", series.d}, {"entries", entries}});
    }
  }
  return {};
}

std::string render_qubit_table(const std::vector<QubitTableRow>& rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: {
      std::vector<std::vector<std::string>> text;
      text.push_back({"n", "r*", "f", "floor_log2"});
      for (const auto& r : rows)
        text.push_back({std::to_string(r.n), std::to_string(r.r_star), r.f.str(),
                        std::to_string(r.log2_floor)});
      return aligned(text);
    }
    case OutputFormat::csv: {
      std::string out = "n,r_star,f,log2_floor\n";
      for (const auto& r : rows)
        out += std::to_string(r.n) + "," + std::to_string(r.r_star) + "," + r.f.str() + "," +
               std::to_string(r.log2_floor) + "\n";
      return out;
    }
    case OutputFormat::json: {
      json out = json::array();
      for (const auto& r : rows)
        out.push_back({{"n", r.n},
                       {"r_star", r.r_star},
                       {"f", r.f.str()},
                       {"log2_floor", r.log2_floor}});
      return dump({{"rows", out}});
    }
  }
  return {};
}

std::string render_verification(const VerificationReport& report, OutputFormat format) {
  const char* status = report.pass ? "pass" : "fail";
  switch (format) {
    case OutputFormat::table: {
      std::string out = "check: " + report.check + "\n";
      out += "range: " + report.range + "\n";
      out += std::string("status: ") + status + "\n";
      if (!report.counterexamples.empty()) {
        out += "counterexamples:\n";
        for (const auto& c : report.counterexamples)
          out += "  input=" + c.input + " expected=" + c.expected + " actual=" + c.actual + "\n";
        if (report.dropped > 0)
          out += "  (" + std::to_string(report.dropped) + " more not shown)\n";
      }
      return out;
    }
    case OutputFormat::csv: {
      std::string out = "check,range,status\n";
      out += report.check + "," + report.range + "," + status + "\n";
      for (const auto& c : report.counterexamples)
        out += "counterexample," + c.input + "," + c.expected + "," + c.actual + "\n";
      return out;
    }
    case OutputFormat::json: {
      json counterexamples = json::array();
      for (const auto& c : report.counterexamples)
        counterexamples.push_back(
            {{"input", c.input}, {"expected", c.expected}, {"actual", c.actual}});
      return dump({{"check", report.check},
                   {"range", report.range},
                   {"status", std::string(status)},
                   {"counterexamples", counterexamples},
                   {"dropped", report.dropped}});
    }
  }
  return {};
}

}  // namespace nsopt
