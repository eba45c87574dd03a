#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ldpbandit/harness.hpp"

namespace ldpb {

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_csv(const AggregateResult& result, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& s : result.series) {
    const auto label = s.agent.label();
    const auto eps = s.agent.eps_label();
    for (std::size_t j = 0; j < result.steps.size(); ++j) {
      out << label << ',' << eps << ',' << result.steps[j] << ','
          << format_number(s.mean[j]) << ',' << format_number(s.std_error[j])
          << ',' << result.trials << '\n';
    }
  }
}

void write_csv(const AggregateResult& result,
               const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_csv(result, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

namespace {

template <class T>
T parse_field(const std::string& s, std::size_t line) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::runtime_error("csv line " + std::to_string(line) +
                             ": bad field '" + s + "'");
  return v;
}

}  // namespace

std::vector<CsvRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::runtime_error("csv: missing or unexpected header");
  std::vector<CsvRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 6)
      throw std::runtime_error("csv line " + std::to_string(lineno) +
                               ": expected 6 fields");
    CsvRow r;
    r.agent = f[0];
    r.epsilon = f[1];
    r.step = parse_field<std::uint64_t>(f[2], lineno);
    r.mean_regret = parse_field<double>(f[3], lineno);
    r.stderr_regret = parse_field<double>(f[4], lineno);
    r.trials = parse_field<std::uint32_t>(f[5], lineno);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace ldpb
