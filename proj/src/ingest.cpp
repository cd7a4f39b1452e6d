#include "csb/ingest.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace csb {

namespace {

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, delim)) {
    // Trim surrounding whitespace.
    const auto first = field.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      out.emplace_back();
    } else {
      const auto last = field.find_last_not_of(" \t\r");
      out.push_back(field.substr(first, last - first + 1));
    }
  }
  if (!line.empty() && line.back() == delim) out.emplace_back();
  return out;
}

double parse_number(const std::string& s, int lineno, const char* column) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("line " + std::to_string(lineno) +
                                ": cannot parse column " + column + ": '" + s + "'");
  }
  if (pos != s.size()) {
    throw std::invalid_argument("line " + std::to_string(lineno) +
                                ": trailing characters in column " + column + ": '" +
                                s + "'");
  }
  return v;
}

int parse_binary(const std::string& s, int lineno, const char* column) {
  const double v = parse_number(s, lineno, column);
  if (v == 0.0) return 0;
  if (v == 1.0) return 1;
  throw std::invalid_argument("line " + std::to_string(lineno) + ": column " +
                              column + " must be 0 or 1, got '" + s + "'");
}

}  // namespace

std::vector<InputRecord> read_records(std::istream& in, const IngestOptions& opts) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("input is empty (expected a header row)");
  }
  const auto header = split(line, opts.delimiter);
  int iy = -1, id = -1, it = -1, iw = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "y") iy = static_cast<int>(i);
    else if (header[i] == "d") id = static_cast<int>(i);
    else if (header[i] == "t") it = static_cast<int>(i);
    else if (header[i] == "w") iw = static_cast<int>(i);
  }
  if (iy < 0) throw std::invalid_argument("missing required column: y");
  if (id < 0) throw std::invalid_argument("missing required column: d");
  if (it < 0) throw std::invalid_argument("missing required column: t");

  std::vector<InputRecord> records;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split(line, opts.delimiter);
    const auto need = static_cast<std::size_t>(std::max({iy, id, it, iw}) + 1);
    if (fields.size() < need) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected at least " + std::to_string(need) +
                                  " fields, got " + std::to_string(fields.size()));
    }
    InputRecord r;
    r.y = parse_number(fields[static_cast<std::size_t>(iy)], lineno, "y");
    if (!std::isfinite(r.y)) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": outcome must be finite");
    }
    r.d = parse_binary(fields[static_cast<std::size_t>(id)], lineno, "d");
    r.t = parse_binary(fields[static_cast<std::size_t>(it)], lineno, "t");
    if (iw >= 0) {
      r.w = parse_number(fields[static_cast<std::size_t>(iw)], lineno, "w");
      if (!(r.w > 0.0) || !std::isfinite(r.w)) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": weight must be positive and finite");
      }
    }
    records.push_back(r);
  }
  return records;
}

std::vector<InputRecord> read_records_file(const std::string& path,
                                           const IngestOptions& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input: " + path);
  return read_records(in, opts);
}

IngestResult build_sample(const std::vector<InputRecord>& records,
                          const IngestOptions& opts) {
  std::array<std::array<std::vector<double>, 2>, 2> values;   // [d][t]
  std::array<std::array<std::vector<double>, 2>, 2> weights;  // [d][t]
  double w_treated = 0.0, w_total = 0.0;
  for (const auto& r : records) {
    values[r.d][r.t].push_back(r.y);
    weights[r.d][r.t].push_back(r.w);
    const bool counted = !opts.panel || r.t == 0;
    if (counted) {
      w_total += r.w;
      if (r.d == 1) w_treated += r.w;
    }
  }
  for (int d = 0; d < 2; ++d) {
    for (int t = 0; t < 2; ++t) {
      if (values[d][t].empty()) {
        throw std::invalid_argument("empty cell: d=" + std::to_string(d) +
                                    ", t=" + std::to_string(t));
      }
    }
  }
  const double p_hat = w_treated / w_total;
  IngestResult out{
      GroupedSample(StepCdf::from_samples(values[0][0], weights[0][0]),
                    StepCdf::from_samples(values[0][1], weights[0][1]),
                    StepCdf::from_samples(values[1][0], weights[1][0]),
                    StepCdf::from_samples(values[1][1], weights[1][1]), p_hat),
      {{{values[0][0].size(), values[0][1].size()},
        {values[1][0].size(), values[1][1].size()}}},
      p_hat};
  return out;
}

IngestResult ingest(const std::string& path, const IngestOptions& opts) {
  return build_sample(read_records_file(path, opts), opts);
}

}  // namespace csb
