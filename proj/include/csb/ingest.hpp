#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "csb/bounds.hpp"

namespace csb {

// One observation row: outcome, group indicator, period indicator, optional
// positive weight (default 1).
struct InputRecord {
  double y;
  int d;
  int t;
  double w = 1.0;
};

struct IngestOptions {
  char delimiter = ',';
  // Repeated cross-sections pool both periods when estimating the treated
  // share; balanced panels count each unit once, i.e. period-0 rows only.
  bool panel = false;
};

struct IngestResult {
  GroupedSample sample;
  // Counts by (d, t): n[d][t].
  std::array<std::array<std::size_t, 2>, 2> counts;
  double p_hat;
};

// Delimited text with a header row naming columns y, d, t and optionally w.
// Parse failures report the offending line number.
std::vector<InputRecord> read_records(std::istream& in, const IngestOptions& opts);
std::vector<InputRecord> read_records_file(const std::string& path,
                                           const IngestOptions& opts);

IngestResult build_sample(const std::vector<InputRecord>& records,
                          const IngestOptions& opts);

IngestResult ingest(const std::string& path, const IngestOptions& opts);

}  // namespace csb
