#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "relmatch/types.hpp"

namespace relmatch::tools {

struct BenchConfig {
  std::vector<Relation> relations{Relation::kSubsequence, Relation::kSupersequence};
  std::vector<std::size_t> m_values{std::size_t{1} << 14};
  std::vector<std::size_t> w_lengths{std::size_t{1} << 20, std::size_t{1} << 21,
                                     std::size_t{1} << 22, std::size_t{1} << 23};
  std::vector<std::string> engines{"linear", "baseline"};
  // Baseline rows above this text length are skipped.
  std::size_t baseline_max_wlen = std::size_t{1} << 23;
  int reps = 5;
  std::uint64_t seed = 42;
  Symbol sigma = 16;
};

struct BenchRow {
  std::string engine;
  Relation relation;
  std::size_t m;       // transitions of the generated automaton
  std::size_t w_len;
  std::uint64_t ns;    // median wall time
  std::uint64_t work;  // engine counter: marks, deletions + registry visits, or transitions scanned
  bool answer;
};

struct BenchSlope {
  std::string engine;
  Relation relation;
  std::size_t m;
  double slope;  // log-log least squares of ns against w_len
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchSlope> slopes;
};

BenchReport bench_scaling(const BenchConfig& config, std::ostream* progress = nullptr);

/// engine,relation,m,w_len,ns,work rows then "# slope,<engine>,<relation>,<m>,<value>" lines.
void write_bench_csv(std::ostream& out, const BenchReport& report);

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace relmatch::tools
