#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <tuple>

#include "relmatch/closure.hpp"
#include "relmatch/simulation.hpp"
#include "relmatch/subsequence.hpp"
#include "relmatch/supersequence.hpp"
#include "relmatch/workload.hpp"

namespace relmatch::tools {

namespace {

using Clock = std::chrono::steady_clock;

struct Measurement {
  std::uint64_t ns;
  std::uint64_t work;
  bool answer;
};

template <class Run>
Measurement median_of(int reps, Run run) {
  std::vector<std::uint64_t> times;
  Measurement last{};
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    last = run();
    const auto t1 = Clock::now();
    times.push_back(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
  }
  std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
  last.ns = times[times.size() / 2];
  return last;
}

}  // namespace

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope needs two points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

BenchReport bench_scaling(const BenchConfig& config, std::ostream* progress) {
  if (config.reps < 1) throw std::invalid_argument("reps must be positive");
  BenchReport report;
  const std::size_t longest = config.w_lengths.empty()
                                  ? 0
                                  : *std::max_element(config.w_lengths.begin(), config.w_lengths.end());
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  const Word text = random_word(longest, 1, config.sigma - 1, rng);

  for (std::size_t m : config.m_values) {
    const Nfa a = bench_automaton(m, config.sigma, config.seed);
    for (Relation rel : config.relations) {
      if (rel != Relation::kSubsequence && rel != Relation::kSupersequence) {
        throw std::invalid_argument("bench supports subsequence and supersequence");
      }
      for (const std::string& engine : config.engines) {
        if (engine != "linear" && engine != "baseline") {
          throw std::invalid_argument("unknown engine '" + engine + "'");
        }
        const bool linear = engine == "linear";
        const Nfa closure = linear ? a
                            : rel == Relation::kSubsequence ? upward_automaton(a)
                                                            : downward_automaton(a);
        const TransitionIndex index(closure);
        SubsequenceMatcher sub(index);
        SupersequenceMatcher super(a);
        for (std::size_t len : config.w_lengths) {
          if (!linear && len > config.baseline_max_wlen) continue;
          const WordView w = WordView(text).first(len);
          Measurement result;
          if (linear && rel == Relation::kSubsequence) {
            result = median_of(config.reps, [&] {
              SubsequenceStats stats;
              const bool ok = sub.match(w, &stats);
              return Measurement{0, stats.marks, ok};
            });
          } else if (linear) {
            result = median_of(config.reps, [&] {
              SupersequenceStats stats;
              const bool ok = super.match(w, &stats);
              return Measurement{0, stats.deletions + stats.registry_cost, ok};
            });
          } else {
            result = median_of(config.reps, [&] {
              StateSetSimulator sim(index);
              sim.start();
              for (Symbol c : w) sim.step(c);
              return Measurement{0, sim.work(), sim.accepting()};
            });
          }
          report.rows.push_back({engine, rel, a.size(), len, result.ns, result.work, result.answer});
          if (progress != nullptr) {
            *progress << "# " << engine << ' ' << to_string(rel) << " m=" << a.size() << " w=" << len
                      << " ns=" << result.ns << '\n';
          }
        }
      }
    }
  }

  std::map<std::tuple<std::string, Relation, std::size_t>, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (const BenchRow& row : report.rows) {
    auto& [xs, ys] = groups[{row.engine, row.relation, row.m}];
    xs.push_back(static_cast<double>(row.w_len));
    ys.push_back(static_cast<double>(std::max<std::uint64_t>(row.ns, 1)));
  }
  for (const auto& [key, points] : groups) {
    if (points.first.size() < 2) continue;
    report.slopes.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                             loglog_slope(points.first, points.second)});
  }
  return report;
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
  out << "engine,relation,m,w_len,ns,work\n";
  for (const BenchRow& row : report.rows) {
    out << row.engine << ',' << to_string(row.relation) << ',' << row.m << ',' << row.w_len << ','
        << row.ns << ',' << row.work << '\n';
  }
  for (const BenchSlope& s : report.slopes) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", s.slope);
    out << "# slope," << s.engine << ',' << to_string(s.relation) << ',' << s.m << ',' << buf << '\n';
  }
}

}  // namespace relmatch::tools
