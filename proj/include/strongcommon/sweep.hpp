#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "strongcommon/certify.hpp"
#include "strongcommon/document.hpp"

namespace strongcommon {

// Runs fn(0..count-1) on up to `jobs` threads and returns the results in
// index order. fn must not throw; callers record failures in the result.
template <class Fn>
auto parallel_map(std::size_t count, int jobs, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
  std::vector<decltype(fn(std::size_t{}))> results(count);
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) results[i] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

struct ScanOptions {
  CertifyOptions certify;
  int max_vertices = kDefaultVertexCap;
  int jobs = 1;
};

struct ScanRow {
  std::string canonical;
  int n = 0;
  int m = 0;
  std::optional<int> girth;
  std::optional<Rational> c3;  // p^3 coefficient of Delta_H
  bool applicable = false;
  std::optional<Rational> witness_p;
  std::optional<Rational> witness_value;
  std::optional<bool> lemmas_pass;
  std::string error;  // non-empty when the line could not be processed
};

// Column names in output order.
const std::vector<std::string>& scan_columns();

ScanRow scan_graph(const Graph& graph, const CertifyOptions& options);
ScanRow scan_graph6_line(const std::string& line, const ScanOptions& options);

// One row per non-blank line, in input order.
std::vector<ScanRow> scan_lines(const std::vector<std::string>& lines, const ScanOptions& options);

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);
Json scan_json(const std::vector<ScanRow>& rows);

struct LemmaSweepFailure {
  std::string canon;
  std::string check;
  std::string detail;
};

struct LemmaSweep {
  int max_n = 0;
  std::size_t graphs = 0;
  std::size_t pairs = 0;
  // Totals per check over all graphs, in LemmaReport::checks() order.
  std::vector<std::pair<std::string, LemmaCheck>> totals;
  std::vector<LemmaSweepFailure> failures;
  bool all_pass() const { return failures.empty(); }
};

// Every isomorphism class on at most max_n vertices (one representative per
// class, padded with isolated vertices to max_n) through verify_lemma_suite.
LemmaSweep run_lemma_sweep(int max_n, int jobs, const CertifyOptions& options = {});

}  // namespace strongcommon
