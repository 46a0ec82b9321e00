#pragma once

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "bessel_certify/verify/report.hpp"

namespace bessel_certify::verify {

/// Independent unit of sweep work. Rows it returns get `index` prefixed to
/// their own position. `context` labels the failure row written when
/// evaluation throws.
struct Task {
  std::vector<std::size_t> index;
  Inputs context;
  std::function<std::vector<SweepRow>()> eval;
};

inline bool is_exploratory(const std::string& check_id) { return check_id.rfind("explore.", 0) == 0; }

/// Evaluates tasks[begin, end) on `workers` threads (contiguous blocks) and
/// assembles the report. Row order does not depend on `workers`.
inline SweepReport evaluate_tasks(const std::string& check_id, const std::vector<Task>& tasks, std::size_t begin,
                                  std::size_t end, unsigned workers, bool timing = false) {
  end = std::min(end, tasks.size());
  begin = std::min(begin, end);
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = end - begin;
  std::vector<std::vector<SweepRow>> results(n);

  auto run_one = [&](std::size_t k) {
    const Task& task = tasks[begin + k];
    std::vector<SweepRow> rows;
    try {
      rows = task.eval();
    } catch (const std::exception&) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      rows.assign(1, SweepRow{{}, task.context, nan, nan, nan, false, false});
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      std::vector<std::size_t> idx = task.index;
      idx.push_back(j);
      rows[j].index = std::move(idx);
    }
    results[k] = std::move(rows);
  };

  workers = std::max(1u, workers);
  if (workers == 1 || n < 2) {
    for (std::size_t k = 0; k < n; ++k) run_one(k);
  } else {
    const std::size_t w = std::min<std::size_t>(workers, n);
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (std::size_t t = 0; t < w; ++t) {
      const std::size_t lo = n * t / w, hi = n * (t + 1) / w;
      pool.emplace_back([&, lo, hi] {
        for (std::size_t k = lo; k < hi; ++k) run_one(k);
      });
    }
    for (auto& th : pool) th.join();
  }

  SweepReport rep;
  rep.check_id = check_id;
  rep.asserted = !is_exploratory(check_id);
  for (auto& rows : results)
    for (auto& row : rows) rep.rows.push_back(std::move(row));
  finalize(rep);
  if (timing) {
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  }
  return rep;
}

/// Splits the task list into `chunks` contiguous pieces, evaluates each on
/// its own and merges the partial reports.
inline SweepReport evaluate_chunked(const std::string& check_id, const std::vector<Task>& tasks, std::size_t chunks,
                                    unsigned workers, bool timing = false) {
  chunks = std::max<std::size_t>(1, chunks);
  SweepReport acc = evaluate_tasks(check_id, tasks, 0, tasks.size() / chunks, workers, timing);
  for (std::size_t c = 1; c < chunks; ++c) {
    const std::size_t lo = tasks.size() * c / chunks, hi = tasks.size() * (c + 1) / chunks;
    acc = merge(acc, evaluate_tasks(check_id, tasks, lo, hi, workers, timing));
  }
  return acc;
}

}  // namespace bessel_certify::verify
