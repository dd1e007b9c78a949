#pragma once

#include <algorithm>
#include <future>
#include <thread>
#include <vector>

namespace twodist::dioph::detail {

/// Runs work(lo, hi) over contiguous slabs of [first, last], one per hardware
/// thread, and returns the partial results in slab order.
template <class Result, class Work>
std::vector<Result> over_slabs(long first, long last, Work work) {
  if (last < first) return {};
  const long span = last - first + 1;
  const long threads = std::clamp<long>(std::thread::hardware_concurrency(), 1, span);
  const long chunk = (span + threads - 1) / threads;
  std::vector<std::future<Result>> futures;
  for (long lo = first; lo <= last; lo += chunk) {
    futures.push_back(std::async(std::launch::async, work, lo, std::min(last, lo + chunk - 1)));
  }
  std::vector<Result> out;
  out.reserve(futures.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace twodist::dioph::detail
