#include <commperm/scan.hpp>

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

namespace commperm {

void parallel_rows_stream(long lo, long hi, int jobs,
                          const std::function<std::vector<ScanRow>(long)>& fn,
                          const std::function<void(std::vector<ScanRow>&&)>& drain) {
  if (hi < lo) return;

  if (jobs <= 1) {
    for (long n = lo; n <= hi; ++n) drain(fn(n));
    return;
  }

  const size_t slots = static_cast<size_t>(hi - lo + 1);
  // Completed-but-undrained batches are capped so a fast producer cannot
  // outrun a slow sink and hold the whole scan in memory.
  const size_t window = static_cast<size_t>(jobs) * 4 + 8;
  std::vector<std::vector<ScanRow>> results(slots);
  std::vector<char> ready(slots, 0);
  size_t head = 0;  // next slot to drain, guarded by m
  std::mutex m;
  std::condition_variable cv_ready;
  std::condition_variable cv_space;
  std::atomic<long> next{lo};
  std::atomic<bool> stop{false};
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const long n = next.fetch_add(1);
      if (n > hi) return;
      const size_t slot = static_cast<size_t>(n - lo);
      {
        std::unique_lock<std::mutex> lock(m);
        cv_space.wait(lock, [&] { return slot < head + window || stop.load(); });
      }
      if (stop.load()) return;
      try {
        auto rows = fn(n);
        {
          std::lock_guard<std::mutex> lock(m);
          results[slot] = std::move(rows);
          ready[slot] = 1;
        }
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(m);
          if (!error) error = std::current_exception();
        }
        stop.store(true);
        cv_space.notify_all();
      }
      cv_ready.notify_one();
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(jobs));
  for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);

  std::exception_ptr drain_error;
  {
    std::unique_lock<std::mutex> lock(m);
    while (head < slots) {
      cv_ready.wait(lock, [&] { return ready[head] != 0 || error; });
      if (error) break;
      auto batch = std::move(results[head]);
      ++head;
      cv_space.notify_all();
      lock.unlock();
      try {
        drain(std::move(batch));
      } catch (...) {
        drain_error = std::current_exception();
        stop.store(true);
        cv_space.notify_all();
      }
      lock.lock();
      if (drain_error) break;
    }
  }

  for (auto& t : threads) t.join();
  if (drain_error) std::rethrow_exception(drain_error);
  if (error) std::rethrow_exception(error);
}

std::vector<ScanRow> parallel_rows(long lo, long hi, int jobs,
                                   const std::function<std::vector<ScanRow>(long)>& fn) {
  std::vector<ScanRow> merged;
  parallel_rows_stream(lo, hi, jobs, fn, [&merged](std::vector<ScanRow>&& batch) {
    for (auto& row : batch) merged.push_back(std::move(row));
  });
  return merged;
}

}  // namespace commperm
