#include "lucent/common.hpp"

#include <atomic>
#include <mutex>

namespace lucent {

namespace {

int g_thread_count = 0;  // 0 = uninitialized

int detect_threads() {
  if (const char* env = std::getenv("LUCENT_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int thread_count() {
  if (g_thread_count == 0) g_thread_count = detect_threads();
  return g_thread_count;
}

void set_thread_count(int n) { g_thread_count = n < 1 ? 1 : n; }

void parallel_chunks(std::size_t total, std::size_t chunk_size,
                     const std::function<void(std::size_t, std::size_t,
                                              std::size_t)>& fn) {
  if (total == 0) return;
  const std::size_t n_chunks = chunk_count(total, chunk_size);
  const int n_threads =
      std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n_chunks);

  if (n_threads <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) {
      std::size_t begin = c * chunk_size;
      std::size_t end = std::min(begin + chunk_size, total);
      fn(begin, end, c);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&]() {
    while (true) {
      std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) break;
      std::size_t begin = c * chunk_size;
      std::size_t end = std::min(begin + chunk_size, total);
      try {
        fn(begin, end, c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        break;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace lucent
