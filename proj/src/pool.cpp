#include "pyro/pool.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pyro {

int default_workers() {
    if (const char* env = std::getenv("PYRO_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

void parallel_for(std::int64_t count, int workers,
                  const std::function<void(std::int64_t)>& body) {
    if (count <= 0) return;
    if (workers < 1) throw std::invalid_argument("parallel_for: workers must be >= 1");
    if (workers == 1 || count == 1) {
        for (std::int64_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::int64_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto drain = [&] {
        for (;;) {
            const std::int64_t i = cursor.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    const int spawn = int(std::min<std::int64_t>(workers, count));
    threads.reserve(std::size_t(spawn - 1));
    for (int w = 1; w < spawn; ++w) threads.emplace_back(drain);
    drain();
    for (std::thread& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace pyro
