#include "eqtri/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eqtri {

namespace {
std::atomic<unsigned> g_limit{0};
thread_local bool t_inside = false;  // nested loops run serially
}

void set_thread_limit(unsigned limit) { g_limit = limit; }

unsigned thread_limit() {
    unsigned l = g_limit.load();
    if (l) return l;
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min<std::size_t>(thread_limit(), count);
    if (workers <= 1 || t_inside) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        const bool outer = t_inside;
        t_inside = true;
        struct Reset {
            bool v;
            ~Reset() { t_inside = v; }
        } reset{outer};
        while (!failed) {
            std::size_t i = next++;
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t + 1 < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace eqtri
