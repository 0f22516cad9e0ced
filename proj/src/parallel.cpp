#include "lowlight/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace lowlight {

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t, std::size_t)>& body)
{
    if (count == 0) {
        return;
    }
    const std::size_t workers =
        std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
    if (workers == 1) {
        body(0, count);
        return;
    }

    const std::size_t chunk = (count + workers - 1) / workers;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&](std::size_t begin, std::size_t end) {
        try {
            body(begin, end);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (std::size_t begin = chunk; begin < count; begin += chunk) {
            pool.emplace_back(run, begin, std::min(begin + chunk, count));
        }
        run(0, std::min(chunk, count));
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

int default_thread_count()
{
    if (const char* env = std::getenv("RETINEX_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) {
                return n;
            }
        } catch (const std::exception&) {
        }
    }
    return 1;
}

} // namespace lowlight
