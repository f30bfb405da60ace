#include "oharm/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace oharm {

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    int workers = std::min(jobs, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                fn(i);
        });
    for (std::thread& t : pool)
        t.join();
}

}  // namespace oharm
