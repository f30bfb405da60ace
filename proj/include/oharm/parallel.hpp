#pragma once

#include <functional>

namespace oharm {

/* Runs fn(i) for i in [0, count) on up to `jobs` worker threads. Work items
 * must write only to their own slots; callers merge results in index order
 * afterwards, so output stays canonical whatever the completion order.
 * jobs <= 1 runs inline. */
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

}  // namespace oharm
