#pragma once

#include <functional>

namespace bbs {

/// Worker count: BBS_THREADS if set and positive, else the hardware count.
int thread_count();

/// Runs body(0..n-1), possibly concurrently. Exceptions are rethrown in
/// index order after all workers finish.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace bbs
