#pragma once

#include <cstddef>
#include <functional>

namespace roq {

// Runs fn(i) for i in [0, n) on at most `threads` workers. Indices are
// handed out in blocks; fn must only write to slot i of its output.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace roq
