#ifndef FPADE_PARALLEL_HPP
#define FPADE_PARALLEL_HPP

#include <functional>

namespace fpade {

// Thread budget: FPADE_THREADS when set (clamped to [1, 256]), otherwise the
// hardware concurrency.
int thread_budget();

// Runs fn(i) for i in [0, n) on up to thread_budget() threads with a static
// block split.  Each index must write only its own slots; results are then
// independent of the thread count, which keeps seeded runs byte-identical.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace fpade

#endif
