#pragma once

#include <functional>

namespace cantor {

/// Worker count from CANTOR_ATLAS_THREADS, else the hardware concurrency.
int worker_count();

/// Runs body(i) for i in [0, n) on worker_count() threads, striped by index.
/// Each index runs exactly once, so results written per index are schedule-independent.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace cantor
