#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace perfcone {

// Thread count resolution: explicit value, then PERFCONE_THREADS, then
// hardware concurrency; always at least 1.
unsigned resolve_threads(std::optional<unsigned> requested = std::nullopt);

// Runs body(i) for i in [0, n). Work is pulled from a shared counter; callers
// get determinism by writing results into slot i only.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace perfcone
