#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "chaoswpt/rng.hpp"

namespace chaoswpt::mc::detail {

/// Items per deterministic work unit. Chunk boundaries (not worker count)
/// define the random streams, so this constant is part of the
/// reproducibility contract.
inline constexpr std::int64_t kChunkItems = 8192;

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs `n_items` stochastic items split into fixed-size chunks. Chunk c
/// processes its items with Rng(mix_seed(seed, c)); chunk states are merged
/// in ascending chunk order after all workers finish. The result is
/// bit-identical for every worker count.
///
/// State: default-constructible chunk accumulator.
/// ItemFn: void(State&, Rng&) — one item.
/// MergeFn: void(State& into, State&& from).
template <typename State, typename ItemFn, typename MergeFn>
State run_chunked(std::int64_t n_items, std::uint64_t seed, int threads,
                  ItemFn&& item, MergeFn&& merge) {
  const std::int64_t n_chunks = (n_items + kChunkItems - 1) / kChunkItems;
  std::vector<State> results(static_cast<std::size_t>(n_chunks));

  auto run_chunk = [&](std::int64_t c) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(c)));
    State& state = results[static_cast<std::size_t>(c)];
    const std::int64_t begin = c * kChunkItems;
    const std::int64_t end = std::min(begin + kChunkItems, n_items);
    for (std::int64_t i = begin; i < end; ++i) item(state, rng);
  };

  const int workers = std::min<std::int64_t>(resolve_threads(threads), n_chunks);
  if (workers <= 1) {
    for (std::int64_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::int64_t c = next.fetch_add(1);
          if (c >= n_chunks) return;
          run_chunk(c);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  State total;
  for (auto& chunk_state : results) merge(total, std::move(chunk_state));
  return total;
}

}  // namespace chaoswpt::mc::detail
