// Search kernels behind the J-line decision procedures.
//
// The symbolic kernel builds models from the last world backwards. What a
// new front world needs to know about the rest of the model is, for each
// relation k, which boxed arguments hold at all of its k-successors, plus
// which hold at the next world. Models with equal summaries are
// interchangeable, so the search keeps one per summary and terminates.
//
// The enumeration kernel tries every shape and valuation. It is the
// reference implementation for tests and benchmarks, serial or OpenMP.
#pragma once

#include "plog/jline.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace plog {

enum class SearchOutcome {
  Found,         // a root satisfying the target exists; model attached
  Exhausted,     // no new summaries: no model of any size exists
  DepthReached,  // nothing found up to max_worlds
  StateLimit,    // gave up after max_states summaries
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::DepthReached;
  std::optional<Countermodel> model;
  std::uint64_t depth = 0;
  std::size_t states = 0;
};

struct SearchLimits {
  std::uint64_t max_worlds = kDefaultCap;
  std::size_t max_states = std::size_t{1} << 21;
};

/// Least-size J-line (n modalities) whose root satisfies target.
/// Throws std::length_error if target has more than 64 distinct boxed
/// arguments or more than 16 variables.
SearchResult symbolic_root_search(const Formula& target, unsigned n, const SearchLimits& limits);

enum class Execution { Serial, Parallel };

/// Exhaustive reference search over shapes of 1..max_worlds worlds (at most
/// 63) and all valuations. Returns the first model in (size, level word,
/// valuation index) order regardless of execution mode; never Exhausted.
SearchResult enumerate_root_search(const Formula& target, unsigned n, std::uint64_t max_worlds,
                                   Execution mode);

}  // namespace plog
