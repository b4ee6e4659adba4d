#pragma once

// Seeded generators shared by the property tests and the benchmarks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qal/corpus.hpp"
#include "qal/diagram.hpp"

namespace qal::testing {

/// QAL_SEED from the environment, else a fixed default.
std::uint64_t test_seed();

/// Closure of a random braid word on 2..4 strands with 1..max_crossings
/// letters, re-drawn until every strand is used (no free circles).
Diagram random_braid_diagram(std::mt19937_64& rng, int max_crossings);

std::vector<NamedDiagram> random_corpus(std::uint64_t seed, int count, int max_crossings);

/// Same diagram written differently: crossings shuffled and each component's
/// labels cyclically shifted
/// (components of length <= 2 keep their labels). Orientations and crossing
/// signs are preserved. Returns PD text for parse_pd.
std::string relabeled_pd(const Diagram& d, std::mt19937_64& rng);

}  // namespace qal::testing
