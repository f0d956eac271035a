#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mincodes/codes.hpp"

namespace mincodes {

/// Uniformly random columns of F_q^k, resampled until the set has rank k.
DefiningSet random_defining_set(std::mt19937_64& rng, const FieldPtr& field, std::size_t k, std::size_t n);

/// `count` random codes with q in {2,3,4}, k in {2,3,4}, n in [k,10];
/// identical seeds give identical corpora.
std::vector<DefiningSet> random_corpus(std::uint64_t seed, std::size_t count);

}  // namespace mincodes
