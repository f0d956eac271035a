#include "mincodes/corpus.hpp"

#include "mincodes/linalg.hpp"

namespace mincodes {

namespace {

// std::uniform_int_distribution is implementation-defined; a plain modulus
// keeps corpora identical across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

DefiningSet random_defining_set(std::mt19937_64& rng, const FieldPtr& field, std::size_t k, std::size_t n) {
    for (;;) {
        std::vector<Vector> cols;
        cols.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Element> c(k);
            for (auto& e : c) e = static_cast<Element>(draw(rng, field->q()));
            cols.emplace_back(field, std::move(c));
        }
        if (span(field, k, cols).dim() == k) return DefiningSet(field, k, std::move(cols));
    }
}

std::vector<DefiningSet> random_corpus(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    const unsigned qs[] = {2, 3, 4};
    std::vector<DefiningSet> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const FieldPtr field = field_of_order(qs[draw(rng, 3)]);
        const std::size_t k = 2 + draw(rng, 3);
        const std::size_t n = k + draw(rng, 11 - k);
        out.push_back(random_defining_set(rng, field, k, n));
    }
    return out;
}

}  // namespace mincodes
