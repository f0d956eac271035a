#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mincodes/codes.hpp"

namespace mincodes {

/// q(k-1) < n(k;q) <= (q-1) k(k-1)/2 + k.
struct Bounds {
    std::size_t k;
    std::uint64_t q;
    std::uint64_t lower_exclusive;
    std::uint64_t upper_inclusive;
};

Bounds bounds(std::size_t k, std::uint64_t q);

struct SearchOptions {
    std::uint64_t budget = 100'000'000;  // backtracking nodes
    bool prune = true;      // deficit, rank and availability bounds
    bool fix_basis = true;  // require e_1..e_k among the columns
    unsigned jobs = 1;
    std::size_t split_depth = 2;  // subtrees handed to workers when jobs > 1
};

enum class ExistenceStatus { found, exhausted, budget_exhausted };
const char* existence_name(ExistenceStatus s) noexcept;

struct ExistenceResult {
    ExistenceStatus status;
    std::optional<DefiningSet> witness;  // exactly n columns when found
    std::uint64_t nodes = 0;
};

/// Decides whether a minimal [n,k]_q code exists.
///
/// The search walks sets of distinct projective points in increasing index
/// order and succeeds at the first set of size <= n that passes the span
/// criterion; that set is padded to n by repeating its last column. This
/// covers every multiset: scaling a column or permuting columns never
/// changes a codeword support, and a repeated column never enlarges any
/// V(y,D), so a minimal multiset of length n exists iff a minimal set of
/// at most n distinct points does. Zero columns are never used: dropping
/// one keeps every V(y,D), so they only waste length.
///
/// With fix_basis, the unit vectors are forced into the set. Any minimal D
/// contains k independent columns, and g in GL(k,q) mapping them to
/// e_1..e_k yields C(gD) = C(D), so nothing is lost.
ExistenceResult exists_minimal(std::size_t n, std::size_t k, const FieldPtr& field, const SearchOptions& opts = {});

enum class SearchStatus { exact, bracket, budget_exhausted };
const char* search_status_name(SearchStatus s) noexcept;

struct LengthAttempt {
    std::size_t n;
    ExistenceStatus status;
    std::uint64_t nodes;
};

struct SearchReport {
    std::size_t k;
    std::uint64_t q;
    SearchStatus status;
    Bounds bounds;
    std::optional<std::size_t> n_min;       // exact only
    std::size_t bracket_lo;                 // n(k;q) lies in [bracket_lo, bracket_hi]
    std::size_t bracket_hi;
    std::optional<DefiningSet> witness;     // exact only
    std::vector<LengthAttempt> attempts;    // one per searched n, ascending
    std::uint64_t budget;
    std::uint64_t budget_used;
};

/// Scans n upward from q(k-1)+1. Exact when a witness appears with every
/// smaller length exhausted; bracket when n_max stops the scan; budget_exhausted
/// when the node budget runs out first.
SearchReport n_min(std::size_t k, const FieldPtr& field, const SearchOptions& opts = {},
                   std::optional<std::size_t> n_max = std::nullopt);

/// False when completing `partial` to n columns provably cannot give a
/// minimal code: remaining columns cannot reach rank k, some hyperplane's
/// deficit (k-1 - dim V(y,partial)) exceeds n - j, or the total deficit
/// exceeds (n - j)(q^{k-1}-1)/(q-1), since each new column lies in that many
/// hyperplanes and lowers each of their deficits by at most one.
bool branch_viable(const DefiningSet& partial, std::size_t n);

}  // namespace mincodes
