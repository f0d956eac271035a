#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mincodes/linalg.hpp"

namespace mincodes {

inline constexpr std::uint64_t max_weight_enumeration = 1ull << 24;

/// The ordered multiset D = {d_1, ..., d_n} of columns in F_q^k defining
///   C(D) = { (<x,d_1>, ..., <x,d_n>) : x in F_q^k }.
/// Column order is significant: columns are code positions.
class DefiningSet {
  public:
    DefiningSet(FieldPtr field, std::size_t k, std::vector<Vector> columns);

    const FieldPtr& field_ptr() const noexcept { return field_; }
    const Field& field() const noexcept { return *field_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return columns_.size(); }
    const std::vector<Vector>& columns() const noexcept { return columns_; }
    const Vector& operator[](std::size_t i) const { return columns_[i]; }
    std::size_t zero_columns() const;

    friend bool operator==(const DefiningSet& a, const DefiningSet& b) noexcept {
        return a.k_ == b.k_ && *a.field_ == *b.field_ && a.columns_ == b.columns_;
    }

  private:
    FieldPtr field_;
    std::size_t k_;
    std::vector<Vector> columns_;
};

struct CodeCheck {
    std::size_t rank;
    std::size_t inert_columns;  // zero columns: coordinates that vanish on every codeword
};

/// Confirms rank(D) = k, i.e. C(D) is an [n,k]_q code. Throws RankDeficient.
CodeCheck validate_code(const DefiningSet& d);

struct Codeword {
    std::vector<Element> coords;
    std::optional<Vector> message;

    std::size_t size() const noexcept { return coords.size(); }
    std::size_t weight() const noexcept;
};

/// c(x) = (<x,d_1>, ..., <x,d_n>).
Codeword encode(const Vector& x, const DefiningSet& d);

/// Zero-based indices of the nonzero coordinates.
std::vector<std::size_t> support(const Codeword& c);
/// Zero-based indices of the zero coordinates.
std::vector<std::size_t> zero_set(const Codeword& c);

/// u is covered by v: Suppt(u) is a subset of Suppt(v). Throws DimensionMismatch.
bool covers(const Codeword& u, const Codeword& v);
/// The same relation decided as Zero(v) subset of Zero(u).
bool covers_by_zero_sets(const Codeword& u, const Codeword& v);

struct WeightDistribution {
    std::map<std::size_t, std::uint64_t> counts;
    std::uint32_t q = 0;
    std::size_t k = 0;
    std::size_t n = 0;

    std::uint64_t total() const;
    /// Extremes over nonzero weights; empty when every codeword is zero.
    std::optional<std::size_t> w_min() const;
    std::optional<std::size_t> w_max() const;
};

/// Exact distribution over all q^k messages. Throws EnumerationTooLarge when
/// q^k > 2^24. Messages are split across `jobs` workers.
WeightDistribution weight_distribution(const DefiningSet& d, unsigned jobs = 1);

/// Every vector of F_q^k in lexicographic order (zero first).
std::vector<Vector> all_vectors(std::size_t k, const FieldPtr& field);

}  // namespace mincodes
