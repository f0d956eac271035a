#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "mincodes/codes.hpp"

namespace mincodes {

inline constexpr std::uint64_t max_pair_enumeration = 1ull << 16;

enum class Method { span, dhz, brute, ab };
enum class Verdict { minimal, not_minimal, inconclusive };

const char* method_name(Method m) noexcept;
const char* verdict_name(Verdict v) noexcept;

/// Projective y whose zero-set columns H(y,D) span less than the hyperplane.
struct HyperplaneWitness {
    Vector y;
    std::size_t span_dim;
};

/// Independent messages with c(x) covered by c(y).
struct CoveringWitness {
    Vector x;
    Vector y;
};

/// Independent pair (a, b) = (c(a_msg), c(b_msg)) meeting the weight identity
///   sum_{c in F_q^*} wt(a + c b) = (q-1) wt(a) - wt(b).
struct WeightIdentityWitness {
    Vector a_msg;
    Vector b_msg;
    std::int64_t weight_sum;
    std::int64_t rhs;
};

using Witness = std::variant<std::monostate, HyperplaneWitness, CoveringWitness, WeightIdentityWitness>;

struct MinimalityVerdict {
    Method method;
    Verdict verdict;
    Witness witness;
    std::uint64_t work = 0;  // hyperplanes (span) or pairs (brute, dhz) or messages (ab) examined
    std::size_t w_min = 0;   // ab only
    std::size_t w_max = 0;   // ab only

    bool minimal() const noexcept { return verdict == Verdict::minimal; }
};

struct CodewordSpan {
    bool minimal;
    std::size_t span_dim;  // dim V(y,D), capped at k-1 by early exit
};

/// c(y) is minimal in C(D) iff the columns of D orthogonal to y span the
/// whole hyperplane y^perp, i.e. dim V(y,D) = k-1. Throws ZeroVector.
CodewordSpan check_codeword_span(const Vector& y, const DefiningSet& d);

/// Span criterion over every hyperplane. Only one representative y per
/// scalar class is examined: H(a y) = H(y) for a != 0, so the verdict for
/// all nonzero y follows from the (q^k-1)/(q-1) projective points.
/// The witness is the first deficient y in projective-point order.
MinimalityVerdict check_span(const DefiningSet& d, unsigned jobs = 1);

/// Direct definition: searches for independent x, y with c(x) covered by
/// c(y). Requires q^k <= 2^16.
MinimalityVerdict check_brute(const DefiningSet& d, unsigned jobs = 1);

/// Weight identity test over ordered independent pairs; both orders of each
/// pair are tested. Requires q^k <= 2^16.
MinimalityVerdict check_dhz(const DefiningSet& d, unsigned jobs = 1);

/// Sufficient test q*w_min > (q-1)*w_max; otherwise inconclusive, never
/// not_minimal.
MinimalityVerdict check_ab(const DefiningSet& d, unsigned jobs = 1);

MinimalityVerdict check(Method m, const DefiningSet& d, unsigned jobs = 1);

struct DhzSides {
    std::int64_t weight_sum;
    std::int64_t rhs;
    bool violated() const noexcept { return weight_sum == rhs; }
};

/// Both sides of the weight identity for one pair of codewords.
DhzSides dhz_sides(const Codeword& a, const Codeword& b, const Field& field);

struct CountingIdentity {
    std::uint64_t lhs;  // sum over all nonzero y of #H(y,D)
    std::uint64_t rhs;  // n (q^{k-1} - 1)
};

/// Double count of incidences (y, d) with <y,d> = 0. Throws ZeroColumnPresent.
CountingIdentity counting_identity(const DefiningSet& d);

/// Re-derives a verdict's witness by an independent route. True for verdicts
/// that carry no witness.
bool witness_holds(const MinimalityVerdict& v, const DefiningSet& d);

}  // namespace mincodes
