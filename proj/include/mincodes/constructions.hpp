#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mincodes/codes.hpp"

namespace mincodes {

inline constexpr std::uint64_t max_full_space = 1ull << 20;

enum class Family { full, d0, d1, d2, d3, d4 };

const char* family_name(Family f) noexcept;
std::optional<Family> parse_family(const std::string& name);

struct ConstructionParams {
    Family family;
    std::size_t k;
    std::size_t t = 0;  // split parameter, d1..d4 only
    FieldPtr field;
};

/// D = F_q^k, every vector in lexicographic order, zero included.
DefiningSet full_space(std::size_t k, const FieldPtr& field);

/// D0 = {e_1..e_k} followed by {e_i + a e_j : i < j, a != 0} ordered by
/// i, then j, then a. n = (q-1) k(k-1)/2 + k.
DefiningSet d0(std::size_t k, const FieldPtr& field);

/// membership in D0: a unit vector, or e_i + a e_j with i < j and a != 0.
bool in_d0(const Vector& v);

/// k-1 independent members of D0 inside y^perp, one per index i != i0,
/// where i0 is the first nonzero coordinate of y:
///   i < i0             -> e_i  (y_i = 0 there, so e_i - y_i0^-1 y_i e_i0 = e_i)
///   i > i0, y_i != 0   -> e_i0 - y_i^-1 y_i0 e_i
///   i > i0, y_i == 0   -> e_i
/// Throws ZeroVector.
std::vector<Vector> d0_witness(const Vector& y);

/// The building blocks for k/2 < t < k:
///   S   = Span{e_1..e_t} \ {0}
///   S'  = Span{e_{k-t+1}..e_k} \ {0}
///   S'' = Span{e_{k-t+2}..e_k} \ {0}
///   Omega1 = U_{i=t+1..k} (e_i + S)
///   Omega2 = U_{i=1..k-t} (e_i + S')
///   Omega3 = U_{i=1..k-t+1} (e_i + S'')
/// Each component sorted lexicographically.
struct FamilySets {
    std::vector<Vector> s, s1, s2;
    std::vector<Vector> omega1, omega2, omega3;
};

/// Throws BadSplit unless k/2 < t < k.
FamilySets family_sets(std::size_t k, std::size_t t, const FieldPtr& field);

/// D1 = S u S' u Omega2, D2 = S u S'' u Omega3, D3 = S u S' u Omega1 u Omega2,
/// D4 = S u S' u Omega1 u Omega3, as sets: a vector shared by two components
/// appears once, at its first occurrence.
DefiningSet d_family(int which, std::size_t k, std::size_t t, const FieldPtr& field);

DefiningSet construct(const ConstructionParams& params);

enum class Padding { repeat_last, cycle, from_file };

const char* padding_name(Padding p) noexcept;
std::optional<Padding> parse_padding(const std::string& name);

/// Appends target_n - n columns: copies of the last column (repeat_last), the
/// existing columns in order (cycle), or `source` in order, cycling
/// (from_file). Throws TargetTooSmall when target_n < n.
DefiningSet extend(const DefiningSet& d, std::size_t target_n, Padding padding = Padding::repeat_last,
                   const std::vector<Vector>& source = {});

}  // namespace mincodes
