#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mincodes/gf.hpp"

namespace mincodes {

/// A row vector in F_q^k. Used for points, code columns and messages alike.
class Vector {
  public:
    Vector(FieldPtr field, std::vector<Element> coords);

    static Vector zero(FieldPtr field, std::size_t k);
    static Vector unit(FieldPtr field, std::size_t k, std::size_t i);

    std::size_t size() const noexcept { return coords_.size(); }
    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::span<const Element> coords() const noexcept { return coords_; }
    Element operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const noexcept;
    Vector operator+(const Vector& other) const;
    Vector scaled(Element a) const;

    /// Space-separated element encodings, e.g. "1 0 2".
    std::string to_string() const;

    friend bool operator==(const Vector& a, const Vector& b) noexcept {
        return *a.field_ == *b.field_ && a.coords_ == b.coords_;
    }
    friend std::weak_ordering operator<=>(const Vector& a, const Vector& b) noexcept {
        return a.coords_ <=> b.coords_;
    }

  private:
    FieldPtr field_;
    std::vector<Element> coords_;
};

/// Euclidean inner product sum x_i y_i. Throws DimensionMismatch / FieldMismatch.
Element inner_product(const Vector& x, const Vector& y);

/// Scalar multiple of v whose first nonzero coordinate is 1. Throws ZeroVector.
Vector normalized(const Vector& v);

/// Row-echelon basis grown one vector at a time.
///
/// Each stored row has a unit pivot and a zero in the pivot column of every
/// earlier row, so reducing a candidate against the rows in insertion order
/// is exact and pop() undoes the most recent successful insert.
class EchelonBasis {
  public:
    EchelonBasis(const Field& field, std::size_t ambient_dim);

    std::size_t dim() const noexcept { return pivots_.size(); }
    std::size_t ambient_dim() const noexcept { return k_; }

    /// Returns true when v was independent of the current rows (and was added).
    bool insert(std::span<const Element> v);
    /// True when v lies in the span of the current rows.
    bool contains(std::span<const Element> v) const;
    void pop();
    void clear();

    /// Canonical reduced row-echelon rows, pivots ascending.
    std::vector<std::vector<Element>> reduced_rows() const;

  private:
    void reduce(std::span<Element> v) const;

    const Field* field_;
    std::size_t k_;
    std::vector<Element> rows_;  // dim() rows of length k_, row-major
    std::vector<std::size_t> pivots_;
    mutable std::vector<Element> scratch_;
};

/// A subspace of F_q^k held by its reduced row-echelon basis, so equality of
/// subspaces is equality of bases.
class Subspace {
  public:
    static Subspace zero(FieldPtr field, std::size_t k);
    static Subspace full(FieldPtr field, std::size_t k);

    std::size_t dim() const noexcept { return basis_.size(); }
    std::size_t ambient_dim() const noexcept { return k_; }
    const std::vector<Vector>& basis() const noexcept { return basis_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
        return a.k_ == b.k_ && a.basis_ == b.basis_;
    }

  private:
    Subspace(FieldPtr field, std::size_t k, std::vector<Vector> basis);
    friend Subspace span(const FieldPtr&, std::size_t, std::span<const Vector>);

    FieldPtr field_;
    std::size_t k_;
    std::vector<Vector> basis_;
};

/// Span of vs inside F_q^k; an empty list spans the zero subspace.
Subspace span(const FieldPtr& field, std::size_t k, std::span<const Vector> vs);
/// Span of a non-empty list (ambient dimension and field taken from vs[0]).
Subspace span(std::span<const Vector> vs);

/// Dimension of the span; 0 for an empty list or all-zero vectors.
std::size_t rank(std::span<const Vector> vs);

/// All y with <y, x> = 0 for every x in s.
Subspace perp(const Subspace& s);

/// H(y) = y^perp, a hyperplane. Throws ZeroVector.
Subspace hyperplane(const Vector& y);

/// The points of PG(k-1, q): one representative per scalar class of nonzero
/// vectors, normalized so the first nonzero coordinate is 1, indexed in
/// lexicographic order of their coordinates.
class ProjectiveSpace {
  public:
    ProjectiveSpace(FieldPtr field, std::size_t k);

    std::size_t size() const noexcept { return count_; }
    std::size_t dim() const noexcept { return k_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }

    Vector point(std::size_t index) const;
    /// Index of the scalar class of v. Throws ZeroVector.
    std::size_t index_of(const Vector& v) const;
    std::vector<Vector> points() const;

  private:
    FieldPtr field_;
    std::size_t k_;
    std::size_t count_;
    std::vector<std::size_t> offsets_;  // first index of points whose leading 1 sits at position i
};

/// (q^k - 1)/(q - 1) normalized representatives in lexicographic order.
std::vector<Vector> projective_points(std::size_t k, const FieldPtr& field);

/// Number of projective points of PG(k-1, q), i.e. (q^k - 1)/(q - 1).
std::uint64_t projective_count(std::size_t k, std::uint64_t q);

}  // namespace mincodes
