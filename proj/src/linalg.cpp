#include "mincodes/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "mincodes/error.hpp"

namespace mincodes {

namespace {

void require_compatible(const Vector& x, const Vector& y) {
    if (x.size() != y.size())
        throw Error(Errc::dimension_mismatch,
                    "vector lengths " + std::to_string(x.size()) + " and " + std::to_string(y.size()) + " differ");
    if (!(x.field() == y.field()))
        throw Error(Errc::field_mismatch, "vectors over GF(" + x.field().name() + ") and GF(" + y.field().name() + ")");
}

}  // namespace

Vector::Vector(FieldPtr field, std::vector<Element> coords) : field_(std::move(field)), coords_(std::move(coords)) {
    if (coords_.empty()) throw Error(Errc::dimension_mismatch, "vectors must have length at least 1");
    for (Element c : coords_)
        if (!field_->valid(c))
            throw Error(Errc::bad_element_encoding,
                        "element " + std::to_string(c) + " out of range for GF(" + field_->name() + ")");
}

Vector Vector::zero(FieldPtr field, std::size_t k) { return Vector(std::move(field), std::vector<Element>(k, 0)); }

Vector Vector::unit(FieldPtr field, std::size_t k, std::size_t i) {
    std::vector<Element> c(k, 0);
    c.at(i) = 1;
    return Vector(std::move(field), std::move(c));
}

bool Vector::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](Element c) { return c == 0; });
}

Vector Vector::operator+(const Vector& other) const {
    require_compatible(*this, other);
    std::vector<Element> c(size());
    for (std::size_t i = 0; i < size(); ++i) c[i] = field_->add(coords_[i], other.coords_[i]);
    return Vector(field_, std::move(c));
}

Vector Vector::scaled(Element a) const {
    std::vector<Element> c(size());
    for (std::size_t i = 0; i < size(); ++i) c[i] = field_->mul(a, coords_[i]);
    return Vector(field_, std::move(c));
}

std::string Vector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(coords_[i]);
    }
    return out;
}

Element inner_product(const Vector& x, const Vector& y) {
    require_compatible(x, y);
    const Field& f = x.field();
    Element acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
    return acc;
}

Vector normalized(const Vector& v) {
    for (Element c : v.coords())
        if (c != 0) return v.scaled(v.field().inv(c));
    throw Error(Errc::zero_vector, "the zero vector has no projective representative");
}

// ---------------------------------------------------------------------------

EchelonBasis::EchelonBasis(const Field& field, std::size_t ambient_dim)
    : field_(&field), k_(ambient_dim), scratch_(ambient_dim) {
    rows_.reserve(k_ * k_);
    pivots_.reserve(k_);
}

void EchelonBasis::reduce(std::span<Element> v) const {
    const Field& f = *field_;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const Element t = v[pivots_[r]];
        if (t == 0) continue;
        const Element* row = rows_.data() + r * k_;
        const Element nt = f.neg(t);
        for (std::size_t j = 0; j < k_; ++j)
            if (row[j] != 0) v[j] = f.add(v[j], f.mul(nt, row[j]));
    }
}

bool EchelonBasis::insert(std::span<const Element> v) {
    if (v.size() != k_) throw Error(Errc::dimension_mismatch, "vector length does not match ambient dimension");
    if (pivots_.size() == k_) return false;
    std::copy(v.begin(), v.end(), scratch_.begin());
    reduce(scratch_);
    std::size_t pivot = 0;
    while (pivot < k_ && scratch_[pivot] == 0) ++pivot;
    if (pivot == k_) return false;
    const Element s = field_->inv(scratch_[pivot]);
    for (std::size_t j = 0; j < k_; ++j) rows_.push_back(field_->mul(s, scratch_[j]));
    pivots_.push_back(pivot);
    return true;
}

bool EchelonBasis::contains(std::span<const Element> v) const {
    if (v.size() != k_) throw Error(Errc::dimension_mismatch, "vector length does not match ambient dimension");
    std::copy(v.begin(), v.end(), scratch_.begin());
    reduce(scratch_);
    return std::all_of(scratch_.begin(), scratch_.end(), [](Element c) { return c == 0; });
}

void EchelonBasis::pop() {
    pivots_.pop_back();
    rows_.resize(pivots_.size() * k_);
}

void EchelonBasis::clear() {
    pivots_.clear();
    rows_.clear();
}

std::vector<std::vector<Element>> EchelonBasis::reduced_rows() const {
    const Field& f = *field_;
    std::vector<std::size_t> order(pivots_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<std::vector<Element>> rows;
    std::vector<std::size_t> piv;
    for (std::size_t r : order) {
        rows.emplace_back(rows_.begin() + r * k_, rows_.begin() + (r + 1) * k_);
        piv.push_back(pivots_[r]);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j == i) continue;
            const Element t = rows[j][piv[i]];
            if (t == 0) continue;
            const Element nt = f.neg(t);
            for (std::size_t c = 0; c < k_; ++c) rows[j][c] = f.add(rows[j][c], f.mul(nt, rows[i][c]));
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(FieldPtr field, std::size_t k, std::vector<Vector> basis)
    : field_(std::move(field)), k_(k), basis_(std::move(basis)) {}

Subspace Subspace::zero(FieldPtr field, std::size_t k) { return Subspace(std::move(field), k, {}); }

Subspace Subspace::full(FieldPtr field, std::size_t k) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < k; ++i) basis.push_back(Vector::unit(field, k, i));
    return Subspace(std::move(field), k, std::move(basis));
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != k_) throw Error(Errc::dimension_mismatch, "vector length does not match ambient dimension");
    const Field& f = *field_;
    std::vector<Element> r(v.coords().begin(), v.coords().end());
    for (const Vector& row : basis_) {
        std::size_t pivot = 0;
        while (row[pivot] == 0) ++pivot;
        const Element t = r[pivot];
        if (t == 0) continue;
        const Element nt = f.neg(t);
        for (std::size_t j = 0; j < k_; ++j) r[j] = f.add(r[j], f.mul(nt, row[j]));
    }
    return std::all_of(r.begin(), r.end(), [](Element c) { return c == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

Subspace span(const FieldPtr& field, std::size_t k, std::span<const Vector> vs) {
    EchelonBasis eb(*field, k);
    for (const Vector& v : vs) {
        if (v.size() != k)
            throw Error(Errc::dimension_mismatch, "vector of length " + std::to_string(v.size()) + " in F_q^" +
                                                      std::to_string(k));
        if (!(v.field() == *field)) throw Error(Errc::field_mismatch, "mixed fields in span");
        eb.insert(v.coords());
    }
    std::vector<Vector> basis;
    for (auto& row : eb.reduced_rows()) basis.emplace_back(field, std::move(row));
    return Subspace(field, k, std::move(basis));
}

Subspace span(std::span<const Vector> vs) {
    if (vs.empty()) throw Error(Errc::dimension_mismatch, "span of an empty list needs an explicit ambient space");
    return span(vs.front().field_ptr(), vs.front().size(), vs);
}

std::size_t rank(std::span<const Vector> vs) {
    if (vs.empty()) return 0;
    return span(vs).dim();
}

Subspace perp(const Subspace& s) {
    const std::size_t k = s.ambient_dim();
    const Field& f = *s.field_ptr();
    std::vector<std::size_t> pivots;
    for (const Vector& row : s.basis()) {
        std::size_t p = 0;
        while (row[p] == 0) ++p;
        pivots.push_back(p);
    }
    std::vector<Vector> gens;
    for (std::size_t free = 0; free < k; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        std::vector<Element> z(k, 0);
        z[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) z[pivots[r]] = f.neg(s.basis()[r][free]);
        gens.emplace_back(s.field_ptr(), std::move(z));
    }
    return span(s.field_ptr(), k, gens);
}

Subspace hyperplane(const Vector& y) {
    if (y.is_zero()) throw Error(Errc::zero_vector, "H(0) is not a hyperplane");
    const Vector line[] = {y};
    return perp(span(line));
}

// ---------------------------------------------------------------------------

std::uint64_t projective_count(std::size_t k, std::uint64_t q) {
    std::uint64_t count = 0;
    std::uint64_t power = 1;
    for (std::size_t i = 0; i < k; ++i) {
        count += power;
        power *= q;
    }
    return count;
}

ProjectiveSpace::ProjectiveSpace(FieldPtr field, std::size_t k) : field_(std::move(field)), k_(k), count_(0) {
    if (k == 0) throw Error(Errc::dimension_mismatch, "projective space needs k >= 1");
    const std::uint64_t q = field_->q();
    long double total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= static_cast<long double>(q);
    if (total > static_cast<long double>(1ull << 32))
        throw Error(Errc::enumeration_too_large, "q^k exceeds 2^32");
    offsets_.assign(k, 0);
    std::uint64_t running = 0;
    std::uint64_t group = 1;  // q^(k-1-lead)
    for (std::size_t lead = k; lead-- > 0;) {
        offsets_[lead] = running;
        running += group;
        group *= q;
    }
    count_ = running;
}

Vector ProjectiveSpace::point(std::size_t index) const {
    if (index >= count_) throw std::out_of_range("projective point index");
    std::size_t lead = 0;
    while (offsets_[lead] > index) ++lead;
    std::size_t tail = index - offsets_[lead];
    const std::uint64_t q = field_->q();
    std::vector<Element> c(k_, 0);
    c[lead] = 1;
    for (std::size_t j = k_; j-- > lead + 1;) {
        c[j] = static_cast<Element>(tail % q);
        tail /= q;
    }
    return Vector(field_, std::move(c));
}

std::size_t ProjectiveSpace::index_of(const Vector& v) const {
    if (v.size() != k_) throw Error(Errc::dimension_mismatch, "vector length does not match projective space");
    const Vector n = normalized(v);
    std::size_t lead = 0;
    while (n[lead] == 0) ++lead;
    std::size_t tail = 0;
    for (std::size_t j = lead + 1; j < k_; ++j) tail = tail * field_->q() + n[j];
    return offsets_[lead] + tail;
}

std::vector<Vector> ProjectiveSpace::points() const {
    std::vector<Vector> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < count_; ++i) out.push_back(point(i));
    return out;
}

std::vector<Vector> projective_points(std::size_t k, const FieldPtr& field) {
    return ProjectiveSpace(field, k).points();
}

}  // namespace mincodes
