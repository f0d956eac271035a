#include "mincodes/constructions.hpp"

#include <algorithm>
#include <set>

#include "mincodes/error.hpp"

namespace mincodes {

namespace {

// Nonzero vectors supported on coordinates [first, last] (zero-based), sorted.
std::vector<Vector> punctured_span(std::size_t k, std::size_t first, std::size_t last, const FieldPtr& field) {
    const std::uint32_t q = field->q();
    const std::size_t width = last + 1 - first;
    std::vector<Vector> out;
    std::vector<Element> digits(width, 0);
    for (;;) {
        std::size_t j = width;
        while (j-- > 0) {
            if (++digits[j] < q) break;
            digits[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1)) break;  // wrapped back to zero
        std::vector<Element> c(k, 0);
        std::copy(digits.begin(), digits.end(), c.begin() + static_cast<std::ptrdiff_t>(first));
        out.emplace_back(field, std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vector> translates(const std::vector<std::size_t>& units, const std::vector<Vector>& base, std::size_t k,
                               const FieldPtr& field) {
    std::vector<Vector> out;
    for (std::size_t i : units) {
        const Vector e = Vector::unit(field, k, i);
        for (const Vector& s : base) out.push_back(e + s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void require_split(std::size_t k, std::size_t t) {
    if (!(2 * t > k && t < k))
        throw Error(Errc::bad_split, "BadSplit: need k/2 < t < k, got k = " + std::to_string(k) +
                                         ", t = " + std::to_string(t));
}

}  // namespace

const char* family_name(Family f) noexcept {
    switch (f) {
        case Family::full: return "full";
        case Family::d0: return "d0";
        case Family::d1: return "d1";
        case Family::d2: return "d2";
        case Family::d3: return "d3";
        case Family::d4: return "d4";
    }
    return "?";
}

std::optional<Family> parse_family(const std::string& name) {
    for (Family f : {Family::full, Family::d0, Family::d1, Family::d2, Family::d3, Family::d4})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

DefiningSet full_space(std::size_t k, const FieldPtr& field) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= field->q();
        if (total > max_full_space) throw Error(Errc::enumeration_too_large, "q^k exceeds 2^20 columns");
    }
    return DefiningSet(field, k, all_vectors(k, field));
}

DefiningSet d0(std::size_t k, const FieldPtr& field) {
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < k; ++i) cols.push_back(Vector::unit(field, k, i));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (Element a : field->nonzero()) {
                std::vector<Element> c(k, 0);
                c[i] = 1;
                c[j] = a;
                cols.emplace_back(field, std::move(c));
            }
    return DefiningSet(field, k, std::move(cols));
}

bool in_d0(const Vector& v) {
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) nz.push_back(i);
    if (nz.size() == 1) return v[nz[0]] == 1;
    if (nz.size() == 2) return v[nz[0]] == 1;
    return false;
}

std::vector<Vector> d0_witness(const Vector& y) {
    if (y.is_zero()) throw Error(Errc::zero_vector, "d0_witness needs y != 0");
    const Field& f = y.field();
    const std::size_t k = y.size();
    std::size_t i0 = 0;
    while (y[i0] == 0) ++i0;

    std::vector<Vector> alphas;
    for (std::size_t i = 0; i < k; ++i) {
        if (i == i0) continue;
        std::vector<Element> a(k, 0);
        if (i < i0) {
            a[i] = 1;
            a[i0] = f.neg(f.mul(f.inv(y[i0]), y[i]));
        } else if (y[i] != 0) {
            a[i0] = 1;
            a[i] = f.neg(f.mul(f.inv(y[i]), y[i0]));
        } else {
            a[i] = 1;
        }
        Vector alpha(y.field_ptr(), std::move(a));
        if (!in_d0(alpha)) throw std::logic_error("d0_witness produced a vector outside D0: " + alpha.to_string());
        alphas.push_back(std::move(alpha));
    }
    return alphas;
}

FamilySets family_sets(std::size_t k, std::size_t t, const FieldPtr& field) {
    require_split(k, t);
    FamilySets fs;
    // zero-based: S on [0, t-1], S' on [k-t, k-1], S'' on [k-t+1, k-1]
    fs.s = punctured_span(k, 0, t - 1, field);
    fs.s1 = punctured_span(k, k - t, k - 1, field);
    fs.s2 = punctured_span(k, k - t + 1, k - 1, field);

    std::vector<std::size_t> u1, u2, u3;
    for (std::size_t i = t; i < k; ++i) u1.push_back(i);
    for (std::size_t i = 0; i < k - t; ++i) u2.push_back(i);
    for (std::size_t i = 0; i < k - t + 1; ++i) u3.push_back(i);
    fs.omega1 = translates(u1, fs.s, k, field);
    fs.omega2 = translates(u2, fs.s1, k, field);
    fs.omega3 = translates(u3, fs.s2, k, field);
    return fs;
}

DefiningSet d_family(int which, std::size_t k, std::size_t t, const FieldPtr& field) {
    const FamilySets fs = family_sets(k, t, field);
    std::vector<const std::vector<Vector>*> parts;
    switch (which) {
        case 1: parts = {&fs.s, &fs.s1, &fs.omega2}; break;
        case 2: parts = {&fs.s, &fs.s2, &fs.omega3}; break;
        case 3: parts = {&fs.s, &fs.s1, &fs.omega1, &fs.omega2}; break;
        case 4: parts = {&fs.s, &fs.s1, &fs.omega1, &fs.omega3}; break;
        default: throw std::invalid_argument("family index must be 1..4");
    }
    std::set<Vector> seen;
    std::vector<Vector> cols;
    for (const auto* part : parts)
        for (const Vector& v : *part)
            if (seen.insert(v).second) cols.push_back(v);
    return DefiningSet(field, k, std::move(cols));
}

DefiningSet construct(const ConstructionParams& params) {
    switch (params.family) {
        case Family::full: return full_space(params.k, params.field);
        case Family::d0: return d0(params.k, params.field);
        case Family::d1: return d_family(1, params.k, params.t, params.field);
        case Family::d2: return d_family(2, params.k, params.t, params.field);
        case Family::d3: return d_family(3, params.k, params.t, params.field);
        case Family::d4: return d_family(4, params.k, params.t, params.field);
    }
    throw std::logic_error("unknown family");
}

const char* padding_name(Padding p) noexcept {
    switch (p) {
        case Padding::repeat_last: return "repeat_last";
        case Padding::cycle: return "cycle";
        case Padding::from_file: return "from_file";
    }
    return "?";
}

std::optional<Padding> parse_padding(const std::string& name) {
    for (Padding p : {Padding::repeat_last, Padding::cycle, Padding::from_file})
        if (name == padding_name(p)) return p;
    return std::nullopt;
}

DefiningSet extend(const DefiningSet& d, std::size_t target_n, Padding padding, const std::vector<Vector>& source) {
    if (target_n < d.n())
        throw Error(Errc::target_too_small, "TargetTooSmall: target length " + std::to_string(target_n) +
                                                " is below n = " + std::to_string(d.n()));
    std::vector<Vector> cols = d.columns();
    const std::size_t extra = target_n - d.n();
    if (extra == 0) return d;
    const std::vector<Vector>& pool = padding == Padding::from_file ? source : d.columns();
    if (pool.empty()) throw Error(Errc::length_mismatch, "no columns available for padding");
    for (std::size_t i = 0; i < extra; ++i) {
        if (padding == Padding::repeat_last)
            cols.push_back(d.columns().back());
        else
            cols.push_back(pool[i % pool.size()]);
    }
    return DefiningSet(d.field_ptr(), d.k(), std::move(cols));
}

}  // namespace mincodes
