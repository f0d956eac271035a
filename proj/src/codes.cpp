#include "mincodes/codes.hpp"

#include <algorithm>
#include <thread>

#include "mincodes/error.hpp"

namespace mincodes {

namespace {

std::uint64_t checked_power(std::uint64_t q, std::size_t k, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= q;
        if (total > cap)
            throw Error(Errc::enumeration_too_large,
                        "q^k = " + std::to_string(q) + "^" + std::to_string(k) + " exceeds the enumeration cap");
    }
    return total;
}

}  // namespace

DefiningSet::DefiningSet(FieldPtr field, std::size_t k, std::vector<Vector> columns)
    : field_(std::move(field)), k_(k), columns_(std::move(columns)) {
    if (k_ == 0) throw Error(Errc::dimension_mismatch, "defining sets need k >= 1");
    for (const Vector& c : columns_) {
        if (c.size() != k_)
            throw Error(Errc::dimension_mismatch,
                        "column of length " + std::to_string(c.size()) + " in a k=" + std::to_string(k_) + " set");
        if (!(c.field() == *field_)) throw Error(Errc::field_mismatch, "column over a different field");
    }
}

std::size_t DefiningSet::zero_columns() const {
    return static_cast<std::size_t>(std::count_if(columns_.begin(), columns_.end(), [](const Vector& v) { return v.is_zero(); }));
}

CodeCheck validate_code(const DefiningSet& d) {
    const std::size_t r = span(d.field_ptr(), d.k(), d.columns()).dim();
    if (r != d.k())
        throw Error(Errc::rank_deficient,
                    "RankDeficient(" + std::to_string(r) + "): defining set has rank " + std::to_string(r) +
                        " < k = " + std::to_string(d.k()));
    return CodeCheck{r, d.zero_columns()};
}

std::size_t Codeword::weight() const noexcept {
    return static_cast<std::size_t>(std::count_if(coords.begin(), coords.end(), [](Element c) { return c != 0; }));
}

Codeword encode(const Vector& x, const DefiningSet& d) {
    if (x.size() != d.k())
        throw Error(Errc::dimension_mismatch,
                    "message of length " + std::to_string(x.size()) + " for k = " + std::to_string(d.k()));
    Codeword c;
    c.coords.reserve(d.n());
    for (const Vector& col : d.columns()) c.coords.push_back(inner_product(x, col));
    c.message = x;
    return c;
}

std::vector<std::size_t> support(const Codeword& c) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < c.coords.size(); ++i)
        if (c.coords[i] != 0) s.push_back(i);
    return s;
}

std::vector<std::size_t> zero_set(const Codeword& c) {
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < c.coords.size(); ++i)
        if (c.coords[i] == 0) z.push_back(i);
    return z;
}

bool covers(const Codeword& u, const Codeword& v) {
    if (u.size() != v.size()) throw Error(Errc::dimension_mismatch, "codewords of different lengths");
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u.coords[i] != 0 && v.coords[i] == 0) return false;
    return true;
}

bool covers_by_zero_sets(const Codeword& u, const Codeword& v) {
    if (u.size() != v.size()) throw Error(Errc::dimension_mismatch, "codewords of different lengths");
    const auto zu = zero_set(u);
    const auto zv = zero_set(v);
    return std::includes(zu.begin(), zu.end(), zv.begin(), zv.end());
}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t t = 0;
    for (const auto& [w, c] : counts) t += c;
    return t;
}

std::optional<std::size_t> WeightDistribution::w_min() const {
    for (const auto& [w, c] : counts)
        if (w > 0 && c > 0) return w;
    return std::nullopt;
}

std::optional<std::size_t> WeightDistribution::w_max() const {
    for (auto it = counts.rbegin(); it != counts.rend(); ++it)
        if (it->first > 0 && it->second > 0) return it->first;
    return std::nullopt;
}

WeightDistribution weight_distribution(const DefiningSet& d, unsigned jobs) {
    const Field& f = d.field();
    const std::uint64_t q = f.q();
    const std::size_t k = d.k();
    const std::size_t n = d.n();
    const std::uint64_t total = checked_power(q, k, max_weight_enumeration);

    // scaled_rows[j][a] = a * (row j of the generator matrix); a codeword is the
    // sum over j of scaled_rows[j][x_j].
    std::vector<std::vector<std::vector<Element>>> scaled_rows(k, std::vector<std::vector<Element>>(q));
    for (std::size_t j = 0; j < k; ++j)
        for (Element a = 0; a < q; ++a) {
            auto& row = scaled_rows[j][a];
            row.resize(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = f.mul(a, d[i][j]);
        }

    // Workers take contiguous blocks of the leading digit x_0.
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(q)));
    std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(n + 1, 0));
    auto work = [&](unsigned worker) {
        auto& hist = partial[worker];
        const std::uint64_t per_lead = total / q;
        std::vector<Element> x(k, 0);
        // prefix[j] = sum of scaled rows for coordinates < j
        std::vector<std::vector<Element>> prefix(k + 1, std::vector<Element>(n, 0));
        for (Element lead = worker; lead < q; lead += jobs) {
            std::fill(x.begin(), x.end(), 0);
            x[0] = lead;
            std::size_t dirty = 0;
            for (std::uint64_t step = 0; step < per_lead; ++step) {
                for (std::size_t j = dirty; j < k; ++j) {
                    const auto& add = scaled_rows[j][x[j]];
                    for (std::size_t i = 0; i < n; ++i) prefix[j + 1][i] = f.add(prefix[j][i], add[i]);
                }
                std::size_t w = 0;
                for (Element c : prefix[k]) w += (c != 0);
                ++hist[w];
                // odometer on x_1..x_{k-1}, last coordinate fastest
                std::size_t j = k;
                while (j-- > 1) {
                    if (++x[j] < q) break;
                    x[j] = 0;
                }
                dirty = j;
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }

    WeightDistribution wd;
    wd.q = f.q();
    wd.k = k;
    wd.n = n;
    for (std::size_t w = 0; w <= n; ++w) {
        std::uint64_t c = 0;
        for (const auto& h : partial) c += h[w];
        if (c) wd.counts[w] = c;
    }
    return wd;
}

std::vector<Vector> all_vectors(std::size_t k, const FieldPtr& field) {
    const std::uint64_t q = field->q();
    const std::uint64_t total = checked_power(q, k, max_weight_enumeration);
    std::vector<Vector> out;
    out.reserve(total);
    std::vector<Element> x(k, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        out.emplace_back(field, x);
        std::size_t j = k;
        while (j-- > 0) {
            if (++x[j] < q) break;
            x[j] = 0;
        }
    }
    return out;
}

}  // namespace mincodes
