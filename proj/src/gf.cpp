#include "mincodes/gf.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <utility>

#include "mincodes/error.hpp"

namespace mincodes {

namespace {

std::vector<unsigned> digits_of(Element a, unsigned p, unsigned m) {
    std::vector<unsigned> d(m);
    for (unsigned i = 0; i < m; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

Element pack(const std::vector<unsigned>& d, unsigned p, unsigned m) {
    Element v = 0;
    for (unsigned i = m; i-- > 0;) v = v * p + d[i];
    return v;
}

// Remainder of f modulo the monic g, both over GF(p), coefficients from the
// constant term upward.
std::vector<unsigned> poly_mod(std::vector<unsigned> f, const std::vector<unsigned>& g, unsigned p) {
    const std::size_t dg = g.size() - 1;
    for (std::size_t i = f.size(); i-- > dg;) {
        const std::uint64_t t = f[i];
        if (t == 0) continue;
        for (std::size_t j = 0; j <= dg; ++j) {
            const std::uint64_t sub = t * g[j] % p;
            f[i - dg + j] = static_cast<unsigned>((f[i - dg + j] + p - sub) % p);
        }
    }
    f.resize(dg);
    return f;
}

std::vector<unsigned> find_modulus(unsigned p, unsigned m) {
    if (m == 1) return {};
    std::vector<unsigned> coeffs(m, 0);
    for (;;) {
        std::vector<unsigned> f = coeffs;
        f.push_back(1);
        if (is_irreducible(f, p)) return f;
        // Lexicographic successor: c0 is the most significant position.
        std::size_t i = m;
        while (i-- > 0) {
            if (++coeffs[i] < p) break;
            coeffs[i] = 0;
            if (i == 0) throw std::logic_error("no irreducible polynomial found");
        }
    }
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(const std::vector<unsigned>& monic, unsigned p) {
    const std::size_t deg = monic.size() - 1;
    if (deg <= 1) return true;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::vector<unsigned> g(d + 1, 0);
        g[d] = 1;
        for (;;) {
            const auto r = poly_mod(monic, g, p);
            bool zero = true;
            for (unsigned c : r) zero = zero && c == 0;
            if (zero) return false;
            std::size_t i = 0;
            while (i < d && ++g[i] == p) g[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

Field::Field(unsigned p, unsigned m) : p_(p), m_(m), q_(1) {
    for (unsigned i = 0; i < m; ++i) q_ *= p;
    modulus_ = find_modulus(p, m);

    neg_table_.resize(q_);
    for (Element a = 0; a < q_; ++a) {
        auto d = digits_of(a, p_, m_);
        for (auto& c : d) c = (p_ - c) % p_;
        neg_table_[a] = pack(d, p_, m_);
    }

    if (q_ <= max_tabulated_order) {
        add_table_.resize(std::size_t{q_} * q_);
        mul_table_.resize(std::size_t{q_} * q_);
        inv_table_.assign(q_, 0);
        for (Element a = 0; a < q_; ++a) {
            for (Element b = 0; b < q_; ++b) {
                add_table_[a * q_ + b] = static_cast<std::uint8_t>(add_direct(a, b));
                const Element prod = mul_direct(a, b);
                mul_table_[a * q_ + b] = static_cast<std::uint8_t>(prod);
                if (prod == 1) inv_table_[a] = b;
            }
        }
    }
}

Element Field::add_direct(Element a, Element b) const {
    if (m_ == 1) return (a + b) % p_;
    Element out = 0;
    Element scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

Element Field::mul_direct(Element a, Element b) const {
    if (m_ == 1) return static_cast<Element>(std::uint64_t{a} * b % p_);
    const auto da = digits_of(a, p_, m_);
    const auto db = digits_of(b, p_, m_);
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
    // x^m = -(c0 + c1 x + ... + c_{m-1} x^{m-1})
    for (std::size_t d = prod.size(); d-- > m_;) {
        const std::uint64_t t = prod[d];
        if (t == 0) continue;
        for (unsigned j = 0; j < m_; ++j)
            prod[d - m_ + j] = (prod[d - m_ + j] + p_ - t * modulus_[j] % p_) % p_;
    }
    std::vector<unsigned> out(m_);
    for (unsigned i = 0; i < m_; ++i) out[i] = static_cast<unsigned>(prod[i]);
    return pack(out, p_, m_);
}

Element Field::add(Element a, Element b) const {
    if (tabulated()) return add_table_[a * q_ + b];
    return add_direct(a, b);
}

Element Field::neg(Element a) const { return neg_table_[a]; }

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const {
    if (tabulated()) return mul_table_[a * q_ + b];
    return mul_direct(a, b);
}

Element Field::pow(Element a, std::uint64_t e) const {
    Element result = 1;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Element Field::inv(Element a) const {
    if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero in GF(" + name() + ")");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

std::vector<Element> Field::nonzero() const {
    std::vector<Element> out;
    out.reserve(q_ - 1);
    for (Element a = 1; a < q_; ++a) out.push_back(a);
    return out;
}

std::string Field::name() const {
    if (m_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(m_);
}

FieldPtr make_field(unsigned p, unsigned m) {
    if (!is_prime(p))
        throw Error(Errc::non_prime_characteristic, "characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw Error(Errc::invalid_field_order, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > max_field_order)
            throw Error(Errc::field_too_large,
                        "field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^16");
    }

    static std::mutex mutex;
    static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{p, m}];
    if (!slot) slot = FieldPtr(new Field(p, m));
    return slot;
}

FieldPtr field_of_order(std::uint64_t q) {
    if (q < 2) throw Error(Errc::invalid_field_order, "field order must be a prime power, got " + std::to_string(q));
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned m = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1)
        throw Error(Errc::invalid_field_order, std::to_string(q) + " is not a prime power");
    if (q > max_field_order) throw Error(Errc::field_too_large, "field order " + std::to_string(q) + " exceeds 2^16");
    return make_field(static_cast<unsigned>(p), m);
}

FieldPtr parse_field(std::string_view text) {
    auto parse_uint = [&](std::string_view s) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw Error(Errc::invalid_field_order, "bad field specification '" + std::string(text) + "'");
        return v;
    };
    const auto caret = text.find('^');
    if (caret == std::string_view::npos) return field_of_order(parse_uint(text));
    const auto p = parse_uint(text.substr(0, caret));
    const auto m = parse_uint(text.substr(caret + 1));
    if (p > max_field_order || m > 64)
        throw Error(Errc::field_too_large, "field order " + std::string(text) + " exceeds 2^16");
    return make_field(static_cast<unsigned>(p), static_cast<unsigned>(m));
}

}  // namespace mincodes
