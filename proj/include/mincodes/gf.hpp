#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mincodes {

// An element of GF(p^m). The polynomial residue c0 + c1*a + ... + c_{m-1}*a^{m-1}
// is packed as c0 + c1*p + ... + c_{m-1}*p^{m-1}, so 0 and 1 encode the
// additive and multiplicative identities.
using Element = std::uint32_t;

inline constexpr std::uint32_t max_field_order = 1u << 16;
inline constexpr std::uint32_t max_tabulated_order = 256;

/// The finite field GF(p^m), built over the lexicographically smallest monic
/// irreducible polynomial of degree m (coefficients compared from the
/// constant term upward). Immutable once constructed.
///
/// Fields of order up to 256 carry full addition/multiplication tables; larger
/// fields compute residues on the fly.
class Field {
  public:
    unsigned p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }

    /// Coefficients c0..cm of the monic modulus (cm = 1); empty when m == 1.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

    bool tabulated() const noexcept { return !mul_table_.empty(); }
    bool valid(Element a) const noexcept { return a < q_; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;  // throws DivisionByZero on 0
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t e) const;

    /// All q-1 nonzero elements in increasing encoding order.
    std::vector<Element> nonzero() const;

    /// "p" for prime fields, "p^m" otherwise.
    std::string name() const;

    // Untabulated arithmetic, exposed so the tables can be cross-checked.
    Element add_direct(Element a, Element b) const;
    Element mul_direct(Element a, Element b) const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p_ == b.p_ && a.m_ == b.m_;
    }

  private:
    Field(unsigned p, unsigned m);
    friend std::shared_ptr<const Field> make_field(unsigned p, unsigned m);

    unsigned p_;
    unsigned m_;
    std::uint32_t q_;
    std::vector<unsigned> modulus_;
    std::vector<std::uint8_t> add_table_;
    std::vector<std::uint8_t> mul_table_;
    std::vector<Element> neg_table_;
    std::vector<Element> inv_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n) noexcept;

/// Canonical GF(p^m). Rejects non-prime p (NonPrimeCharacteristic) and
/// p^m > 2^16 (FieldTooLarge). Repeated calls return the same instance.
FieldPtr make_field(unsigned p, unsigned m);

/// GF(q) for a prime power q given as an integer.
FieldPtr field_of_order(std::uint64_t q);

/// Parses "p^m" or a plain prime power such as "4".
FieldPtr parse_field(std::string_view text);

/// Monic irreducibility over GF(p); coefficients from constant term upward.
bool is_irreducible(const std::vector<unsigned>& monic, unsigned p);

}  // namespace mincodes
