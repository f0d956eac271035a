#include <doctest.h>

#include <random>

#include "mincodes/error.hpp"
#include "mincodes/gf.hpp"

using namespace mincodes;

namespace {

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected mincodes::Error");
    return Errc::malformed_header;
}

// First monic polynomial of degree m over GF(p) (coefficients compared from
// the constant term upward) with no root; valid as an irreducibility test
// for m <= 3.
std::vector<unsigned> first_rootless(unsigned p, unsigned m) {
    std::vector<unsigned> c(m, 0);
    for (;;) {
        bool has_root = false;
        for (unsigned x = 0; x < p && !has_root; ++x) {
            unsigned long v = 1;  // leading term
            for (unsigned i = m; i-- > 0;) v = (v * x + c[i]) % p;
            has_root = v == 0;
        }
        if (!has_root) {
            c.push_back(1);
            return c;
        }
        std::size_t i = m;
        while (i-- > 0) {
            if (++c[i] < p) break;
            c[i] = 0;
        }
    }
}

}  // namespace

TEST_CASE("make_field builds the canonical modulus") {
    CHECK(make_field(2, 1)->modulus().empty());
    CHECK(make_field(2, 1)->q() == 2);
    CHECK(make_field(2, 2)->modulus() == std::vector<unsigned>{1, 1, 1});
    CHECK(make_field(3, 2)->modulus() == std::vector<unsigned>{1, 0, 1});
    CHECK(make_field(3, 2)->modulus() == first_rootless(3, 2));
    for (auto [p, m] : {std::pair{2u, 3u}, {3u, 3u}, {5u, 2u}, {7u, 2u}, {5u, 3u}, {2u, 2u}})
        CHECK(make_field(p, m)->modulus() == first_rootless(p, m));
    // constant term compared first: x^3 + x^2 + 1 precedes x^3 + x + 1
    CHECK(make_field(2, 3)->modulus() == std::vector<unsigned>{1, 0, 1, 1});
}

TEST_CASE("make_field is deterministic and rejects bad parameters") {
    CHECK(make_field(3, 2) == make_field(3, 2));
    CHECK(make_field(2, 4)->modulus() == make_field(2, 4)->modulus());
    CHECK(code_of([] { make_field(4, 1); }) == Errc::non_prime_characteristic);
    CHECK(code_of([] { make_field(1, 1); }) == Errc::non_prime_characteristic);
    CHECK(code_of([] { make_field(2, 17); }) == Errc::field_too_large);
    CHECK(code_of([] { make_field(3, 11); }) == Errc::field_too_large);
    CHECK(make_field(2, 16)->q() == 65536);
    CHECK_FALSE(make_field(2, 16)->tabulated());
    CHECK(make_field(2, 8)->tabulated());
}

TEST_CASE("named arithmetic examples") {
    const auto gf5 = make_field(5, 1);
    CHECK(gf5->add(3, 4) == 2);
    CHECK(gf5->mul(3, 4) == 2);
    CHECK(gf5->inv(3) == 2);
    CHECK(gf5->nonzero() == std::vector<Element>{1, 2, 3, 4});

    const auto gf2 = make_field(2, 1);
    CHECK(gf2->inv(1) == 1);
    CHECK(gf2->nonzero() == std::vector<Element>{1});

    const auto gf4 = make_field(2, 2);
    CHECK(gf4->add(2, 2) == 0);
    CHECK(gf4->mul(2, 2) == 3);
    CHECK(gf4->inv(2) == 3);
    CHECK(gf4->nonzero() == std::vector<Element>{1, 2, 3});

    const auto gf9 = make_field(3, 2);
    CHECK(gf9->add(3, 4) == 7);
    CHECK(gf9->mul(3, 3) == 2);

    CHECK(code_of([&] { gf5->inv(0); }) == Errc::division_by_zero);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        const auto f = field_of_order(q);
        CAPTURE(q);
        bool ok = true;
        for (Element a = 0; a < q; ++a) {
            ok &= f->add(a, 0) == a && f->mul(a, 1) == a && f->add(a, f->neg(a)) == 0;
            if (a) ok &= f->mul(a, f->inv(a)) == 1;
            for (Element b = 0; b < q; ++b) {
                ok &= f->add(a, b) == f->add(b, a) && f->mul(a, b) == f->mul(b, a);
                ok &= f->add(a, b) == f->add_direct(a, b) && f->mul(a, b) == f->mul_direct(a, b);
                if (a && b) ok &= f->mul(a, b) != 0;
                for (Element c = 0; c < q; ++c) {
                    ok &= f->add(f->add(a, b), c) == f->add(a, f->add(b, c));
                    ok &= f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c));
                    ok &= f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c));
                }
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("Frobenius map is additive") {
    for (unsigned q : {4u, 8u, 9u, 16u, 25u, 27u}) {
        const auto f = field_of_order(q);
        bool ok = true;
        for (Element a = 0; a < q; ++a)
            for (Element b = 0; b < q; ++b)
                ok &= f->pow(f->add(a, b), f->p()) == f->add(f->pow(a, f->p()), f->pow(b, f->p()));
        CHECK(ok);
    }
}

TEST_CASE("untabulated fields still invert and multiply consistently") {
    const auto f = make_field(2, 16);
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Element a = 1 + rng() % 65535;
        const Element b = rng() % 65536;
        CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK(f->mul(f->add(a, b), a) == f->add(f->mul(a, a), f->mul(b, a)));
    }
    const auto big_prime = make_field(65521, 1);
    CHECK(big_prime->mul(65520, 65520) == 1);
    CHECK(big_prime->inv(2) == 32761);
}

TEST_CASE("field names and parsing") {
    CHECK(make_field(3, 2)->name() == "3^2");
    CHECK(make_field(5, 1)->name() == "5");
    CHECK(parse_field("3^2") == make_field(3, 2));
    CHECK(parse_field("4") == make_field(2, 2));
    CHECK(parse_field("7")->q() == 7);
    CHECK(code_of([] { parse_field("6"); }) == Errc::invalid_field_order);
    CHECK(code_of([] { parse_field("x"); }) == Errc::invalid_field_order);
    CHECK(code_of([] { parse_field("9^1"); }) == Errc::non_prime_characteristic);
}
