#include <doctest.h>

#include <random>

#include "mincodes/codes.hpp"
#include "mincodes/constructions.hpp"
#include "mincodes/corpus.hpp"
#include "mincodes/error.hpp"
#include "oracles.hpp"

using namespace mincodes;

namespace {

DefiningSet make(const FieldPtr& f, std::size_t k, std::vector<std::vector<Element>> cols) {
    std::vector<Vector> vs;
    for (auto& c : cols) vs.emplace_back(f, std::move(c));
    return DefiningSet(f, k, std::move(vs));
}

Codeword cw(std::vector<Element> c) { return Codeword{std::move(c), std::nullopt}; }

}  // namespace

TEST_CASE("validate_code") {
    const auto gf2 = make_field(2, 1);
    CHECK(validate_code(make(gf2, 2, {{1, 0}, {0, 1}, {1, 1}})).rank == 2);
    try {
        validate_code(make(gf2, 2, {{1, 0}, {1, 0}}));
        FAIL("expected RankDeficient");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::rank_deficient);
        CHECK(std::string(e.what()).find("RankDeficient(1)") != std::string::npos);
    }
    const auto full = full_space(2, gf2);
    CHECK(validate_code(full).inert_columns == 1);
}

TEST_CASE("encode") {
    const auto gf2 = make_field(2, 1), gf3 = make_field(3, 1);
    const auto d = make(gf2, 2, {{1, 0}, {0, 1}, {1, 1}});
    CHECK(encode(Vector::zero(gf2, 2), d).weight() == 0);
    CHECK(encode(Vector(gf2, {1, 0}), d).coords == std::vector<Element>{1, 0, 1});
    const auto d3 = make(gf3, 2, {{1, 0}, {0, 1}, {1, 1}, {1, 2}});
    CHECK(encode(Vector(gf3, {1, 2}), d3).coords == std::vector<Element>{1, 2, 0, 2});
    CHECK_THROWS_AS(encode(Vector(gf3, {1, 2, 0}), d3), Error);
}

TEST_CASE("encode is linear") {
    std::mt19937_64 rng(99);
    for (unsigned q : {2u, 3u, 4u}) {
        const auto f = field_of_order(q);
        for (std::size_t k = 1; k <= 3; ++k) {
            const auto d = random_defining_set(rng, f, k, k + 3);
            const auto msgs = all_vectors(k, f);
            bool ok = true;
            for (const auto& x : msgs)
                for (const auto& y : msgs) {
                    const auto sum = encode(x + y, d).coords;
                    const auto cx = encode(x, d).coords, cy = encode(y, d).coords;
                    for (std::size_t i = 0; i < sum.size(); ++i) ok &= sum[i] == f->add(cx[i], cy[i]);
                }
            for (const auto& x : msgs)
                for (Element a = 0; a < q; ++a) {
                    const auto lhs = encode(x.scaled(a), d).coords;
                    const auto cx = encode(x, d).coords;
                    for (std::size_t i = 0; i < lhs.size(); ++i) ok &= lhs[i] == f->mul(a, cx[i]);
                }
            CHECK(ok);
        }
    }
}

TEST_CASE("support and covering") {
    CHECK(support(cw({0, 0, 0})).empty());
    CHECK(support(cw({1, 0, 1})) == std::vector<std::size_t>{0, 2});
    CHECK(support(cw({2, 0, 3})) == std::vector<std::size_t>{0, 2});

    CHECK_FALSE(covers(cw({1, 0, 1}), cw({1, 1, 0})));
    CHECK(covers(cw({0, 2, 0}), cw({1, 2, 2})));
    CHECK_THROWS_AS(covers(cw({1}), cw({1, 0})), Error);

    const auto gf3 = make_field(3, 1);
    const Codeword v = cw({1, 2, 0, 2});
    for (Element a = 0; a < 3; ++a) {
        Codeword av = v;
        for (auto& c : av.coords) c = gf3->mul(a, c);
        CHECK(covers(av, v));
    }
}

TEST_CASE("covering relation properties on random pairs") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        Codeword u, v, w;
        for (std::size_t i = 0; i < n; ++i) {
            u.coords.push_back(rng() % 3);
            v.coords.push_back(rng() % 3);
            w.coords.push_back(rng() % 3);
        }
        CHECK(covers(u, v) == covers_by_zero_sets(u, v));
        CHECK(covers(u, u));
        if (covers(u, v) && covers(v, w)) CHECK(covers(u, w));
        CHECK((covers(u, v) && covers(v, u)) == (support(u) == support(v)));
    }
}

TEST_CASE("weight distributions") {
    const auto gf2 = make_field(2, 1), gf3 = make_field(3, 1);
    const auto simplex = weight_distribution(make(gf2, 2, {{1, 0}, {0, 1}, {1, 1}}));
    CHECK(simplex.counts == std::map<std::size_t, std::uint64_t>{{0, 1}, {2, 3}});
    CHECK(simplex.w_min() == 2);
    CHECK(simplex.w_max() == 2);

    CHECK(weight_distribution(full_space(2, gf2)).counts == std::map<std::size_t, std::uint64_t>{{0, 1}, {2, 3}});
    CHECK(weight_distribution(make(gf3, 2, {{1, 0}, {0, 1}})).counts ==
          std::map<std::size_t, std::uint64_t>{{0, 1}, {1, 4}, {2, 4}});

    try {
        weight_distribution(DefiningSet(make_field(2, 1), 25, {Vector::unit(make_field(2, 1), 25, 0)}));
        FAIL("expected EnumerationTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::enumeration_too_large);
    }
}

TEST_CASE("weight distribution matches direct enumeration and sums to q^k") {
    std::mt19937_64 rng(1234);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const auto f = field_of_order(q);
        for (std::size_t k = 1; k <= 3; ++k) {
            const auto d = random_defining_set(rng, f, k, k + 4);
            std::map<std::size_t, std::uint64_t> expect;
            for (const auto& x : oracle::all_messages(q, k)) {
                std::size_t w = 0;
                for (Element c : oracle::codeword(*f, x, d)) w += c != 0;
                ++expect[w];
            }
            const auto wd = weight_distribution(d);
            CHECK(wd.counts == expect);
            CHECK(wd.total() == static_cast<std::uint64_t>(oracle::all_messages(q, k).size()));
            CHECK(wd.counts.at(0) == 1);
            CHECK(weight_distribution(d, 3).counts == expect);
        }
    }
}
