#include <doctest.h>

#include <random>

#include "mincodes/error.hpp"
#include "mincodes/linalg.hpp"

using namespace mincodes;

namespace {

Vector vec(const FieldPtr& f, std::vector<Element> c) { return Vector(f, std::move(c)); }

Vector random_vector(std::mt19937& rng, const FieldPtr& f, std::size_t k) {
    std::vector<Element> c(k);
    for (auto& e : c) e = rng() % f->q();
    return Vector(f, std::move(c));
}

}  // namespace

TEST_CASE("inner products") {
    const auto gf2 = make_field(2, 1), gf3 = make_field(3, 1), gf4 = make_field(2, 2);
    CHECK(inner_product(vec(gf2, {1, 1, 0}), vec(gf2, {0, 1, 1})) == 1);
    CHECK(inner_product(vec(gf3, {1, 2}), vec(gf3, {2, 2})) == 0);
    CHECK(inner_product(vec(gf4, {2, 1}), vec(gf4, {2, 0})) == 3);
    CHECK_THROWS_AS(inner_product(vec(gf2, {1, 1}), vec(gf2, {1, 1, 1})), Error);
    try {
        inner_product(vec(gf2, {1, 1}), vec(gf3, {1, 1}));
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::field_mismatch);
    }
}

TEST_CASE("rank and span") {
    const auto gf2 = make_field(2, 1), gf3 = make_field(3, 1);
    const std::vector<Vector> a{vec(gf2, {1, 0}), vec(gf2, {0, 1}), vec(gf2, {1, 1})};
    CHECK(rank(a) == 2);
    const std::vector<Vector> b{vec(gf3, {1, 2}), vec(gf3, {2, 1})};
    CHECK(rank(b) == 1);
    const std::vector<Vector> c{vec(gf2, {1, 0, 1}), vec(gf2, {0, 1, 1}), vec(gf2, {1, 1, 0})};
    CHECK(rank(c) == 2);

    const std::vector<Vector> line{vec(gf2, {1, 1})};
    const Subspace s = span(line);
    CHECK(s.dim() == 1);
    CHECK(s.basis() == line);

    CHECK(span(gf2, 3, std::vector<Vector>{}).dim() == 0);

    const std::vector<Vector> d{vec(gf3, {1, 0, 2}), vec(gf3, {0, 1, 1}), vec(gf3, {1, 1, 0})};
    const Subspace sd = span(d);
    CHECK(sd.dim() == 2);
    for (const auto& v : d) CHECK(sd.contains(v));
    CHECK_FALSE(sd.contains(vec(gf3, {0, 0, 1})));
}

TEST_CASE("perp and hyperplanes") {
    const auto gf2 = make_field(2, 1), gf3 = make_field(3, 1), gf5 = make_field(5, 1);
    const std::vector<Vector> l2{vec(gf2, {1, 1})};
    CHECK(perp(span(l2)) == span(l2));
    CHECK(perp(Subspace::zero(gf2, 3)) == Subspace::full(gf2, 3));

    const std::vector<Vector> l3{vec(gf3, {1, 2})};
    const std::vector<Vector> l3p{vec(gf3, {1, 1})};
    CHECK(perp(span(l3)) == span(l3p));

    CHECK(hyperplane(vec(gf2, {1, 1})) == span(l2));
    const std::vector<Vector> e12{Vector::unit(gf2, 3, 0), Vector::unit(gf2, 3, 1)};
    CHECK(hyperplane(vec(gf2, {0, 0, 1})) == span(e12));
    const std::vector<Vector> l5{vec(gf5, {1, 4})};
    CHECK(hyperplane(vec(gf5, {1, 1})) == span(l5));
    CHECK_THROWS_AS(hyperplane(Vector::zero(gf2, 2)), Error);
}

TEST_CASE("projective points") {
    const auto gf2 = make_field(2, 1), gf3 = make_field(3, 1), gf4 = make_field(2, 2);
    CHECK(projective_points(2, gf2) ==
          std::vector<Vector>{vec(gf2, {0, 1}), vec(gf2, {1, 0}), vec(gf2, {1, 1})});
    CHECK(projective_points(2, gf3) ==
          std::vector<Vector>{vec(gf3, {0, 1}), vec(gf3, {1, 0}), vec(gf3, {1, 1}), vec(gf3, {1, 2})});
    CHECK(projective_points(2, gf4).size() == 5);

    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const auto f = field_of_order(q);
        for (std::size_t k = 1; k <= 4; ++k) {
            const ProjectiveSpace ps(f, k);
            const auto pts = ps.points();
            CHECK(pts.size() == projective_count(k, q));
            CHECK(std::is_sorted(pts.begin(), pts.end()));
            bool ok = true;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                ok &= ps.index_of(pts[i]) == i;
                for (Element a = 2; a < q; ++a) ok &= ps.index_of(pts[i].scaled(a)) == i;
                std::size_t lead = 0;
                while (pts[i][lead] == 0) ++lead;
                ok &= pts[i][lead] == 1;
            }
            CHECK(ok);
        }
    }
}

TEST_CASE("subspace properties on random inputs") {
    std::mt19937 rng(20240611);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const auto f = field_of_order(q);
        for (std::size_t k = 1; k <= 5; ++k) {
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<Vector> vs;
                const std::size_t m = rng() % (k + 2);
                for (std::size_t i = 0; i < m; ++i) vs.push_back(random_vector(rng, f, k));
                const Subspace s = span(f, k, vs);
                const Subspace sp = perp(s);
                CHECK(s.dim() + sp.dim() == k);
                CHECK(perp(sp) == s);
                CHECK(span(f, k, s.basis()) == s);
                for (const auto& b : sp.basis())
                    for (const auto& v : vs) CHECK(inner_product(b, v) == 0);
                // duplicating every vector leaves the rank unchanged
                std::vector<Vector> dup = vs;
                dup.insert(dup.end(), vs.begin(), vs.end());
                CHECK(span(f, k, dup).dim() == s.dim());
            }
        }
    }
}

TEST_CASE("hyperplane equals perp of the line, exhaustively") {
    for (unsigned q : {2u, 3u, 4u}) {
        const auto f = field_of_order(q);
        for (std::size_t k = 1; k <= 4; ++k)
            for (const auto& y : projective_points(k, f)) {
                const std::vector<Vector> line{y};
                const Subspace h = hyperplane(y);
                CHECK(h == perp(span(line)));
                CHECK(h.dim() == k - 1);
            }
    }
}

TEST_CASE("echelon basis insert and pop") {
    const auto f = make_field(3, 1);
    EchelonBasis eb(*f, 3);
    const Element a[] = {1, 2, 0}, b[] = {2, 1, 0}, c[] = {0, 1, 1};
    CHECK(eb.insert(a));
    CHECK_FALSE(eb.insert(b));
    CHECK(eb.insert(c));
    CHECK(eb.dim() == 2);
    CHECK(eb.contains(b));
    eb.pop();
    CHECK(eb.dim() == 1);
    CHECK_FALSE(eb.contains(c));
    CHECK(eb.insert(c));
}
