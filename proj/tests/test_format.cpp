#include <doctest.h>

#include "mincodes/constructions.hpp"
#include "mincodes/error.hpp"
#include "mincodes/format.hpp"

using namespace mincodes;

namespace {

Errc parse_error(const std::string& text) {
    try {
        parse_defining_set(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a parse error");
    return Errc::zero_vector;
}

}  // namespace

TEST_CASE("serialization matches the documented layout") {
    const auto gf2 = make_field(2, 1);
    const DefiningSet d(gf2, 2, {Vector(gf2, {1, 0}), Vector(gf2, {0, 1}), Vector(gf2, {1, 1})});
    CHECK(to_text(d) == "2 2 3\n1 0\n0 1\n1 1\n");
    CHECK(to_text(d, {{"family", "x"}}) == "# family: x\n2 2 3\n1 0\n0 1\n1 1\n");
}

TEST_CASE("parsing") {
    const auto d = parse_defining_set("2 2 3\n1 0\n0 1\n1 1\n");
    CHECK(d.n() == 3);
    CHECK(d.k() == 2);
    const auto g9 = parse_defining_set("3^2 2 4\n1 0\n0 1\n1 8\n1 3\n");
    CHECK(g9.field().q() == 9);
    CHECK(g9.n() == 4);
    CHECK(parse_defining_set("# comment\n\n2 1 1\n1\n").n() == 1);

    CHECK(parse_error("3^2 2 1\n9 0\n") == Errc::bad_element_encoding);
    CHECK(parse_error("2 2 1\n1 x\n") == Errc::bad_element_encoding);
    CHECK(parse_error("2 2\n1 0\n") == Errc::malformed_header);
    CHECK(parse_error("6 2 1\n1 0\n") == Errc::malformed_header);
    CHECK(parse_error("") == Errc::malformed_header);
    CHECK(parse_error("2 2 2\n1 0\n") == Errc::length_mismatch);
    CHECK(parse_error("2 2 1\n1 0 1\n") == Errc::length_mismatch);
    CHECK(parse_error("2 2 1\n1 0\n0 1\n") == Errc::length_mismatch);

    try {
        parse_defining_set("3^2 2 2\n1 0\n0 9\n");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3, column 2") != std::string::npos);
    }
}

TEST_CASE("round trip is byte-exact for every construction") {
    for (unsigned q : {2u, 3u, 4u}) {
        const auto f = field_of_order(q);
        std::vector<DefiningSet> sets{full_space(2, f), d0(3, f), d0(4, f)};
        for (int fam = 1; fam <= 4; ++fam) sets.push_back(d_family(fam, 3, 2, f));
        for (const auto& d : sets) {
            const std::string text = to_text(d);
            const DefiningSet back = parse_defining_set(text);
            CHECK(back == d);
            CHECK(to_text(back) == text);
        }
    }
}
