#include <doctest.h>

#include <algorithm>

#include "mseg/fuzz.hpp"
#include "mseg/generic.hpp"

#include "oracles.hpp"

using namespace mseg;

namespace {

LineTable two_lines() {
    LineTable t;
    t.add(CuspidalLine{"a", 1, "a", 1});
    t.add(CuspidalLine{"b", 1, "b", 1});
    validate_line_table(t);
    return t;
}

}  // namespace

TEST_CASE("linked-segment criterion") {
    const LineTable t = two_lines();

    SUBCASE("a single segment has no linked pair") {
        CHECK(is_generic(Multisegment{t, {st(2, "a")}}).generic);
    }
    SUBCASE("unit twist between unit lengths is a link with d = 1") {
        const Multisegment pi{t, {st(1, "a", 1), st(1, "a", 0)}};
        const GenericityResult res = is_generic(pi);
        REQUIRE_FALSE(res.generic);
        REQUIRE(res.witness.has_value());
        CHECK(pi.segments[res.witness->i].exponent() == HalfInt(1));
        CHECK(pi.segments[res.witness->j].exponent() == HalfInt(0));
        CHECK(res.witness->d == 1);
    }
    SUBCASE("distinct lines never link") {
        CHECK(is_generic(Multisegment{t, {st(1, "a"), st(1, "b")}}).generic);
    }
    SUBCASE("the witness satisfies both link conditions") {
        fuzz::Rng rng(3001);
        const fuzz::GeneratorOptions opt{6, 5, false, false};
        for (int k = 0; k < 500; ++k) {
            const Multisegment pi = fuzz::random_multisegment(rng, opt);
            const GenericityResult res = is_generic(pi);
            if (res.generic) continue;
            const Segment& a = pi.segments[res.witness->i];
            const Segment& b = pi.segments[res.witness->j];
            CHECK(res.witness->i != res.witness->j);
            CHECK(a.line() == b.line());
            CHECK(res.witness->d >= std::max<std::int64_t>(1, a.length - b.length + 1));
            CHECK(res.witness->d <= a.length);
            CHECK(a.exponent() ==
                  b.exponent() + HalfInt(res.witness->d) + HalfInt::halves(b.length - a.length));
        }
    }
}

TEST_CASE("genericity invariances") {
    fuzz::Rng rng(3002);
    const fuzz::GeneratorOptions opt{6, 5, false, false};
    for (int k = 0; k < 500; ++k) {
        const Multisegment pi = fuzz::random_multisegment(rng, opt);
        const bool verdict = is_generic(pi).generic;

        CHECK(verdict == oracle::exhaustive_is_generic(pi).generic);

        Multisegment reordered = pi;
        std::reverse(reordered.segments.begin(), reordered.segments.end());
        if (reordered.segments.size() > 2)
            std::swap(reordered.segments[0], reordered.segments[reordered.segments.size() / 2]);
        CHECK(is_generic(reordered).generic == verdict);

        Multisegment twisted = pi;
        const HalfInt shift = HalfInt::halves(rng.range(-3, 3));
        for (Segment& seg : twisted.segments)
            seg.cuspidal.exponent += shift;
        CHECK(is_generic(twisted).generic == verdict);

        CHECK(is_generic(sigma(pi)).generic == verdict);
    }
}
