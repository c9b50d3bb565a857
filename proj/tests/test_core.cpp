#include <doctest.h>

#include <algorithm>
#include <functional>

#include "mseg/core.hpp"
#include "mseg/fuzz.hpp"

using namespace mseg;

namespace {

LineTable table_abc() {
    LineTable t;
    t.add(CuspidalLine{"a", 2, "a", 1});
    t.add(CuspidalLine{"b", 1, "c", std::nullopt});
    t.add(CuspidalLine{"c", 1, "b", std::nullopt});
    t.add(CuspidalLine{"s", 1, "s", -1});
    validate_line_table(t);
    return t;
}

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return errc::cross_check_failure;
}

}  // namespace

TEST_CASE("half-integers are exact") {
    CHECK(HalfInt(2).str() == "2");
    CHECK(HalfInt::halves(1).str() == "1/2");
    CHECK(HalfInt::halves(-3).str() == "-3/2");
    CHECK(HalfInt::halves(4) == HalfInt(2));
    CHECK((HalfInt(1) - HalfInt::halves(1)) == HalfInt::halves(1));
    CHECK((-HalfInt::halves(1)).twice() == -1);
    CHECK(3 * HalfInt::halves(1) == HalfInt::halves(3));
    CHECK(HalfInt::halves(3).numerator() == 3);
    CHECK(HalfInt::halves(3).denominator() == 2);
    CHECK(HalfInt(5).denominator() == 1);
    CHECK(HalfInt::halves(-1) < HalfInt(0));
    CHECK_FALSE(HalfInt::halves(1).is_integer());
    CHECK(HalfInt::halves(6).integer_value() == 3);
}

TEST_CASE("line table validation") {
    SUBCASE("self-partnered with sign is accepted") {
        LineTable t;
        t.add(CuspidalLine{"a", 2, "a", 1});
        CHECK_NOTHROW(validate_line_table(t));
    }
    SUBCASE("undeclared partner") {
        LineTable t;
        t.add(CuspidalLine{"b", 1, "c", std::nullopt});
        CHECK(code_of([&] { validate_line_table(t); }) == errc::dangling_partner);
    }
    SUBCASE("sign on a paired line") {
        LineTable t;
        t.add(CuspidalLine{"b", 1, "c", 1});
        t.add(CuspidalLine{"c", 1, "b", std::nullopt});
        CHECK(code_of([&] { validate_line_table(t); }) == errc::sign_on_paired_line);
    }
    SUBCASE("asymmetric partnering") {
        LineTable t;
        t.add(CuspidalLine{"b", 1, "c", std::nullopt});
        t.add(CuspidalLine{"c", 1, "c", 1});
        CHECK(code_of([&] { validate_line_table(t); }) == errc::asymmetric_partner);
    }
    SUBCASE("missing sign on a self-dual line") {
        LineTable t;
        t.add(CuspidalLine{"a", 1, "a", std::nullopt});
        CHECK(code_of([&] { validate_line_table(t); }) == errc::missing_sign_on_self_dual_line);
    }
    SUBCASE("partnered lines must have equal degree") {
        LineTable t;
        t.add(CuspidalLine{"b", 1, "c", std::nullopt});
        t.add(CuspidalLine{"c", 2, "b", std::nullopt});
        CHECK(code_of([&] { validate_line_table(t); }) == errc::degree_mismatch);
    }
    SUBCASE("duplicate declaration") {
        LineTable t;
        t.add(CuspidalLine{"a", 1, "a", 1});
        CHECK(code_of([&] { t.add(CuspidalLine{"a", 2, "a", 1}); }) == errc::duplicate_name);
    }
}

TEST_CASE("the involution negates exponents and swaps partners") {
    const LineTable t = table_abc();
    CHECK(sigma(st(3, "a", HalfInt::halves(1)), t) == st(3, "a", HalfInt::halves(-1)));
    CHECK(sigma(st(2, "b"), t) == st(2, "c"));

    SUBCASE("involution property over random segments") {
        fuzz::Rng rng(20240901);
        for (int k = 0; k < 1000; ++k) {
            const LineTable table = fuzz::random_line_table(rng);
            const Segment seg = fuzz::random_segment(rng, table, 5);
            CHECK(sigma(sigma(seg, table), table) == seg);
            CHECK(sigma(seg, table).length == seg.length);
            CHECK(sigma(seg, table).ambient_degree(table) == seg.ambient_degree(table));
            CHECK(sigma(seg, table).exponent() == -seg.exponent());
        }
    }
}

TEST_CASE("segment isomorphism is equality of data") {
    CHECK(is_isomorphic(st(2, "a"), st(2, "a")));
    CHECK_FALSE(is_isomorphic(st(2, "a"), st(2, "a", 1)));
    CHECK_FALSE(is_isomorphic(st(2, "a"), st(1, "a")));
}

TEST_CASE("sign of the invariant pairing") {
    const LineTable t = table_abc();
    CHECK(segment_sign(st(1, "a"), t) == 1);
    CHECK(segment_sign(st(2, "a"), t) == -1);
    CHECK(segment_sign(st(1, "a", HalfInt::halves(1)), t) == std::nullopt);
    CHECK(segment_sign(st(1, "b"), t) == std::nullopt);
    CHECK(segment_sign(st(1, "s"), t) == -1);
    CHECK(segment_sign(st(2, "s"), t) == 1);

    SUBCASE("sign agrees across the involution and flips with length parity") {
        fuzz::Rng rng(77);
        for (int k = 0; k < 500; ++k) {
            const LineTable table = fuzz::random_line_table(rng);
            const Segment seg = fuzz::random_segment(rng, table, 5);
            const auto sign = segment_sign(seg, table);
            CHECK(segment_sign(sigma(seg, table), table) == sign);
            if (sign) {
                const Segment bumped = st(seg.length + 1, seg.line(), seg.exponent());
                CHECK(segment_sign(bumped, table) == -*sign);
            }
        }
    }
}

TEST_CASE("langlands sort") {
    const LineTable t = table_abc();
    SUBCASE("descending slope order") {
        const Multisegment pi{t, {st(1, "a", -1), st(1, "a", 1)}};
        const std::vector<Segment> want = {st(1, "a", 1), st(1, "a", -1)};
        CHECK(langlands_sort(pi) == want);
    }
    SUBCASE("singleton") {
        const Multisegment pi{t, {st(2, "a")}};
        CHECK(langlands_sort(pi) == pi.segments);
    }
    SUBCASE("slope ties break by line name, then longer first") {
        const Multisegment pi{t, {st(1, "b"), st(1, "a"), st(3, "a")}};
        const std::vector<Segment> want = {st(3, "a"), st(1, "a"), st(1, "b")};
        CHECK(langlands_sort(pi) == want);
    }
    SUBCASE("output is an idempotent permutation of the input") {
        fuzz::Rng rng(11);
        for (int k = 0; k < 200; ++k) {
            Multisegment pi{fuzz::random_line_table(rng), {}};
            const std::int64_t r = rng.range(1, 6);
            for (std::int64_t s = 0; s < r; ++s)
                pi.segments.push_back(fuzz::random_segment(rng, pi.table, 4));
            const std::vector<Segment> sorted = langlands_sort(pi);
            const Multisegment again{pi.table, sorted};
            CHECK(langlands_sort(again) == sorted);
            std::vector<Segment> x = pi.segments;
            std::vector<Segment> y = sorted;
            std::sort(x.begin(), x.end());
            std::sort(y.begin(), y.end());
            CHECK(x == y);
        }
    }
}

TEST_CASE("multisegment validation") {
    const LineTable t = table_abc();
    Multisegment pi{t, {st(2, "z")}};
    CHECK_THROWS_AS(validate_multisegment(pi), Error);
    pi.segments = {st(2, "a")};
    CHECK_NOTHROW(validate_multisegment(pi));
    CHECK(pi.total_degree() == 4);
}
