#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace mseg {

// Exact arithmetic on (1/2)Z. Every exponent occurring in the segment
// calculus is a half-integer, so storing twice the value keeps all sums,
// differences and comparisons exact and total.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(std::int64_t n) : twice_(2 * n) {}

    // The value h/2.
    static constexpr HalfInt halves(std::int64_t h) {
        HalfInt x;
        x.twice_ = h;
        return x;
    }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    // pre: is_integer()
    constexpr std::int64_t integer_value() const { return twice_ / 2; }

    constexpr std::int64_t numerator() const { return is_integer() ? twice_ / 2 : twice_; }
    constexpr std::int64_t denominator() const { return is_integer() ? 1 : 2; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return halves(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return halves(a.twice_ - b.twice_); }
    constexpr HalfInt operator-() const { return halves(-twice_); }
    friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return halves(k * a.twice_); }

    HalfInt& operator+=(HalfInt o) {
        twice_ += o.twice_;
        return *this;
    }
    HalfInt& operator-=(HalfInt o) {
        twice_ -= o.twice_;
        return *this;
    }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    // "3", "-2", "1/2", "-3/2"
    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    std::int64_t twice_ = 0;
};

}  // namespace mseg
