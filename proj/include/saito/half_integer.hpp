#pragma once

#include <cstdint>
#include <string>

#include "saito/errors.hpp"

namespace saito {

using i64 = std::int64_t;

// Exact element of (1/2)Z, stored as twice its value. The square indices and
// their sums live here; nothing in this ring is ever rounded.
class HalfInt {
public:
    constexpr HalfInt() : twice_(0) {}
    constexpr HalfInt(i64 whole) : twice_(2 * whole) {}  // NOLINT: intentionally implicit

    static constexpr HalfInt half() { return from_twice(1); }
    static constexpr HalfInt from_twice(i64 t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }

    constexpr i64 twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    i64 to_integer() const {
        if (!is_integer()) throw IntegralityViolation("half-integer " + str() + " is not integral");
        return twice_ / 2;
    }

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
    friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice_ == b.twice_; }
    friend constexpr bool operator!=(HalfInt a, HalfInt b) { return a.twice_ != b.twice_; }
    friend constexpr bool operator<(HalfInt a, HalfInt b) { return a.twice_ < b.twice_; }
    friend constexpr bool operator<=(HalfInt a, HalfInt b) { return a.twice_ <= b.twice_; }
    friend constexpr bool operator>(HalfInt a, HalfInt b) { return a.twice_ > b.twice_; }
    friend constexpr bool operator>=(HalfInt a, HalfInt b) { return a.twice_ >= b.twice_; }

    HalfInt& operator+=(HalfInt o) {
        twice_ += o.twice_;
        return *this;
    }
    HalfInt& operator-=(HalfInt o) {
        twice_ -= o.twice_;
        return *this;
    }

private:
    i64 twice_;
};

// a when k is even, b when k is odd.
constexpr HalfInt parity_select(HalfInt a, HalfInt b, i64 k) {
    return (k % 2 == 0) ? a : b;
}

}  // namespace saito
