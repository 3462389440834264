#pragma once

#include <cstdint>
#include <stdexcept>

namespace evdeg {

// Checked integer for invariant arithmetic: 128-bit intermediates, throws
// std::overflow_error instead of wrapping, narrows back to int64 on demand.
// Keeps the closed-form expressions readable while staying exact-or-error.
class Exact {
public:
    Exact(std::int64_t v = 0) : v_(v) {}

    friend Exact operator+(Exact a, Exact b) {
        Exact r;
        if (__builtin_add_overflow(a.v_, b.v_, &r.v_)) {
            throw std::overflow_error("integer overflow in +");
        }
        return r;
    }
    friend Exact operator-(Exact a, Exact b) {
        Exact r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r.v_)) {
            throw std::overflow_error("integer overflow in -");
        }
        return r;
    }
    friend Exact operator*(Exact a, Exact b) {
        Exact r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r.v_)) {
            throw std::overflow_error("integer overflow in *");
        }
        return r;
    }
    Exact& operator+=(Exact o) { return *this = *this + o; }
    Exact& operator-=(Exact o) { return *this = *this - o; }

    std::int64_t value() const {
        if (v_ > INT64_MAX || v_ < INT64_MIN) {
            throw std::overflow_error("value exceeds 64-bit range");
        }
        return static_cast<std::int64_t>(v_);
    }

private:
    __int128 v_;
};

}  // namespace evdeg
