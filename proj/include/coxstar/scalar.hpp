#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coxstar {

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("scalar addition overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("scalar subtraction overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("scalar multiplication overflow");
    return r;
}

}  // namespace detail

/// Exact element a + b*phi of Z[phi], phi^2 = phi + 1, phi = (1+sqrt(5))/2.
/// Plain integers are the b == 0 case; all arithmetic is overflow-checked.
class Scalar {
  public:
    constexpr Scalar() = default;
    constexpr Scalar(std::int64_t units) : a_(units) {}  // NOLINT: implicit by design
    constexpr Scalar(std::int64_t a, std::int64_t b) : a_(a), b_(b) {}
    static constexpr Scalar phi(std::int64_t coeff = 1) { return Scalar(0, coeff); }

    constexpr std::int64_t unit_part() const { return a_; }
    constexpr std::int64_t phi_part() const { return b_; }
    constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend Scalar operator+(Scalar x, Scalar y) {
        return Scalar(detail::checked_add(x.a_, y.a_), detail::checked_add(x.b_, y.b_));
    }
    friend Scalar operator-(Scalar x, Scalar y) {
        return Scalar(detail::checked_sub(x.a_, y.a_), detail::checked_sub(x.b_, y.b_));
    }
    friend Scalar operator*(Scalar x, Scalar y) {
        // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
        const std::int64_t ac = detail::checked_mul(x.a_, y.a_);
        const std::int64_t bd = detail::checked_mul(x.b_, y.b_);
        const std::int64_t ad = detail::checked_mul(x.a_, y.b_);
        const std::int64_t bc = detail::checked_mul(x.b_, y.a_);
        return Scalar(detail::checked_add(ac, bd),
                      detail::checked_add(detail::checked_add(ad, bc), bd));
    }
    friend Scalar operator-(Scalar x) { return Scalar(0) - x; }

    friend constexpr bool operator==(Scalar x, Scalar y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend constexpr bool operator!=(Scalar x, Scalar y) { return !(x == y); }

    /// Exact sign of the real number a + b*phi: -1, 0, or +1.
    /// Write it as (t + b*sqrt(5))/2 with t = 2a + b. If t and b agree in
    /// sign the answer is immediate; otherwise |t| vs |b|*sqrt(5) decides,
    /// and t^2 = 5 b^2 is impossible for integers unless both vanish.
    int sign() const {
        const std::int64_t t = detail::checked_add(detail::checked_add(a_, a_), b_);
        if (t == 0 && b_ == 0) return 0;
        if (t >= 0 && b_ >= 0) return 1;
        if (t <= 0 && b_ <= 0) return -1;
        const __int128 t2 = static_cast<__int128>(t) * t;
        const __int128 b2 = static_cast<__int128>(b_) * b_ * 5;
        if (t2 > b2) return t > 0 ? 1 : -1;
        return b_ > 0 ? 1 : -1;
    }

    std::string str() const;

  private:
    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
};

inline int scalar_sign(const Scalar& x) { return x.sign(); }

}  // namespace coxstar
