#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace diagcop {

using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline and
/// every operation on two such values is computed with 128-bit intermediates.
/// Anything larger is promoted to an immutable, shared arbitrary-precision
/// value, so arithmetic never overflows or rounds.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t n) noexcept : num_(n) {}  // NOLINT: implicit by design of numeric type
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const BigRational& v);

    /// Parses "p/q", an integer, or a decimal literal such as "-0.1625".
    static Rational parse(std::string_view text);

    bool is_small() const noexcept { return !big_; }
    /// Numerator/denominator as 64-bit values; only valid when is_small().
    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    BigRational to_big() const;
    double to_double() const;
    std::string str() const;

    int sign() const noexcept;
    bool is_zero() const noexcept { return !big_ && num_ == 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) noexcept;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

private:
    using i128 = __int128;

    static Rational from_wide(i128 n, i128 d);
    static Rational from_big(BigRational v);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const BigRational> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational half(const Rational& r) { return r / Rational(2); }

// ---------------------------------------------------------------------------

namespace detail {

inline unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) noexcept {
    if (a <= UINT64_MAX && b <= UINT64_MAX) {
        auto x = static_cast<std::uint64_t>(a), y = static_cast<std::uint64_t>(b);
        while (y != 0) {
            auto t = x % y;
            x = y;
            y = t;
        }
        return x;
    }
    while (b != 0) {
        auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) noexcept {
    std::uint64_t x = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    std::uint64_t y = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    while (y != 0) {
        auto t = x % y;
        x = y;
        y = t;
    }
    return static_cast<std::int64_t>(x);
}

inline bool fits_i64(__int128 v) noexcept { return v >= INT64_MIN && v <= INT64_MAX; }

}  // namespace detail

inline int Rational::sign() const noexcept {
    if (big_) return big_->sign();
    return (num_ > 0) - (num_ < 0);
}

inline Rational Rational::from_wide(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    unsigned __int128 un = n < 0 ? static_cast<unsigned __int128>(-n) : static_cast<unsigned __int128>(n);
    auto g = static_cast<i128>(detail::gcd_u128(un, static_cast<unsigned __int128>(d)));
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (detail::fits_i64(n) && detail::fits_i64(d) && n != INT64_MIN) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    using boost::multiprecision::cpp_int;
    auto to_big_int = [](i128 v) {
        bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
        cpp_int hi = static_cast<std::uint64_t>(u >> 64);
        cpp_int r = (hi << 64) + cpp_int(static_cast<std::uint64_t>(u));
        return neg ? cpp_int(-r) : r;
    };
    return from_big(BigRational(to_big_int(n), to_big_int(d)));
}

inline Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_)
            return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
        return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                                   static_cast<__int128>(a.den_) * b.den_);
    }
    return Rational::from_big(a.to_big() + b.to_big());
}

inline Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_)
            return Rational::from_wide(static_cast<__int128>(a.num_) - b.num_, a.den_);
        return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                                   static_cast<__int128>(a.den_) * b.den_);
    }
    return Rational::from_big(a.to_big() - b.to_big());
}

inline Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
        return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    return Rational::from_big(a.to_big() * b.to_big());
}

inline bool operator==(const Rational& a, const Rational& b) noexcept {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    // a normalized big value never fits in 64 bits
    return false;
}

inline std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        auto l = static_cast<__int128>(a.num_) * b.den_;
        auto r = static_cast<__int128>(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    auto c = a.to_big().compare(b.to_big());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

inline Rational Rational::operator-() const {
    if (!big_ && num_ != INT64_MIN) {
        Rational r = *this;
        r.num_ = -num_;
        return r;
    }
    return from_big(-to_big());
}

}  // namespace diagcop
