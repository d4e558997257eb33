#include "diagcop/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "diagcop/error.hpp"

namespace diagcop {

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error(ErrorCode::Malformed, "zero denominator");
    *this = from_wide(n, d);
}

Rational::Rational(const BigRational& v) { *this = from_big(v); }

Rational Rational::from_big(BigRational v) {
    using boost::multiprecision::cpp_int;
    static const cpp_int lo = cpp_int(INT64_MIN) + 1;
    static const cpp_int hi = cpp_int(INT64_MAX);
    const cpp_int& n = boost::multiprecision::numerator(v);
    const cpp_int& d = boost::multiprecision::denominator(v);
    Rational r;
    if (n >= lo && n <= hi && d <= hi) {
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    r.big_ = std::make_shared<const BigRational>(std::move(v));
    r.num_ = 0;
    r.den_ = 1;
    return r;
}

BigRational Rational::to_big() const {
    if (big_) return *big_;
    return BigRational(num_, den_);
}

double Rational::to_double() const {
    if (big_) return big_->convert_to<double>();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (big_) return big_->str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!a.big_ && !b.big_)
        return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    return Rational::from_big(a.to_big() / b.to_big());
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw Error(ErrorCode::Malformed, "cannot parse number '" + std::string(text) + "'");
    };
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return fail();

    auto parse_int = [&](std::string_view s, bool allow_sign) -> boost::multiprecision::cpp_int {
        bool neg = false;
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
            neg = s.front() == '-';
            s.remove_prefix(1);
        }
        if (s.empty()) fail();
        boost::multiprecision::cpp_int v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') fail();
            v = v * 10 + (c - '0');
        }
        return neg ? boost::multiprecision::cpp_int(-v) : v;
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto n = parse_int(text.substr(0, slash), true);
        auto d = parse_int(text.substr(slash + 1), false);
        if (d == 0) fail();
        return Rational(BigRational(n, d));
    }

    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        auto exp_text = text.substr(e + 1);
        auto ev = parse_int(exp_text, true);
        if (ev > 400 || ev < -400) fail();
        exponent = static_cast<long>(ev);
    }
    bool neg = false;
    if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
        neg = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long frac_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        digits = std::string(mantissa.substr(0, dot)) + std::string(mantissa.substr(dot + 1));
        frac_digits = static_cast<long>(mantissa.size() - dot - 1);
    } else {
        digits = std::string(mantissa);
    }
    if (digits.empty()) fail();
    auto n = parse_int(digits, false);
    exponent -= frac_digits;
    boost::multiprecision::cpp_int scale = 1;
    for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) scale *= 10;
    BigRational v = exponent < 0 ? BigRational(n, scale) : BigRational(n * scale);
    return Rational(neg ? BigRational(-v) : v);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace diagcop
