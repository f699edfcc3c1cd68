#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace spinqw {

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    template <std::integral I>
    Rational(I n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& v);

    static Rational parse(std::string_view text);

    std::string str() const;
    double to_double() const { return v_.get_d(); }
    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

} // namespace spinqw
