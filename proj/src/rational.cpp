#include "spinqw/rational.hpp"

#include <ostream>

#include "spinqw/errors.hpp"

namespace spinqw {

Rational::Rational(long num, long den)
{
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v)
{
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw PreconditionError("not a rational literal: '" + s + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw DivisionByZero("rational literal with zero denominator: '" + s + "'");
    mpq_class v(n, d);
    v.canonicalize();
    return Rational(v);
}

std::string Rational::str() const
{
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

Rational abs(const Rational& r)
{
    return r.sign() < 0 ? -r : r;
}

} // namespace spinqw
