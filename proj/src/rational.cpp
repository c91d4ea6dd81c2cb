#include "nabext/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace nabext {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::parse(const std::string& text) {
    const auto bad = [&] {
        return std::invalid_argument("Rational: cannot parse \"" + text + "\"");
    };
    if (text.empty())
        throw bad();
    const auto slash = text.find('/');
    const auto is_int = [](const std::string& s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw bad();
    mpz_class d(den);
    if (d == 0)
        throw bad();
    return Rational(mpz_class(num), d);
}

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1)
        s += "/" + v_.get_den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace nabext
