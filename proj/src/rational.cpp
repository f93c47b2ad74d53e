#include "sie/rational.hpp"

#include <cctype>
#include <ostream>

namespace sie {

void Rational::assign(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("division by zero");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("invalid rational literal: empty");
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(text)));
        }
        Integer num(std::string(trim(text.substr(0, slash))));
        Integer den(std::string(trim(text.substr(slash + 1))));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
    }
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(unsigned long e) const {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), e);
    return Rational(num, den);
}

Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sie
