#include "core/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace exalg {

Rational::Rational(const Int& num, const Int& den) : v_(mpq_class(num, den)) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

std::string Rational::to_string() const {
    return v_.get_str();
}

std::string Rational::to_pair_string() const {
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

std::uint64_t mod_p(const Int& z, std::uint64_t p) {
    std::uint64_t r = mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
    return r;
}

std::uint64_t mod_p(const Rational& r, std::uint64_t p) {
    std::uint64_t n = mod_p(r.num(), p);
    std::uint64_t d = mod_p(r.den(), p);
    if (d == 0) throw std::domain_error("mod_p: denominator divisible by prime");
    // d^(p-2) mod p
    std::uint64_t inv = 1, base = d, e = p - 2;
    while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return n * inv % p;
}

}  // namespace exalg
