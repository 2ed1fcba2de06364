#include "tangles/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace tangles {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("division by zero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
    if (sgn(den) == 0) throw std::domain_error("division by zero");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (sgn(v.get_den()) == 0) throw std::domain_error("division by zero");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(std::move(f));
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(std::move(b));
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(std::move(r));
}

bool Rational::exact_sqrt(Rational* root) const {
    if (sign() < 0) return false;
    const mpz_class n = v_.get_num(), d = v_.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    if (root) *root = Rational(std::move(rn), std::move(rd));
    return true;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::string format_scaled_decimal(const mpz_class& scaled, int digits) {
    mpz_class a = abs(scaled);
    std::string ds = a.get_str();
    if ((int)ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    std::string out;
    if (sgn(scaled) < 0) out = "-";
    if (digits == 0) return out + ds;
    out += ds.substr(0, ds.size() - digits);
    out += '.';
    out += ds.substr(ds.size() - digits);
    return out;
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    // round(v * 10^digits) = floor((2 * num * 10^digits + den) / (2 * den))
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, digits);
    mpz_class num = v_.get_num() * p10 * 2 + v_.get_den();
    mpz_class scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), mpz_class(2 * v_.get_den()).get_mpz_t());
    return format_scaled_decimal(scaled, digits);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace tangles
