#include "tangles/algebraic.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace tangles {

namespace {

// Pulls the largest easily found square factor out of d: trial division by
// small primes, then a perfect-square check on what is left. Every radicand
// in this library is tiny, so this is exhaustive in practice.
void extract_square_factor(mpz_class& d, mpz_class& outer) {
    outer = 1;
    if (d == 0) return;
    for (unsigned long p = 2; p < 1000; ++p) {
        const mpz_class p2 = mpz_class(p) * p;
        while (mpz_divisible_p(d.get_mpz_t(), p2.get_mpz_t())) {
            d /= p2;
            outer *= p;
        }
        if (d < p2) break;
    }
    if (mpz_perfect_square_p(d.get_mpz_t())) {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
        outer *= s;
        d = 1;
    }
}

}  // namespace

AlgebraicValue::AlgebraicValue(const Rational& v)
    : p_(v.num()), q_(0), d_(0), r_(v.den()) {}

AlgebraicValue AlgebraicValue::surd(const Rational& a, const Rational& b, const mpz_class& d) {
    if (sgn(d) < 0) throw std::domain_error("negative radicand");
    AlgebraicValue v;
    // a + b*sqrt(d) = (a.num*b.den + b.num*a.den*sqrt(d)) / (a.den*b.den)
    v.p_ = a.num() * b.den();
    v.q_ = b.num() * a.den();
    v.d_ = d;
    v.r_ = a.den() * b.den();
    v.normalize();
    return v;
}

void AlgebraicValue::normalize() {
    mpz_class outer;
    extract_square_factor(d_, outer);
    q_ *= outer;
    if (d_ <= 1 || q_ == 0) {  // sqrt(0)=0, sqrt(1)=1: fold into p
        if (d_ == 1) p_ += q_;
        q_ = 0;
        d_ = 0;
    }
    if (sgn(r_) < 0) {
        r_ = -r_;
        p_ = -p_;
        q_ = -q_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

Rational AlgebraicValue::as_rational() const {
    if (!is_rational()) throw std::domain_error("value is irrational");
    return Rational(p_, r_);
}

AlgebraicValue AlgebraicValue::operator-() const {
    AlgebraicValue v(*this);
    v.p_ = -v.p_;
    v.q_ = -v.q_;
    return v;
}

AlgebraicValue AlgebraicValue::operator*(const AlgebraicValue& o) const {
    if (!is_rational() && !o.is_rational() && d_ != o.d_)
        throw std::domain_error("incompatible radicands");
    AlgebraicValue v;
    v.d_ = is_rational() ? o.d_ : d_;
    // (p1 + q1*s)(p2 + q2*s) with s^2 = d
    v.p_ = p_ * o.p_ + q_ * o.q_ * v.d_;
    v.q_ = p_ * o.q_ + q_ * o.p_;
    v.r_ = r_ * o.r_;
    v.normalize();
    return v;
}

AlgebraicValue AlgebraicValue::operator+(const AlgebraicValue& o) const {
    if (!is_rational() && !o.is_rational() && d_ != o.d_)
        throw std::domain_error("incompatible radicands");
    AlgebraicValue v;
    v.d_ = is_rational() ? o.d_ : d_;
    v.p_ = p_ * o.r_ + o.p_ * r_;
    v.q_ = q_ * o.r_ + o.q_ * r_;
    v.r_ = r_ * o.r_;
    v.normalize();
    return v;
}

AlgebraicValue AlgebraicValue::inverse() const {
    if (is_rational()) {
        if (p_ == 0) throw std::domain_error("division by zero");
        AlgebraicValue v;
        v.p_ = r_;
        v.r_ = p_;
        v.normalize();
        return v;
    }
    // r/(p + q*sqrt(d)) = r*(p - q*sqrt(d)) / (p^2 - q^2 d)
    const mpz_class norm = p_ * p_ - q_ * q_ * d_;
    if (norm == 0) throw std::domain_error("division by zero");
    AlgebraicValue v;
    v.p_ = r_ * p_;
    v.q_ = -r_ * q_;
    v.d_ = d_;
    v.r_ = norm;
    v.normalize();
    return v;
}

bool operator==(const AlgebraicValue& a, const AlgebraicValue& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_ && a.r_ == b.r_;
}

int AlgebraicValue::sign() const {
    if (q_ == 0) return sgn(p_);
    if (sgn(p_) == sgn(q_) || p_ == 0) return sgn(q_);
    // p and q*sqrt(d) compete: compare p^2 against q^2 d
    const int c = cmp(p_ * p_, q_ * q_ * d_);
    const int heavier = c > 0 ? sgn(p_) : sgn(q_);
    return c == 0 ? 0 : heavier;
}

double AlgebraicValue::approx() const {
    return (p_.get_d() + q_.get_d() * std::sqrt(d_.get_d())) / r_.get_d();
}

std::string AlgebraicValue::str() const {
    if (is_rational()) return Rational(p_, r_).str();
    std::string s = "(" + p_.get_str();
    if (sgn(q_) >= 0) s += "+";
    if (q_ == -1)
        s += "-";
    else if (q_ != 1)
        s += q_.get_str() + "*";
    s += "sqrt(" + d_.get_str() + "))";
    if (r_ != 1) s += "/" + r_.get_str();
    return s;
}

std::string AlgebraicValue::decimal(int digits) const {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    if (is_rational()) return Rational(p_, r_).decimal(digits);
    // round(v*10^k) = floor((2*10^k*p + r + 2*10^k*q*sqrt(d)) / (2r)), and
    // floor(x/f) = floor(floor(x)/f), with floor of the irrational numerator
    // obtained from the integer square root of (2*10^k*q)^2 * d.
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, digits);
    const mpz_class c = 2 * p10 * p_ + r_;
    const mpz_class e = 2 * p10 * q_;
    mpz_class w;
    mpz_sqrt(w.get_mpz_t(), mpz_class(e * e * d_).get_mpz_t());
    const mpz_class num_floor = sgn(e) >= 0 ? mpz_class(c + w) : mpz_class(c - w - 1);
    mpz_class scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), num_floor.get_mpz_t(), mpz_class(2 * r_).get_mpz_t());
    return format_scaled_decimal(scaled, digits);
}

std::ostream& operator<<(std::ostream& os, const AlgebraicValue& v) {
    return os << v.str();
}

std::pair<AlgebraicValue, AlgebraicValue> solve_quadratic(const Rational& A, const Rational& B,
                                                          const Rational& C) {
    if (A.is_zero()) throw std::domain_error("degenerate quadratic");
    // Clear denominators: a x^2 + b x + c with integers a, b, c.
    mpz_class l = A.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), B.den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), C.den().get_mpz_t());
    const Rational scale{mpz_class(l)};
    const mpz_class a = (A * scale).num(), b = (B * scale).num(), c = (C * scale).num();
    const mpz_class disc = b * b - 4 * a * c;
    if (sgn(disc) < 0) throw std::domain_error("complex roots");
    const Rational base(-b, 2 * a), coef(1, 2 * a);
    AlgebraicValue r1 = AlgebraicValue::surd(base, -coef, disc);
    AlgebraicValue r2 = AlgebraicValue::surd(base, coef, disc);
    if (r1.approx() > r2.approx()) std::swap(r1, r2);
    return {r1, r2};
}

}  // namespace tangles
