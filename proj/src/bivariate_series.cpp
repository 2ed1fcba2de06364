#include "tangles/bivariate_series.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tangles {

namespace {

size_t triangle_size(int order) {
    return static_cast<size_t>(order + 1) * static_cast<size_t>(order + 2) / 2;
}

}  // namespace

BivariateSeries::BivariateSeries(int order) : order_(order) {
    if (order < 0) throw std::domain_error("order must be nonnegative");
    c_.assign(triangle_size(order), Rational());
}

size_t BivariateSeries::index(int m, int n) const {
    const int d = m + n;
    if (m < 0 || n < 0 || d > order_) throw std::out_of_range("monomial outside truncation");
    return static_cast<size_t>(d) * static_cast<size_t>(d + 1) / 2 + static_cast<size_t>(n);
}

BivariateSeries BivariateSeries::constant(const Rational& value, int order) {
    BivariateSeries f(order);
    f.at(0, 0) = value;
    return f;
}

BivariateSeries BivariateSeries::monomial(const Rational& value, int m, int n, int order) {
    BivariateSeries f(order);
    f.at(m, n) = value;
    return f;
}

BivariateSeries BivariateSeries::from_univariate(const PowerSeries& f, int order) {
    if (f.order() < order) throw std::domain_error("univariate input trusted below requested order");
    BivariateSeries g(order);
    for (int m = 0; m <= order; ++m) g.at(m, 0) = f[m];
    return g;
}

bool BivariateSeries::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

BivariateSeries BivariateSeries::truncated(int new_order) const {
    if (new_order >= order_) {
        if (new_order == order_) return *this;
        throw std::domain_error("cannot extend trusted order");
    }
    BivariateSeries g(new_order);
    for (int d = 0; d <= new_order; ++d)
        for (int n = 0; n <= d; ++n) g.at(d - n, n) = coeff(d - n, n);
    return g;
}

BivariateSeries BivariateSeries::operator-() const {
    BivariateSeries g = *this;
    for (auto& x : g.c_) x = -x;
    return g;
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
    const int order = std::min(a.order_, b.order_);
    BivariateSeries g(order);
    for (int d = 0; d <= order; ++d)
        for (int n = 0; n <= d; ++n) g.at(d - n, n) = a.coeff(d - n, n) + b.coeff(d - n, n);
    return g;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
    const int order = std::min(a.order_, b.order_);
    BivariateSeries g(order);
    for (int d = 0; d <= order; ++d)
        for (int n = 0; n <= d; ++n) g.at(d - n, n) = a.coeff(d - n, n) - b.coeff(d - n, n);
    return g;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    const int order = std::min(a.order_, b.order_);
    BivariateSeries g(order);
    for (int da = 0; da <= order; ++da) {
        for (int na = 0; na <= da; ++na) {
            const Rational& ca = a.coeff(da - na, na);
            if (ca.is_zero()) continue;
            for (int db = 0; db + da <= order; ++db) {
                for (int nb = 0; nb <= db; ++nb) {
                    const Rational& cb = b.coeff(db - nb, nb);
                    if (cb.is_zero()) continue;
                    g.at(da - na + db - nb, na + nb) += ca * cb;
                }
            }
        }
    }
    return g;
}

BivariateSeries operator*(const Rational& s, const BivariateSeries& a) {
    BivariateSeries g = a;
    for (auto& x : g.c_) x = s * x;
    return g;
}

BivariateSeries operator+(const BivariateSeries& a, const Rational& s) {
    BivariateSeries g = a;
    g.at(0, 0) += s;
    return g;
}

BivariateSeries operator-(const BivariateSeries& a, const Rational& s) {
    BivariateSeries g = a;
    g.at(0, 0) -= s;
    return g;
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
}

std::string BivariateSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= order_; ++d) {
        for (int n = 0; n <= d; ++n) {
            const Rational& x = coeff(d - n, n);
            if (x.is_zero()) continue;
            if (!first) os << " + ";
            os << x.str();
            if (d - n > 0) os << "*g^" << (d - n);
            if (n > 0) os << "*z^" << n;
            first = false;
        }
    }
    if (first) os << "0";
    os << " + O(deg " << order_ + 1 << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BivariateSeries& f) { return os << f.str(); }

BivariateSeries inverse(const BivariateSeries& f) {
    const Rational c0 = f.coeff(0, 0);
    if (c0.is_zero()) throw std::domain_error("not invertible");
    const int order = f.order();
    // Solve f * x = 1 degree by degree: the coefficient of g^m z^n isolates
    // x_{m,n} because every other term of the convolution is already known.
    BivariateSeries x(order);
    x.at(0, 0) = Rational(1) / c0;
    for (int d = 1; d <= order; ++d) {
        for (int n = 0; n <= d; ++n) {
            const int m = d - n;
            Rational acc;
            for (int j = 0; j <= m; ++j)
                for (int k = 0; k <= n; ++k) {
                    if (j == 0 && k == 0) continue;
                    const Rational& fc = f.coeff(j, k);
                    if (fc.is_zero()) continue;
                    acc += fc * x.coeff(m - j, n - k);
                }
            x.at(m, n) = -acc / c0;
        }
    }
    return x;
}

BivariateSeries div(const BivariateSeries& a, const BivariateSeries& b) { return a * inverse(b); }

BivariateSeries sqrt(const BivariateSeries& f) {
    Rational root;
    if (!f.coeff(0, 0).exact_sqrt(&root) || root.is_zero())
        throw std::domain_error("constant term not a rational square");
    const int order = f.order();
    // Solve s * s = f degree by degree: 2 s_{0,0} s_{m,n} equals f_{m,n}
    // minus the cross terms, all of strictly smaller total degree.
    BivariateSeries s(order);
    s.at(0, 0) = root;
    const Rational twice = Rational(2) * root;
    for (int d = 1; d <= order; ++d) {
        for (int n = 0; n <= d; ++n) {
            const int m = d - n;
            Rational acc;
            for (int j = 0; j <= m; ++j)
                for (int k = 0; k <= n; ++k) {
                    if ((j == 0 && k == 0) || (j == m && k == n)) continue;
                    const Rational& sc = s.coeff(j, k);
                    if (sc.is_zero()) continue;
                    acc += sc * s.coeff(m - j, n - k);
                }
            s.at(m, n) = (f.coeff(m, n) - acc) / twice;
        }
    }
    return s;
}

PowerSeries substitute(const BivariateSeries& B, const PowerSeries& zeta_of_g) {
    if (!zeta_of_g[0].is_zero()) throw std::domain_error("inner constant term nonzero");
    const int order = std::min(B.order(), zeta_of_g.order());
    const PowerSeries z = zeta_of_g.truncated(order);
    std::vector<Rational> res(static_cast<size_t>(order) + 1);
    PowerSeries zp = PowerSeries::constant(Rational(1), order);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) zp = zp * z;
        for (int m = 0; m + n <= B.order() && m <= order; ++m) {
            const Rational& c = B.coeff(m, n);
            if (c.is_zero()) continue;
            for (int k = 0; k + m <= order; ++k) {
                if (zp[k].is_zero()) continue;
                res[static_cast<size_t>(k + m)] += c * zp[k];
            }
        }
    }
    return PowerSeries(std::move(res));
}

}  // namespace tangles
