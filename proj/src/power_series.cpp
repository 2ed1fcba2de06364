#include "tangles/power_series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tangles {

namespace {

using Coeffs = std::vector<Rational>;

// Fixed-window kernels. All take/return coefficient vectors of size n+1 and
// are exact through degree n; order bookkeeping happens in the public ops.

Coeffs mul_low(const Coeffs& a, const Coeffs& b, int n) {
    Coeffs r(n + 1);
    const int alen = std::min<int>(n, static_cast<int>(a.size()) - 1);
    for (int i = 0; i <= alen; ++i) {
        if (a[i].is_zero()) continue;
        const int blen = std::min<int>(n - i, static_cast<int>(b.size()) - 1);
        for (int j = 0; j <= blen; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Quotient a/b with b[0] != 0, by long division.
Coeffs div_unit_low(const Coeffs& a, const Coeffs& b, int n) {
    Coeffs q(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rational acc = k < static_cast<int>(a.size()) ? a[k] : Rational(0);
        const int jmax = std::min<int>(k, static_cast<int>(b.size()) - 1);
        for (int j = 1; j <= jmax; ++j) acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    return q;
}

// f(h) with h[0] == 0, by Horner evaluation.
Coeffs compose_low(const Coeffs& f, const Coeffs& h, int n) {
    Coeffs r(n + 1);
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        r = mul_low(r, h, n);
        r[0] += f[i];
    }
    return r;
}

Coeffs derivative_raw(const Coeffs& f) {
    Coeffs r(std::max<size_t>(1, f.size() - 1));
    for (size_t k = 1; k < f.size(); ++k) r[k - 1] = Rational(static_cast<long>(k)) * f[k];
    return r;
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.resize(1);
}

PowerSeries PowerSeries::constant(const Rational& value, int order) {
    PowerSeries f(order);
    f.c_[0] = value;
    return f;
}

PowerSeries PowerSeries::identity(int order) {
    return monomial(Rational(1), 1, order);
}

PowerSeries PowerSeries::monomial(const Rational& value, int degree, int order) {
    PowerSeries f(order);
    if (degree <= order) f.c_[static_cast<size_t>(degree)] = value;
    return f;
}

bool PowerSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

int PowerSeries::valuation() const {
    for (int k = 0; k <= order(); ++k)
        if (!c_[static_cast<size_t>(k)].is_zero()) return k;
    return order() + 1;
}

PowerSeries PowerSeries::truncated(int new_order) const {
    if (new_order >= order()) return *this;
    PowerSeries f(new_order);
    std::copy(c_.begin(), c_.begin() + new_order + 1, f.c_.begin());
    return f;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = -c_[k];
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    return PowerSeries(mul_low(a.c_, b.c_, n));
}

PowerSeries operator*(const Rational& s, const PowerSeries& a) {
    PowerSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.c_[k] = s * a.c_[k];
    return r;
}

PowerSeries operator+(const PowerSeries& a, const Rational& s) {
    PowerSeries r = a;
    r.c_[0] += s;
    return r;
}

PowerSeries operator-(const PowerSeries& a, const Rational& s) {
    PowerSeries r = a;
    r.c_[0] -= s;
    return r;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.c_ == b.c_;
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
    return a + b;
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
    return a * b;
}

PowerSeries div(const PowerSeries& a, const PowerSeries& b) {
    const int v = b.valuation();
    if (v > b.order()) throw std::domain_error("division by zero series");
    if (a.valuation() < v) throw std::domain_error("valuation mismatch");
    const int n = std::min(a.order(), b.order()) - v;
    if (n < 0) throw std::domain_error("division by zero series");
    Coeffs as(a.coeffs().begin() + v, a.coeffs().begin() + std::min(a.order(), v + n) + 1);
    Coeffs bs(b.coeffs().begin() + v, b.coeffs().begin() + std::min(b.order(), v + n) + 1);
    return PowerSeries(div_unit_low(as, bs, n));
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& h) {
    if (!h[0].is_zero()) throw std::domain_error("inner constant term nonzero");
    const int v = std::max(1, h.valuation());
    const long cap = static_cast<long>(v) * (f.order() + 1) - 1;
    const int n = static_cast<int>(std::min<long>(h.order(), cap));
    return PowerSeries(compose_low(f.coeffs(), h.coeffs(), n));
}

PowerSeries reversion(const PowerSeries& f) {
    if (f.order() < 1 || !f[0].is_zero() || f[1].is_zero())
        throw std::domain_error("not invertible");
    const int n = f.order();
    const Coeffs fd = derivative_raw(f.coeffs());
    // Newton: y <- y - (f(y) - g)/f'(y), doubling the correct order each pass.
    Coeffs y(n + 1);
    y[1] = Rational(1) / f[1];
    for (int correct = 1; correct < n; correct = 2 * correct + 1) {
        Coeffs fy = compose_low(f.coeffs(), y, n);
        fy[1] -= Rational(1);  // f(y) - g
        const Coeffs fpy = compose_low(fd, y, n);
        const Coeffs delta = div_unit_low(fy, fpy, n);
        for (int k = 0; k <= n; ++k) y[k] -= delta[k];
    }
    return PowerSeries(std::move(y));
}

PowerSeries sqrt(const PowerSeries& f) {
    Rational root;
    if (!f[0].exact_sqrt(&root)) throw std::domain_error("constant term not a rational square");
    if (root.is_zero()) throw std::domain_error("constant term not a rational square");
    const int n = f.order();
    Coeffs s(n + 1);
    s[0] = root;
    // Newton: s <- (s + f/s)/2.
    const Rational half(1, 2);
    for (int correct = 0; correct < n; correct = 2 * correct + 1) {
        const Coeffs q = div_unit_low(f.coeffs(), s, n);
        for (int k = 0; k <= n; ++k) s[k] = half * (s[k] + q[k]);
    }
    return PowerSeries(std::move(s));
}

PowerSeries log(const PowerSeries& f) {
    if (f[0] != Rational(1)) throw std::domain_error("constant term not 1");
    // log f = integral of f'/f.
    const int n = f.order();
    if (n == 0) return PowerSeries(0);
    const Coeffs num = derivative_raw(f.coeffs());
    const Coeffs q = div_unit_low(num, f.coeffs(), n - 1);
    PowerSeries r(n);
    for (int k = 1; k <= n; ++k) r.at(k) = q[k - 1] / Rational(k);
    return r;
}

PowerSeries exp(const PowerSeries& f) {
    if (!f[0].is_zero()) throw std::domain_error("constant term not 0");
    const int n = f.order();
    // e_k = (1/k) * sum_{j=1..k} j * f_j * e_{k-j}.
    PowerSeries r(n);
    r.at(0) = Rational(1);
    for (int k = 1; k <= n; ++k) {
        Rational acc;
        for (int j = 1; j <= k; ++j) acc += Rational(j) * f[j] * r[k - j];
        r.at(k) = acc / Rational(k);
    }
    return r;
}

PowerSeries derivative(const PowerSeries& f) {
    if (f.order() == 0) return PowerSeries(0);
    PowerSeries r(f.order() - 1);
    for (int k = 1; k <= f.order(); ++k) r.at(k - 1) = Rational(k) * f[k];
    return r;
}

PowerSeries antiderivative(const PowerSeries& f) {
    PowerSeries r(f.order() + 1);
    for (int k = 0; k <= f.order(); ++k) r.at(k + 1) = f[k] / Rational(k + 1);
    return r;
}

PowerSeries solve_algebraic(const std::vector<PowerSeries>& poly, const Rational& seed) {
    if (poly.empty()) throw std::domain_error("empty polynomial");
    int n = poly.front().order();
    for (const PowerSeries& c : poly) n = std::min(n, c.order());

    // Check the seed against the constant-term polynomial.
    Rational p0, dp0, ypow(1);
    for (size_t i = 0; i < poly.size(); ++i) {
        p0 += poly[i][0] * ypow;
        if (i + 1 < poly.size()) dp0 += Rational(static_cast<long>(i + 1)) * poly[i + 1][0] * ypow;
        ypow *= seed;
    }
    if (!p0.is_zero()) throw std::domain_error("seed not a root");
    if (dp0.is_zero()) throw std::domain_error("degenerate root (derivative vanishes)");

    const auto eval = [&](const std::vector<const Coeffs*>& cs, const Coeffs& y) {
        Coeffs r(n + 1);
        for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i) {
            r = mul_low(r, y, n);
            const Coeffs& ci = *cs[i];
            for (int k = 0; k <= std::min<int>(n, static_cast<int>(ci.size()) - 1); ++k)
                r[k] += ci[k];
        }
        return r;
    };

    std::vector<const Coeffs*> p, dp;
    std::vector<Coeffs> dstore(poly.size() > 1 ? poly.size() - 1 : 0);
    for (size_t i = 0; i < poly.size(); ++i) p.push_back(&poly[i].coeffs());
    for (size_t i = 1; i < poly.size(); ++i) {
        dstore[i - 1] = poly[i].coeffs();
        for (Rational& c : dstore[i - 1]) c *= Rational(static_cast<long>(i));
        dp.push_back(&dstore[i - 1]);
    }

    Coeffs y(n + 1);
    y[0] = seed;
    for (int correct = 0; correct < n; correct = 2 * correct + 1) {
        const Coeffs py = eval(p, y);
        const Coeffs dpy = eval(dp, y);
        const Coeffs delta = div_unit_low(py, dpy, n);
        for (int k = 0; k <= n; ++k) y[k] -= delta[k];
    }
    return PowerSeries(std::move(y));
}

std::string PowerSeries::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << (c_[k].sign() > 0 ? " + " : " - ");
        else if (c_[k].sign() < 0)
            os << "-";
        first = false;
        const Rational a = c_[k].sign() < 0 ? -c_[k] : c_[k];
        if (k == 0) {
            os << a.str();
        } else {
            if (a != Rational(1)) os << a.str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << order() + 1 << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& f) {
    return os << f.str();
}

}  // namespace tangles
