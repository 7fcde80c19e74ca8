#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

#include "dbp/errors.hpp"

namespace dbp {

using cplx = std::complex<double>;

// Truncated Taylor data of a function at a point: value and derivatives
// f, f', ..., f^(order). Products truncate to the smaller order, which is
// exactly the bookkeeping needed when differential operators consume
// derivative slots.
class Jet {
  public:
    static constexpr int kMaxOrder = 6;

    Jet() : ord_(0) { c_.fill(cplx(0.0)); }

    explicit Jet(int order) : ord_(check(order)) { c_.fill(cplx(0.0)); }

    Jet(cplx value, int order) : ord_(check(order)) {
        c_.fill(cplx(0.0));
        c_[0] = value;
    }

    static Jet constant(cplx v, int order) { return Jet(v, order); }

    // the identity function r -> r
    static Jet variable(double r, int order) {
        Jet j(order);
        j.c_[0] = r;
        if (order >= 1) j.c_[1] = 1.0;
        return j;
    }

    int order() const { return ord_; }
    cplx value() const { return c_[0]; }
    cplx operator[](int k) const { return c_[k]; }
    cplx& operator[](int k) { return c_[k]; }

    // view of f' as a jet one order lower
    Jet derivative() const {
        Jet d(ord_ > 0 ? ord_ - 1 : 0);
        for (int k = 0; k <= d.ord_; ++k) d.c_[k] = c_[k + 1];
        if (ord_ == 0) d.c_[0] = 0.0;
        return d;
    }

    Jet truncated(int order) const {
        Jet t(order < ord_ ? order : ord_);
        for (int k = 0; k <= t.ord_; ++k) t.c_[k] = c_[k];
        return t;
    }

    Jet operator-() const {
        Jet o(*this);
        for (int k = 0; k <= ord_; ++k) o.c_[k] = -o.c_[k];
        return o;
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        Jet o(a.ord_ < b.ord_ ? a.ord_ : b.ord_);
        for (int k = 0; k <= o.ord_; ++k) o.c_[k] = a.c_[k] + b.c_[k];
        return o;
    }

    friend Jet operator-(const Jet& a, const Jet& b) {
        Jet o(a.ord_ < b.ord_ ? a.ord_ : b.ord_);
        for (int k = 0; k <= o.ord_; ++k) o.c_[k] = a.c_[k] - b.c_[k];
        return o;
    }

    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet o(a.ord_ < b.ord_ ? a.ord_ : b.ord_);
        for (int k = 0; k <= o.ord_; ++k) {
            cplx s = 0.0;
            for (int j = 0; j <= k; ++j) s += binom(k, j) * a.c_[j] * b.c_[k - j];
            o.c_[k] = s;
        }
        return o;
    }

    friend Jet operator*(cplx s, const Jet& a) {
        Jet o(a);
        for (int k = 0; k <= o.ord_; ++k) o.c_[k] *= s;
        return o;
    }
    friend Jet operator*(const Jet& a, cplx s) { return s * a; }
    friend Jet operator*(double s, const Jet& a) { return cplx(s) * a; }
    friend Jet operator*(const Jet& a, double s) { return cplx(s) * a; }

    friend Jet operator+(const Jet& a, cplx s) {
        Jet o(a);
        o.c_[0] += s;
        return o;
    }
    friend Jet operator+(cplx s, const Jet& a) { return a + s; }
    friend Jet operator-(const Jet& a, cplx s) { return a + (-s); }
    friend Jet operator-(cplx s, const Jet& a) { return (-a) + s; }

    // reciprocal via the Leibniz recurrence sum_j C(k,j) f^(j) g^(k-j) = 0
    Jet inverse() const {
        Jet g(ord_);
        g.c_[0] = 1.0 / c_[0];
        for (int k = 1; k <= ord_; ++k) {
            cplx s = 0.0;
            for (int j = 1; j <= k; ++j) s += binom(k, j) * c_[j] * g.c_[k - j];
            g.c_[k] = -s / c_[0];
        }
        return g;
    }

    friend Jet operator/(const Jet& a, const Jet& b) { return a * b.inverse(); }
    friend Jet operator/(const Jet& a, cplx s) { return a * (cplx(1.0) / s); }
    friend Jet operator/(cplx s, const Jet& a) { return s * a.inverse(); }
    friend Jet operator/(double s, const Jet& a) { return cplx(s) * a.inverse(); }
    friend Jet operator/(const Jet& a, double s) { return a * cplx(1.0 / s); }

    Jet conj() const {
        Jet o(*this);
        for (int k = 0; k <= ord_; ++k) o.c_[k] = std::conj(o.c_[k]);
        return o;
    }

    double max_abs() const {
        double m = 0.0;
        for (int k = 0; k <= ord_; ++k) m = std::max(m, std::abs(c_[k]));
        return m;
    }

    static double binom(int n, int k) {
        static const double table[kMaxOrder + 1][kMaxOrder + 1] = {
            {1, 0, 0, 0, 0, 0, 0},  {1, 1, 0, 0, 0, 0, 0},  {1, 2, 1, 0, 0, 0, 0},
            {1, 3, 3, 1, 0, 0, 0},  {1, 4, 6, 4, 1, 0, 0},  {1, 5, 10, 10, 5, 1, 0},
            {1, 6, 15, 20, 15, 6, 1}};
        return table[n][k];
    }

  private:
    static int check(int order) {
        if (order < 0 || order > kMaxOrder) throw OrderOverflow("jet order out of range");
        return order;
    }

    int ord_;
    std::array<cplx, kMaxOrder + 1> c_;
};

// f^alpha for real alpha, via p' = alpha (f'/f) p
inline Jet jet_pow(const Jet& f, double alpha) {
    const int n = f.order();
    Jet u = (n > 0) ? Jet(alpha * (f.derivative() / f.truncated(n - 1))) : Jet(0);
    Jet p(n);
    p[0] = std::pow(f.value(), cplx(alpha));
    for (int k = 0; k < n; ++k) {
        cplx s = 0.0;
        for (int j = 0; j <= k; ++j) s += Jet::binom(k, j) * u[j] * p[k - j];
        p[k + 1] = s;
    }
    return p;
}

// natural log, same recurrence with alpha = 1 and l0 = log f0
inline Jet jet_log(const Jet& f) {
    const int n = f.order();
    Jet u = (n > 0) ? (f.derivative() / f.truncated(n - 1)) : Jet(0);
    Jet p(n);
    p[0] = std::log(f.value());
    for (int k = 0; k < n; ++k) {
        cplx s = 0.0;
        for (int j = 0; j <= k; ++j) s += Jet::binom(k, j) * u[j] * p[k - j];
        p[k + 1] = s;
    }
    return p;
}

inline Jet jet_ipow(const Jet& f, int n) {
    if (n < 0) return jet_ipow(f, -n).inverse();
    Jet acc = Jet::constant(1.0, f.order());
    Jet base = f;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

}  // namespace dbp
