#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "dbp/background.hpp"
#include "dbp/errors.hpp"

namespace dbp {

// Angular frame data: the angular derivative operators carry a 1/(sqrt(2) R)
// prefactor and the spin coefficients below. alphabar stores the conjugate
// of alpha = -conj(beta); both are real on the real section.
struct EdthFrame {
    double R = 1.0;
    double theta = M_PI / 2;
    double beta = 0.0;
    double alphabar = 0.0;
};

inline EdthFrame make_edth_frame(double R, double theta) {
    EdthFrame f;
    f.R = R;
    f.theta = theta;
    f.beta = 1.0 / (std::tan(theta) * 2.0 * std::sqrt(2.0) * R);
    f.alphabar = -f.beta;
    return f;
}

inline double angular_eigenvalue(int l) {
    if (l < 2) throw IndexRange("multipole l must be at least 2");
    return static_cast<double>((l - 1) * (l + 2));
}

struct ModeSpec {
    int l = 2;
    int m = 0;
    double omega = 0.0;
    double L2 = 4.0;
};

inline ModeSpec make_mode(int l, int m, double omega) {
    if (l < 2) throw IndexRange("multipole l must be at least 2");
    if (std::abs(m) > l) throw IndexRange("|m| must not exceed l");
    ModeSpec ms;
    ms.l = l;
    ms.m = m;
    ms.omega = omega;
    ms.L2 = angular_eigenvalue(l);
    return ms;
}

namespace detail {
inline double lnfact(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// Wigner small-d in the z-y-z convention via the explicit sum.
inline double wigner_d(int j, int mp, int m, double beta) {
    const double ch = std::cos(0.5 * beta);
    const double sh = std::sin(0.5 * beta);
    double acc = 0.0;
    for (int k = 0; k <= 2 * j; ++k) {
        if (j + m - k < 0 || j - k - mp < 0 || k + mp - m < 0) continue;
        double lognum = 0.5 * (lnfact(j + m) + lnfact(j - m) + lnfact(j + mp) + lnfact(j - mp));
        double logden = lnfact(j + m - k) + lnfact(k) + lnfact(j - k - mp) + lnfact(k + mp - m);
        double term = std::exp(lognum - logden);
        int sgn = ((mp - m + k) % 2 == 0) ? 1 : -1;
        acc += sgn * term * std::pow(ch, 2 * j - 2 * k + m - mp) * std::pow(sh, 2 * k - m + mp);
    }
    return acc;
}
}  // namespace detail

// Unit-normalized spin-weighted harmonic sYlm = sqrt((2l+1)/4pi)
// d^l_{m,-s}(theta) e^{i m phi}. This phase choice makes the raising
// bracket [d/dtheta - m csc(theta) - s cot(theta)] produce
// +sqrt((l-s)(l+s+1)) times the weight s+1 harmonic and the lowering
// bracket [d/dtheta + m csc(theta) + s cot(theta)] produce
// -sqrt((l+s)(l-s+1)) times the weight s-1 harmonic.
inline cplx swsh(int s, int l, int m, double theta, double varphi) {
    if (l < 0 || std::abs(s) > l) throw IndexRange("|s| must not exceed l");
    if (std::abs(m) > l) throw IndexRange("|m| must not exceed l");
    double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * M_PI));
    double d = detail::wigner_d(l, m, -s, theta);
    return norm * d * std::exp(cplx(0.0, m * varphi));
}

inline double edth_raise_coeff(int s, int l) {
    if (std::abs(s) > l) throw IndexRange("|s| must not exceed l");
    return std::sqrt(static_cast<double>((l - s) * (l + s + 1)));
}

inline double edth_lower_coeff(int s, int l) {
    if (std::abs(s) > l) throw IndexRange("|s| must not exceed l");
    return std::sqrt(static_cast<double>((l + s) * (l - s + 1)));
}

// Max residual of the raise/lower ladder relations over an interior theta
// grid, the derivative approximated by a 4th-order central stencil.
inline double ladder_numeric_check(int s, int l, int m, int grid_size) {
    if (std::abs(s) > l - 1) throw IndexRange("need |s| <= l-1 so the raised weight exists");
    const double lo = 0.15, hi = M_PI - 0.15;
    const double h = (hi - lo) / (grid_size - 1);
    double worst = 0.0;
    for (int i = 2; i < grid_size - 2; ++i) {
        double th = lo + i * h;
        auto f = [&](double t) { return swsh(s, l, m, t, 0.0); };
        cplx d1 = (-f(th + 2 * h) + 8.0 * f(th + h) - 8.0 * f(th - h) + f(th - 2 * h)) / (12.0 * h);
        double cs = 1.0 / std::sin(th), ct = 1.0 / std::tan(th);
        cplx up = d1 - (m * cs + s * ct) * f(th);
        worst = std::max(worst, std::abs(up - edth_raise_coeff(s, l) * swsh(s + 1, l, m, th, 0.0)));
        if (std::abs(s - 1) <= l) {
            cplx down = d1 + (m * cs + s * ct) * f(th);
            worst = std::max(worst, std::abs(down + edth_lower_coeff(s, l) * swsh(s - 1, l, m, th, 0.0)));
        }
    }
    return worst;
}

// Numeric residual of the lower(s+1) raise(s) composite against its
// eigenvalue -(l-s)(l+s+1), pure angular part (no 1/(2R^2) prefactor).
inline double ladder_closure_residual(int s, int l, int m, int grid_size) {
    if (std::abs(s) > l - 1) throw IndexRange("need |s| <= l-1 so the raised weight exists");
    const double lo = 0.2, hi = M_PI - 0.2;
    const double h = (hi - lo) / (grid_size - 1);
    auto up = [&](double t) {
        auto f = [&](double u) { return swsh(s, l, m, u, 0.0); };
        cplx d1 = (-f(t + 2 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2 * h)) / (12.0 * h);
        return d1 - (m / std::sin(t) + s / std::tan(t)) * f(t);
    };
    double worst = 0.0;
    double eig = -static_cast<double>((l - s) * (l + s + 1));
    for (int i = 4; i < grid_size - 4; ++i) {
        double th = lo + i * h;
        cplx d1 = (-up(th + 2 * h) + 8.0 * up(th + h) - 8.0 * up(th - h) + up(th - 2 * h)) / (12.0 * h);
        cplx comp = d1 + (m / std::sin(th) + (s + 1) / std::tan(th)) * up(th);
        worst = std::max(worst, std::abs(comp - eig * swsh(s, l, m, th, 0.0)));
    }
    return worst;
}

struct AngularSample {
    double r;
    double theta;
};

// Two-sided check of the commutation relations
//   (D + p rho)(delta + q beta)          = (delta + q beta)(D + (p+1) rho)
//   (Delta + p gamma + p' mu)(d + q b)   = (d + q b)(Delta + p gamma + (p'-1) mu)
// on the product function f(r) sYlm. The angular action is evaluated with
// the exact ladder coefficients (validated separately); the radial action
// uses background jets. f must return a jet of order >= 1. Returns the max
// relative residual over the samples.
inline double commutation_check(double p, double q, double pprime,
                                const std::function<Jet(double)>& f, int s, int l, int m,
                                const std::vector<AngularSample>& samples,
                                const BlackHoleParams& bh, double omega) {
    double worst = 0.0;
    const cplx iw(0.0, omega);
    for (const AngularSample& sm : samples) {
        Background b = eval_background(bh, sm.r, 4);
        Jet fr = f(sm.r);

        // (delta + q beta)(f sYlm) = (f / (sqrt2 R)) * u(theta) with
        // u = raise(s,l) (s+1)Ylm + (s + q/2) cot(theta) sYlm.
        double rc = edth_raise_coeff(s, l);
        cplx u = (s + 0.5 * q) / std::tan(sm.theta) * swsh(s, l, m, sm.theta, 0.0);
        if (rc != 0.0) u += rc * swsh(s + 1, l, m, sm.theta, 0.0);

        auto Dop = [&](const Jet& g) {
            return Jet(g.derivative() - iw * (g / b.chi2).truncated(g.order() - 1));
        };
        auto Dlop = [&](const Jet& g) {
            return Jet(-0.5 * (b.chi2 * g.derivative()) - 0.5 * iw * g.truncated(g.order() - 1));
        };

        Jet invSR = b.R.inverse() * (1.0 / std::sqrt(2.0));
        Jet prod = fr * invSR;

        cplx lhs1 = (Dop(prod) + p * (b.rho * prod)).value() * u;
        cplx rhs1 = invSR.value() * (Dop(fr) + (p + 1.0) * (b.rho * fr)).value() * u;
        cplx lhs2 = (Dlop(prod) + p * (b.gamma * prod) + pprime * (b.mu * prod)).value() * u;
        cplx rhs2 = invSR.value() * (Dlop(fr) + p * (b.gamma * fr) + (pprime - 1.0) * (b.mu * fr)).value() * u;

        double scale = std::max({std::abs(rhs1), std::abs(rhs2), 1e-30});
        worst = std::max(worst, std::abs(lhs1 - rhs1) / scale);
        worst = std::max(worst, std::abs(lhs2 - rhs2) / scale);
    }
    return worst;
}

// Gauss-Legendre orthonormality residual, max over l, l' <= lmax and
// common m at spin weight s. Node count gives exactness degree >= 2 lmax + 2.
inline double orthonormality_residual(int s, int lmax) {
    int n = 2 * lmax + 8;
    std::vector<double> x(n), wq(n);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-15) break;
        }
        x[i] = t;
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        wq[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }

    double worst = 0.0;
    int lmin = std::abs(s);
    for (int l1 = lmin; l1 <= lmax; ++l1) {
        for (int l2 = l1; l2 <= lmax; ++l2) {
            for (int m = 0; m <= std::min(l1, l2); ++m) {
                cplx acc = 0.0;
                for (int i = 0; i < n; ++i) {
                    double th = std::acos(x[i]);
                    acc += wq[i] * std::conj(swsh(s, l1, m, th, 0.0)) * swsh(s, l2, m, th, 0.0);
                }
                acc *= 2.0 * M_PI;
                double want = (l1 == l2) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(acc - want));
            }
        }
    }
    return worst;
}

}  // namespace dbp
