#pragma once

#include <cmath>
#include <complex>

#include "dbp/errors.hpp"
#include "dbp/jet.hpp"

namespace dbp {

struct BlackHoleParams {
    double r_plus = 0.0;
    double r_minus = 0.0;
    double a = 0.0;
    double Q = 0.0;
    double M = 0.0;
};

inline BlackHoleParams params_from_horizons(double r_plus, double r_minus, double a) {
    if (r_minus <= 0.0)
        throw DegenerateCharge("r_minus must be positive (the charge degenerates otherwise)");
    if (r_minus >= r_plus)
        throw HorizonOrder("need r_minus < r_plus");
    if (a < 0.0)
        throw NegativeCoupling("coupling a must be nonnegative");
    BlackHoleParams p;
    p.r_plus = r_plus;
    p.r_minus = r_minus;
    p.a = a;
    p.Q = std::sqrt(r_plus * r_minus / (1.0 + a * a));
    p.M = 0.5 * (r_plus + r_minus * (1.0 - a * a) / (1.0 + a * a));
    return p;
}

// All scalar functions entering the separated operators, carried as radial
// jets at a single exterior radius. Signature (+,-,-,-); the null-tetrad
// radial legs give D = d/dr and Delta = -(chi^2/2) d/dr on static functions.
struct Background {
    double r = 0.0;
    BlackHoleParams params;

    Jet chi2;     // metric function
    Jet R;        // areal radius
    Jet phi;      // dilaton
    Jet xi;       // exp(2 a phi) with the sign convention xi < 0
    Jet Dphi;     // D phi = phi'
    Jet Dlphi;    // Delta phi = -(chi^2/2) phi'
    Jet rho;      // -R'/R
    Jet mu;       // (chi^2/2) rho
    Jet gamma;    // (chi^2)'/4
    Jet phi1sq;   // phi_1^2 = -Q^2/(4R^4), real negative
    Jet Phi00;    // -(D phi)^2
    Jet Phi22;    // -(Delta phi)^2
    Jet Phi11;    // -(D phi)(Delta phi)/2 - 2 xi phi_1^2
    Jet Lambda;   // -(D phi)(Delta phi)/6
    Jet Psi2;     // 2 gamma rho - (2/3)(D phi)(Delta phi)
    Jet F1;       // 8 (gamma D phi + a xi phi_1^2)/chi^2
    Jet F2;       // 2 (mu D phi + a xi phi_1^2)
    Jet a_over_Dphi;  // exact ratio a/phi', finite for every a >= 0

    cplx phi1() const {
        // phi_1 = i Q / (2 R^2); purely imaginary, phi_1 + conj(phi_1) = 0
        double R2 = (R * R).value().real();
        return cplx(0.0, params.Q / (2.0 * R2));
    }
};

inline Background eval_background(const BlackHoleParams& p, double r,
                                  int order = Jet::kMaxOrder) {
    if (r <= p.r_plus) throw HorizonDomain("radius must exceed the outer horizon");

    Background b;
    b.r = r;
    b.params = p;

    const double a2 = p.a * p.a;
    const double eta = (1.0 - a2) / (1.0 + a2);
    const double beta = a2 / (1.0 + a2);

    Jet rj = Jet::variable(r, order);
    Jet wp = 1.0 - p.r_plus / rj;   // 1 - r+/r
    Jet wm = 1.0 - p.r_minus / rj;  // 1 - r-/r

    b.chi2 = wp * jet_pow(wm, eta);
    b.R = rj * jet_pow(wm, beta);
    b.phi = (-p.a / (1.0 + a2)) * jet_log(wm);
    b.xi = -jet_pow(wm, 2.0 * beta);

    b.Dphi = b.phi.derivative();
    b.Dlphi = -0.5 * (b.chi2 * b.Dphi);
    b.rho = -(b.R.derivative() / b.R.truncated(order - 1));
    b.mu = 0.5 * (b.chi2 * b.rho);
    b.gamma = 0.25 * b.chi2.derivative();

    double Q2 = p.Q * p.Q;
    b.phi1sq = -Q2 * jet_ipow(b.R, -4) * 0.25;
    b.Phi00 = -(b.Dphi * b.Dphi);
    b.Phi22 = -(b.Dlphi * b.Dlphi);
    b.Phi11 = -0.5 * (b.Dphi * b.Dlphi) - 2.0 * (b.xi * b.phi1sq);
    b.Lambda = (-1.0 / 6.0) * (b.Dphi * b.Dlphi);
    b.Psi2 = 2.0 * (b.gamma * b.rho) - (2.0 / 3.0) * (b.Dphi * b.Dlphi);
    b.F1 = 8.0 * ((b.gamma * b.Dphi + p.a * (b.xi * b.phi1sq)) / b.chi2);
    b.F2 = 2.0 * (b.mu * b.Dphi) + 2.0 * p.a * (b.xi * b.phi1sq);

    // phi' = -(a/(1+a^2)) r_minus / (r (r - r_minus)), so the ratio a/phi'
    // has the closed form below; it stays finite as a -> 0 where phi' -> 0.
    b.a_over_Dphi = -(1.0 + a2) / p.r_minus * (rj * (rj - p.r_minus));

    return b;
}

struct BackgroundResiduals {
    cplx maxwell_D;       // (D - 2 rho) phi_1
    cplx maxwell_Delta;   // (Delta + 2 mu) phi_1
    double dilaton;       // D Delta phi + 2 mu D phi - 2 a xi phi_1^2
    double scale;         // largest participating term, for relative tests
};

inline BackgroundResiduals background_residuals(const BlackHoleParams& p, double r) {
    Background b = eval_background(p, r, 3);

    // phi_1 = i Q/(2 R^2) as a jet
    Jet phi1 = cplx(0.0, 0.5 * p.Q) * jet_ipow(b.R, -2);

    BackgroundResiduals out;
    Jet mD = phi1.derivative() - 2.0 * (b.rho * phi1);
    Jet mDl = -0.5 * (b.chi2 * phi1.derivative()) + 2.0 * (b.mu * phi1);
    out.maxwell_D = mD.value();
    out.maxwell_Delta = mDl.value();

    Jet dil = b.Dlphi.derivative() + 2.0 * (b.mu * b.Dphi) - 2.0 * p.a * (b.xi * b.phi1sq);
    out.dilaton = dil.value().real();

    double s = std::abs(phi1.derivative().value());
    s = std::max(s, std::abs((2.0 * (b.rho * phi1)).value()));
    s = std::max(s, std::abs((2.0 * (b.mu * b.Dphi)).value()));
    s = std::max(s, std::abs(b.Dlphi.derivative().value()));
    out.scale = std::max(s, 1e-30);
    return out;
}

}  // namespace dbp
