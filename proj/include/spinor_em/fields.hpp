#pragma once

#include <array>
#include <complex>
#include <vector>

#include "spinor_em/algebra.hpp"
#include "spinor_em/grid.hpp"

namespace spinor_em::fields {

using algebra::cplx;
using algebra::Vec3;
using algebra::Vec4;

using RealField = std::vector<double>;
using ComplexField = std::vector<cplx>;

enum class DerivativeScheme { spectral, centered2 };

/// Four-component complex field phi = (phi_1, phi_2, phi_3, xi) on the grid.
/// Component-major storage, sites row-major over (z,y,x).
struct SpinorField {
    GridSpec grid;
    std::array<ComplexField, 4> comp;

    SpinorField() = default;
    explicit SpinorField(const GridSpec& g) : grid(g) {
        for (auto& c : comp) c.assign(g.sites(), cplx(0.0, 0.0));
    }
    Vec4 at(std::size_t site) const {
        return Vec4(comp[0][site], comp[1][site], comp[2][site], comp[3][site]);
    }
    void set(std::size_t site, const Vec4& v) {
        for (int c = 0; c < 4; ++c) comp[c][site] = v[c];
    }
};

/// Classical electric/magnetic pair, real components.
struct EMField {
    GridSpec grid;
    std::array<RealField, 3> e, b;

    EMField() = default;
    explicit EMField(const GridSpec& g) : grid(g) {
        for (auto& c : e) c.assign(g.sites(), 0.0);
        for (auto& c : b) c.assign(g.sites(), 0.0);
    }
};

/// Vector potential (real) and scalar potential V; the imaginary fourth
/// component iV exists only inside conversion formulas.
struct PotentialField {
    GridSpec grid;
    std::array<RealField, 3> a;
    RealField v;

    PotentialField() = default;
    explicit PotentialField(const GridSpec& g) : grid(g) {
        for (auto& c : a) c.assign(g.sites(), 0.0);
        v.assign(g.sites(), 0.0);
    }
};

/// Caller-supplied time derivatives of the potentials at one time slice.
struct PotentialTimeDerivs {
    std::array<RealField, 3> a_dot;
    RealField v_dot;

    PotentialTimeDerivs() = default;
    explicit PotentialTimeDerivs(const GridSpec& g) {
        for (auto& c : a_dot) c.assign(g.sites(), 0.0);
        v_dot.assign(g.sites(), 0.0);
    }
};

/// Current density and charge density; j_4 = i*rho implied.
struct CurrentField {
    GridSpec grid;
    std::array<RealField, 3> j;
    RealField rho;

    CurrentField() = default;
    explicit CurrentField(const GridSpec& g) : grid(g) {
        for (auto& c : j) c.assign(g.sites(), 0.0);
        rho.assign(g.sites(), 0.0);
    }
};

/// Real spatial triple plus a complex fourth component (the bilinears
/// j_mu = -i phi^+ Lambda_mu phi have exactly this structure).
struct FourVectorField {
    GridSpec grid;
    std::array<RealField, 3> spatial;
    ComplexField fourth;

    FourVectorField() = default;
    explicit FourVectorField(const GridSpec& g) : grid(g) {
        for (auto& c : spatial) c.assign(g.sites(), 0.0);
        fourth.assign(g.sites(), cplx(0.0, 0.0));
    }
};

/// phi_i = (B_i + i E_i)/sqrt(2 mu0), fourth component zero.
SpinorField spinor_from_eb(const EMField& f, double mu0);

/// Inverse of spinor_from_eb. Throws TransversalityViolation when
/// max|xi| > tol: the spinor then encodes the combined field, not pure
/// electromagnetism.
EMField eb_from_spinor(const SpinorField& s, double mu0, double tol);

/// phi_vec = (curl A - i grad V - i dA/dt)/sqrt(2 mu0),
/// xi = (div A + dV/dt)/sqrt(2 mu0). Spatial derivatives by the chosen
/// scheme; time derivatives caller-supplied.
SpinorField spinor_from_potential(const PotentialField& p, const PotentialTimeDerivs& dp,
                                  double mu0, DerivativeScheme scheme);

/// j_mu = -i phi^+ Lambda_mu phi per site. The spatial part is real by the
/// antisymmetry of the spatial Lambdas; -i * fourth is the energy density
/// for transverse fields.
FourVectorField four_current_flux(const SpinorField& s);

/// max over sites of |xi|.
double transversality_residual(const SpinorField& s);

/// Integral of the energy density phi^+ phi over the box (compensated sum,
/// fixed order).
double total_energy(const SpinorField& s);

/// Integral of the spatial flux density over the box.
Vec3 total_poynting(const SpinorField& s);

}  // namespace spinor_em::fields
