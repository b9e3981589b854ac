#pragma once

#include <array>
#include <utility>

#include "spinor_em/fields.hpp"
#include "spinor_em/grid.hpp"

namespace spinor_em::spectral {

using algebra::cplx;
using algebra::Vec3;
using algebra::Vec4;
using fields::ComplexField;
using fields::RealField;
using fields::SpinorField;

/// Discrete Fourier image of a spinor field, normalized so that
/// phi(x) = (1/sqrt(V)) sum_k phihat(k) e^{ik.x}. With this choice Parseval
/// reads sum_sites |phi|^2 h^3 = sum_modes |phihat|^2.
struct ModeAmplitudes {
    GridSpec grid;
    std::array<ComplexField, 4> comp;

    ModeAmplitudes() = default;
    explicit ModeAmplitudes(const GridSpec& g) : grid(g) {
        for (auto& c : comp) c.assign(g.sites(), cplx(0.0, 0.0));
    }
    Vec4 at(std::size_t slot) const {
        return Vec4(comp[0][slot], comp[1][slot], comp[2][slot], comp[3][slot]);
    }
    void set(std::size_t slot, const Vec4& v) {
        for (int c = 0; c < 4; ++c) comp[c][slot] = v[c];
    }
    /// Storage slot of an integer mode label.
    std::size_t slot(const ModeIndex& m) const {
        return grid.site(frequency_slot(m.m[0], grid.n), frequency_slot(m.m[1], grid.n),
                         frequency_slot(m.m[2], grid.n));
    }
};

ModeAmplitudes forward_transform(const SpinorField& s);
SpinorField inverse_transform(const ModeAmplitudes& m);

/// Spectral first derivative along an axis (0=x, 1=y, 2=z).
ComplexField spectral_partial(const ComplexField& f, const GridSpec& g, int axis);
RealField spectral_partial(const RealField& f, const GridSpec& g, int axis);

enum class Helicity { plus, minus, zero_long, zero_scalar };

/// C * u * e^{i(k.x - w t)} with w = alpha |k|.
struct PlaneWaveSpec {
    ModeIndex mode;
    int alpha = +1;  // energy sign, +1 or -1
    Helicity helicity = Helicity::minus;
    cplx amplitude{1.0, 0.0};
};

/// Right-handed orthonormal triad (e1, e2, khat): e1 = R x, e2 = R y for the
/// rotation R taking z to khat about z cross khat (antipode: rotation about x
/// by pi). Fixes every phase convention downstream.
std::pair<Vec3, Vec3> transverse_triad(const Vec3& khat);

/// Helicity eigencolumns (+1, -1) for direction khat: zero fourth component,
/// unit norm, orthogonal to khat, eigenvectors of the helicity operator.
/// For khat = z they are (1, +-i, 0, 0)/sqrt(2).
std::pair<Vec4, Vec4> helicity_columns(const Vec3& khat);

/// The transverse polarization pair for a lattice mode; throws ZeroWavevector
/// at m = 0. Returned in the order (helicity +1, helicity -1).
std::pair<Vec4, Vec4> transverse_unit_vectors(const ModeIndex& mode);

SpinorField plane_wave(const PlaneWaveSpec& spec, const GridSpec& grid, double time);

/// Splits a field into helicity +1, helicity -1, zero-helicity longitudinal,
/// and scalar (fourth-component) parts. The parts sum to the input exactly;
/// k = 0 spatial content is classified longitudinal by convention.
struct HelicityParts {
    SpinorField plus, minus, zero_long, scalar;
};
HelicityParts helicity_decompose(const SpinorField& s);

/// Zeroes the longitudinal and scalar buckets; idempotent, and the output has
/// k.phihat = 0 per mode and vanishing fourth component.
SpinorField transverse_project(const SpinorField& s);

/// Polarization bases of the mode expansion: eps (orthonormal), the
/// accompanying eps_bar (sign-flipped fourth column), and the momentum-side
/// columns v, v_bar built with k_4 = i|k| (positive-frequency convention).
struct ModeBasis {
    std::array<Vec4, 4> eps, eps_bar, v, v_bar;
};
ModeBasis mode_basis(const ModeIndex& mode, double box_length);

}  // namespace spinor_em::spectral
