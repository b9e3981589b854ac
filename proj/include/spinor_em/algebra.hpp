#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <map>
#include <string>

#include "spinor_em/errors.hpp"

namespace spinor_em::algebra {

using cplx = std::complex<double>;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;
using Vec3 = Eigen::Vector3d;

inline constexpr double kExactTol = 1e-14;  // integer-entry identities
inline constexpr double kExpTol = 1e-12;    // exponential-based identities

/// The four unitary matrices of the field equation; the fourth is -I and the
/// spatial three are real antisymmetric with integer entries.
const std::array<Mat4, 4>& lambda_matrices();

/// Spin-1 generators acting on the first three spinor components; Hermitian,
/// fourth row and column zero.
const std::array<Mat4, 3>& spin_matrices();

/// Internal-symmetry generators; real antisymmetric, and (i/2)*Delta_i close
/// the su(2) algebra.
const std::array<Mat4, 3>& isospin_matrices();

/// Generator of free evolution at wavevector k: sum_j k_j Lambda_j.
/// Real antisymmetric, squares to -|k|^2 I.
Mat4 wave_generator(const Vec3& k);

/// Helicity operator s.khat for a unit direction khat.
/// Throws ZeroDirection if |khat| deviates from 1 beyond 1e-12.
Mat4 helicity_operator(const Vec3& khat);

/// exp(-i*angle*(axis.s)): spatial rotation on components 1-3, identity on
/// the fourth. Throws ZeroDirection for non-unit axis.
Mat4 rotation_rep(const Vec3& axis, double angle);

/// Transformation coefficients a_{mu,nu} in the imaginary-fourth-coordinate
/// convention: rotations are real in the spatial block, boosts carry
/// imaginary mixing entries. Complex-orthogonal: a^T a = I.
struct LorentzMatrix {
    Mat4 a;

    /// Max-norm deviation of a^T a from the identity.
    double orthogonality_defect() const;
    /// Throws InvalidLorentz when the defect exceeds 1e-12.
    void validate() const;

    static LorentzMatrix identity();
    /// Spatial rotation block (Rodrigues form) plus trivial fourth axis.
    static LorentzMatrix rotation(const Vec3& axis, double angle);
    /// Boost with rapidity eta along a unit direction: a_{j4} = i sinh(eta) n_j,
    /// a_{4j} = -i sinh(eta) n_j, spatial block 1 + (cosh(eta)-1) n n^T.
    static LorentzMatrix boost(const Vec3& direction, double rapidity);
};

/// Literal spinor transformation T = -(sum_mu a_{mu4} Lambda_mu^{-1}) * a,
/// with the trailing factor read as the 4x4 matrix acting on the spinor
/// column. Treated as a hypothesis: callers compare it against the rotation
/// and classical-boost oracles rather than trusting it.
Mat4 spinor_rep(const LorentzMatrix& a);

/// Runs every fixed-matrix identity check and returns the max absolute
/// deviation per identity, keyed by a stable name.
std::map<std::string, double> algebra_report();

}  // namespace spinor_em::algebra
