#include "spinor_em/algebra.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace spinor_em::algebra {

namespace {

Mat4 from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Mat4 m = Mat4::Zero();
    int i = 0;
    for (auto& row : rows) {
        int j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

const std::array<Mat4, 4>& lambda_matrices() {
    static const std::array<Mat4, 4> lambdas = [] {
        std::array<Mat4, 4> l;
        l[0] = from_rows({{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
        l[1] = from_rows({{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}});
        l[2] = from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
        l[3] = -Mat4::Identity();
        return l;
    }();
    return lambdas;
}

const std::array<Mat4, 3>& spin_matrices() {
    static const std::array<Mat4, 3> spins = [] {
        const cplx i(0.0, 1.0);
        std::array<Mat4, 3> s;
        s[0] = Mat4::Zero();
        s[0](1, 2) = -i;
        s[0](2, 1) = i;
        s[1] = Mat4::Zero();
        s[1](0, 2) = i;
        s[1](2, 0) = -i;
        s[2] = Mat4::Zero();
        s[2](0, 1) = -i;
        s[2](1, 0) = i;
        return s;
    }();
    return spins;
}

const std::array<Mat4, 3>& isospin_matrices() {
    static const std::array<Mat4, 3> deltas = [] {
        std::array<Mat4, 3> d;
        d[0] = from_rows({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}});
        d[1] = from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
        d[2] = from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
        return d;
    }();
    return deltas;
}

Mat4 wave_generator(const Vec3& k) {
    const auto& l = lambda_matrices();
    return k[0] * l[0] + k[1] * l[1] + k[2] * l[2];
}

namespace {

void require_unit(const Vec3& v) {
    if (std::abs(v.norm() - 1.0) > 1e-12) throw ZeroDirection();
}

}  // namespace

Mat4 helicity_operator(const Vec3& khat) {
    require_unit(khat);
    const auto& s = spin_matrices();
    return khat[0] * s[0] + khat[1] * s[1] + khat[2] * s[2];
}

Mat4 rotation_rep(const Vec3& axis, double angle) {
    require_unit(axis);
    const cplx i(0.0, 1.0);
    Mat4 generator = -i * angle * helicity_operator(axis);
    return generator.exp();
}

double LorentzMatrix::orthogonality_defect() const {
    return max_abs(a.transpose() * a - Mat4::Identity());
}

void LorentzMatrix::validate() const {
    if (orthogonality_defect() > 1e-12) throw InvalidLorentz();
}

LorentzMatrix LorentzMatrix::identity() { return {Mat4::Identity()}; }

LorentzMatrix LorentzMatrix::rotation(const Vec3& axis, double angle) {
    require_unit(axis);
    Eigen::Matrix3d r =
        Eigen::AngleAxisd(angle, axis).toRotationMatrix();
    Mat4 a = Mat4::Identity();
    a.topLeftCorner<3, 3>() = r.cast<cplx>();
    return {a};
}

LorentzMatrix LorentzMatrix::boost(const Vec3& direction, double rapidity) {
    require_unit(direction);
    const cplx i(0.0, 1.0);
    const double ch = std::cosh(rapidity);
    const double sh = std::sinh(rapidity);
    Mat4 a = Mat4::Identity();
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            a(p, q) = (p == q ? 1.0 : 0.0) + (ch - 1.0) * direction[p] * direction[q];
    for (int p = 0; p < 3; ++p) {
        a(p, 3) = i * sh * direction[p];
        a(3, p) = -i * sh * direction[p];
    }
    a(3, 3) = ch;
    return {a};
}

Mat4 spinor_rep(const LorentzMatrix& lm) {
    lm.validate();
    const auto& l = lambda_matrices();
    Mat4 sum = Mat4::Zero();
    for (int mu = 0; mu < 4; ++mu)
        sum += lm.a(mu, 3) * l[mu].inverse();
    return -sum * lm.a;
}

std::map<std::string, double> algebra_report() {
    const auto& l = lambda_matrices();
    const auto& s = spin_matrices();
    const auto& d = isospin_matrices();
    const cplx i(0.0, 1.0);
    std::map<std::string, double> report;

    double dev = 0.0;
    for (const auto& m : l)
        dev = std::max(dev, max_abs(m.adjoint() * m - Mat4::Identity()));
    report["lambda-unitarity"] = dev;

    dev = 0.0;
    for (int j = 0; j < 3; ++j) {
        dev = std::max(dev, max_abs(l[j] + l[j].transpose()));
        dev = std::max(dev, l[j].imag().cwiseAbs().maxCoeff());
    }
    report["lambda-antisymmetry"] = dev;

    dev = 0.0;
    for (const auto& m : s) dev = std::max(dev, max_abs(m - m.adjoint()));
    report["spin-hermiticity"] = dev;

    // [s_i, s_j] = i eps_ijk s_k
    dev = 0.0;
    for (int a = 0; a < 3; ++a) {
        int b = (a + 1) % 3, c = (a + 2) % 3;
        dev = std::max(dev, max_abs(s[a] * s[b] - s[b] * s[a] - i * s[c]));
    }
    report["spin-commutator"] = dev;

    // s^2 = diag(2,2,2,0): spin 1 on the vector part, scalar fourth slot
    Mat4 s2 = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
    Mat4 expected = Mat4::Zero();
    expected(0, 0) = expected(1, 1) = expected(2, 2) = 2.0;
    report["spin-squared-spectrum"] = max_abs(s2 - expected);

    dev = 0.0;
    for (const auto& m : d) {
        dev = std::max(dev, max_abs(m + m.transpose()));
        dev = std::max(dev, m.imag().cwiseAbs().maxCoeff());
    }
    report["isospin-antisymmetry"] = dev;

    // [(i/2)D_a, (i/2)D_b] = i eps_abc (i/2)D_c
    dev = 0.0;
    for (int a = 0; a < 3; ++a) {
        int b = (a + 1) % 3, c = (a + 2) % 3;
        Mat4 sa = 0.5 * i * d[a], sb = 0.5 * i * d[b], sc = 0.5 * i * d[c];
        dev = std::max(dev, max_abs(sa * sb - sb * sa - i * sc));
    }
    report["isospin-su2"] = dev;

    report["isospin-product"] = max_abs(d[0] * d[1] - d[2]);

    // internal generators commute with every Lambda (symmetry of the equation)
    dev = 0.0;
    for (const auto& di : d)
        for (const auto& lm : l)
            dev = std::max(dev, max_abs(di * lm - lm * di));
    report["lambda-isospin-commute"] = dev;

    // helicity commutes with the free-evolution generator, sampled directions
    const Vec3 dirs[] = {
        Vec3(0, 0, 1), Vec3(1, 0, 0), Vec3(0, 1, 0),
        Vec3(1, 1, 1).normalized(), Vec3(0.3, -0.4, 0.5).normalized(),
        Vec3(-2, 1, 7).normalized()};
    dev = 0.0;
    for (const auto& khat : dirs) {
        Mat4 h = helicity_operator(khat);
        Mat4 g = wave_generator(khat);
        dev = std::max(dev, max_abs(h * g - g * h));
    }
    report["helicity-lambda-commute"] = dev;

    return report;
}

}  // namespace spinor_em::algebra
