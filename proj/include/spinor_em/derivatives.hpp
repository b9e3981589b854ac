#pragma once

#include <cstddef>
#include <vector>

#include "spinor_em/grid.hpp"

namespace spinor_em::fd {

/// Second-order centered first difference along an axis (0=x, 1=y, 2=z),
/// periodic wrap.
template <typename Scalar>
std::vector<Scalar> centered_partial(const std::vector<Scalar>& f, const GridSpec& g,
                                     int axis) {
    const int n = g.n;
    const double inv2h = 1.0 / (2.0 * g.spacing());
    const std::ptrdiff_t stride = axis == 0 ? 1 : (axis == 1 ? n : std::ptrdiff_t(n) * n);
    std::vector<Scalar> out(f.size());
    for (int iz = 0; iz < n; ++iz)
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix) {
                const std::ptrdiff_t s = std::ptrdiff_t(g.site(ix, iy, iz));
                const int i = axis == 0 ? ix : (axis == 1 ? iy : iz);
                const std::ptrdiff_t up = i + 1 == n ? s - (n - 1) * stride : s + stride;
                const std::ptrdiff_t dn = i == 0 ? s + (n - 1) * stride : s - stride;
                out[s] = (f[up] - f[dn]) * inv2h;
            }
    return out;
}

/// Second-order centered Laplacian, periodic wrap.
template <typename Scalar>
std::vector<Scalar> centered_laplacian(const std::vector<Scalar>& f, const GridSpec& g) {
    const int n = g.n;
    const double invh2 = 1.0 / (g.spacing() * g.spacing());
    std::vector<Scalar> out(f.size(), Scalar(0));
    for (int axis = 0; axis < 3; ++axis) {
        const std::ptrdiff_t stride = axis == 0 ? 1 : (axis == 1 ? n : std::ptrdiff_t(n) * n);
        for (int iz = 0; iz < n; ++iz)
            for (int iy = 0; iy < n; ++iy)
                for (int ix = 0; ix < n; ++ix) {
                    const std::ptrdiff_t s = std::ptrdiff_t(g.site(ix, iy, iz));
                    const int i = axis == 0 ? ix : (axis == 1 ? iy : iz);
                    const std::ptrdiff_t up = i + 1 == n ? s - (n - 1) * stride : s + stride;
                    const std::ptrdiff_t dn = i == 0 ? s + (n - 1) * stride : s - stride;
                    out[s] += (f[up] - 2.0 * f[s] + f[dn]) * invh2;
                }
    }
    return out;
}

}  // namespace spinor_em::fd
