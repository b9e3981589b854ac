#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>

#include "spinor_em/errors.hpp"

namespace spinor_em {

/// Cubic periodic grid: n sites per axis, physical box length L per axis.
/// Site (ix,iy,iz) sits at x_j = i_j * spacing; linear storage is row-major
/// over (z,y,x) with x fastest.
struct GridSpec {
    int n = 0;
    double box_length = 0.0;

    GridSpec() = default;
    GridSpec(int n_, double box_length_) : n(n_), box_length(box_length_) {
        if (n < 4 || n % 2 != 0 || !(box_length > 0.0))
            throw InvalidGrid();
    }

    double spacing() const { return box_length / n; }
    std::size_t sites() const { return std::size_t(n) * n * n; }
    double volume() const { return box_length * box_length * box_length; }
    double cell_volume() const { return spacing() * spacing() * spacing(); }

    std::size_t site(int ix, int iy, int iz) const {
        return (std::size_t(iz) * n + iy) * n + ix;
    }
    bool operator==(const GridSpec& o) const {
        return n == o.n && box_length == o.box_length;
    }
};

/// Integer wavevector label m, one component per axis, each in (-n/2, n/2].
/// Physical wavevector k = 2*pi*m/L.
struct ModeIndex {
    std::array<int, 3> m{0, 0, 0};

    bool is_zero() const { return m[0] == 0 && m[1] == 0 && m[2] == 0; }
    bool operator==(const ModeIndex& o) const { return m == o.m; }
    bool operator<(const ModeIndex& o) const { return m < o.m; }
    ModeIndex negated() const { return ModeIndex{{-m[0], -m[1], -m[2]}}; }

    std::array<double, 3> wavevector(double box_length) const {
        const double f = 2.0 * std::numbers::pi / box_length;
        return {f * m[0], f * m[1], f * m[2]};
    }
    double wavenumber(double box_length) const {
        auto k = wavevector(box_length);
        return std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
    }
    bool valid_on(const GridSpec& g) const {
        for (int c : m)
            if (c <= -g.n / 2 || c > g.n / 2) return false;
        return true;
    }
};

/// Signed integer frequency for storage index i in [0, n): i <= n/2 maps to
/// m = i, otherwise m = i - n. Inverse of `frequency_slot`.
inline int signed_frequency(int idx, int n) { return idx <= n / 2 ? idx : idx - n; }

/// Storage index for signed frequency m in (-n/2, n/2].
inline int frequency_slot(int m, int n) { return m >= 0 ? m : m + n; }

}  // namespace spinor_em
