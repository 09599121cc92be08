#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "ising/common.hpp"

namespace ising {

enum class Boundary { Torus, Cylinder };

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Site {
    int col = 0;  // 0 <= col < L, horizontal
    int row = 0;  // 0 <= row < M, vertical
    bool operator==(const Site&) const = default;
};

/// Discrete L x M lattice with spacing a. Horizontal direction is always
/// periodic; the vertical direction is periodic on the torus and free on the
/// cylinder. Site (i, j) sits at continuum position (i*a, j*a).
class LatticeGeometry {
public:
    LatticeGeometry(int L, int M, double a, Boundary boundary, double aspect_bound = 10.0);

    int L() const { return L_; }
    int M() const { return M_; }
    double a() const { return a_; }
    Boundary boundary() const { return boundary_; }
    bool is_torus() const { return boundary_ == Boundary::Torus; }
    std::int64_t n_sites() const { return static_cast<std::int64_t>(L_) * M_; }
    double ell1() const { return a_ * L_; }
    double ell2() const { return a_ * M_; }

    std::int64_t site_index(Site s) const { return static_cast<std::int64_t>(s.row) * L_ + s.col; }
    Site site_at(std::int64_t index) const {
        return Site{static_cast<int>(index % L_), static_cast<int>(index / L_)};
    }

    Vec2 position(Site s) const { return Vec2{s.col * a_, s.row * a_}; }

    /// Neighbor in direction dir (1 = +x, 2 = +y). Returns false when the
    /// bond leaves the lattice (cylinder top row). `crosses_seam` reports a
    /// wrap through the periodic identification, used for fermion sectors.
    bool neighbor(Site s, int dir, Site& out, bool& crosses_seam) const;

    /// Closest lattice site to a continuum point, ties resolved to the
    /// left/bottom. Throws when the point cannot be resolved inside the
    /// lattice (cylinder vertical overflow).
    Site snap(Vec2 x) const;

    /// Minimal image displacement between two sites, in lattice units.
    std::array<double, 2> displacement(Site from, Site to) const;

    std::string describe() const;

private:
    int L_;
    int M_;
    double a_;
    Boundary boundary_;
};

/// Energy observable of a bond: continuum anchor point x, direction j in
/// {1, 2}. Resolves to the bond ([x], [x] + a e_j).
struct BondObservable {
    Vec2 x;
    int dir = 1;
};

/// Resolved bond: both endpoints exist in the lattice.
struct ResolvedBond {
    Site base;
    int dir = 1;
    bool operator==(const ResolvedBond&) const = default;
};

ResolvedBond resolve_bond(const LatticeGeometry& g, const BondObservable& b);

}  // namespace ising
