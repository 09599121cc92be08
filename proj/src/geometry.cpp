#include "ising/geometry.hpp"

#include <sstream>

namespace ising {

LatticeGeometry::LatticeGeometry(int L, int M, double a, Boundary boundary, double aspect_bound)
    : L_(L), M_(M), a_(a), boundary_(boundary) {
    if (L < 2 || M < 2) throw ValidationError("lattice must have L, M >= 2");
    if (!(a > 0.0)) throw ValidationError("lattice spacing must be positive");
    double ratio = static_cast<double>(L) / M;
    if (ratio > aspect_bound || ratio < 1.0 / aspect_bound)
        throw ValidationError("aspect ratio L/M outside configured bound");
}

bool LatticeGeometry::neighbor(Site s, int dir, Site& out, bool& crosses_seam) const {
    crosses_seam = false;
    out = s;
    if (dir == 1) {
        out.col = s.col + 1;
        if (out.col == L_) {
            out.col = 0;
            crosses_seam = true;
        }
        return true;
    }
    if (dir == 2) {
        out.row = s.row + 1;
        if (out.row == M_) {
            if (!is_torus()) return false;
            out.row = 0;
            crosses_seam = true;
        }
        return true;
    }
    throw ValidationError("bond direction must be 1 or 2");
}

namespace {

// Nearest integer with exact ties going down ("left/bottom").
int snap_coord(double u) {
    double f = std::floor(u + 0.5);
    if (u + 0.5 == f) f -= 1.0;  // tie: u halfway between f-1 and f
    return static_cast<int>(f);
}

int mod_wrap(int v, int n) {
    int r = v % n;
    return r < 0 ? r + n : r;
}

}  // namespace

Site LatticeGeometry::snap(Vec2 x) const {
    int i = snap_coord(x.x / a_);
    int j = snap_coord(x.y / a_);
    i = mod_wrap(i, L_);
    if (is_torus()) {
        j = mod_wrap(j, M_);
    } else if (j < 0 || j >= M_) {
        throw ValidationError("point resolves outside the cylinder");
    }
    return Site{i, j};
}

std::array<double, 2> LatticeGeometry::displacement(Site from, Site to) const {
    double dx = to.col - from.col;
    if (dx > L_ / 2.0) dx -= L_;
    if (dx < -L_ / 2.0) dx += L_;
    double dy = to.row - from.row;
    if (is_torus()) {
        if (dy > M_ / 2.0) dy -= M_;
        if (dy < -M_ / 2.0) dy += M_;
    }
    return {dx, dy};
}

std::string LatticeGeometry::describe() const {
    std::ostringstream os;
    os << (is_torus() ? "torus" : "cylinder") << ":" << L_ << "x" << M_ << ":a=" << a_;
    return os.str();
}

ResolvedBond resolve_bond(const LatticeGeometry& g, const BondObservable& b) {
    if (b.dir != 1 && b.dir != 2) throw ValidationError("bond direction must be 1 or 2");
    Site base = g.snap(b.x);
    Site other;
    bool seam = false;
    if (!g.neighbor(base, b.dir, other, seam))
        throw ValidationError("bond endpoint [x] + a e_j leaves the lattice");
    return ResolvedBond{base, b.dir};
}

}  // namespace ising
