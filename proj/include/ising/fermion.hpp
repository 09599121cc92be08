#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>

#include <Eigen/Dense>

#include "ising/geometry.hpp"
#include "ising/pfaffian.hpp"

namespace ising {

// Grassmann representation of the nearest-neighbor model: four anticommuting
// variables per site, one per bond direction, with a quadratic "city" form
// coupling them on site and bond terms t eta eta across edges. The Gibbs
// partition function factorizes as Z = 2^N prod_b cosh(K_b) * W(t), where
// W(t) is the even-subgraph polynomial, and W is a fixed signed combination
// of sector Pfaffians of this quadratic form (periodic/antiperiodic wraps).
// The orientation constants below are certified against enumeration in the
// test suite.

enum Leg : int { LegR = 0, LegL = 1, LegU = 2, LegD = 3 };

struct LegPoint {
    Site site;
    int leg = 0;  // Leg for 4-component access, 0/1 for the psi view
};

/// Wrap signs: +1 periodic, -1 antiperiodic (fermion sector labels).
struct Sector {
    int eps1 = -1;
    int eps2 = -1;
    bool operator==(const Sector&) const = default;
};

struct SectorTerm {
    Sector sector;
    double coeff = 0.0;
};

/// Signed sector combination reproducing W(t). Cylinder uses two horizontal
/// sectors, the torus four.
std::vector<SectorTerm> sector_expansion(Boundary boundary);

/// On-site orientation matrix (antisymmetric 4x4, entries +-1).
const Eigen::Matrix4d& city_matrix();

/// Rows of the two-component projection defining psi_+ / psi_-. These are the
/// city rows of the missing vertical legs, so psi_+ has exactly vanishing
/// propagator on the cylinder bottom row and psi_- on the top row.
const Eigen::Matrix<double, 2, 4>& psi_projection();

struct BondWeights {
    double t1 = 0.0;  // tanh(beta J), horizontal
    double t2 = 0.0;  // vertical
};

BondWeights tanh_weights(double beta, double J = 1.0);

/// Dense real quadratic form; legs indexed 4 * site_index + leg.
Eigen::MatrixXd dense_quadratic_form(const LatticeGeometry& g, BondWeights t, Sector s);

/// Momentum grid for n sites with wrap sign eps: k_m = 2 pi (m + delta/2) / n.
std::vector<double> momentum_grid(int n, int eps);

/// 4x4 momentum block of the quadratic form on the torus.
Eigen::Matrix4cd torus_block(BondWeights t, double k1, double k2);

/// 4M x 4M block at horizontal momentum k1 on the cylinder (rows stacked).
Eigen::MatrixXcd cylinder_block(int M, BondWeights t, double k1);

struct LogSigned {
    double log_abs = -std::numeric_limits<double>::infinity();
    double sign = 0.0;  // -1, 0, +1
};

/// Per-sector solver: signed log Pfaffian of the quadratic form and the leg
/// propagator <eta_p eta_q> restricted to a requested leg set.
class SectorSolver {
public:
    virtual ~SectorSolver() = default;
    virtual LogSigned log_pfaffian() const = 0;
    virtual Eigen::MatrixXd leg_propagator(std::span<const LegPoint> legs) const = 0;
    /// Smallest momentum-block |Pf| relative to typical, for zero-mode guards.
    virtual double singularity_margin() const = 0;
};

enum class SolverMethod { Dense, Momentum, Auto };

std::unique_ptr<SectorSolver> make_sector_solver(const LatticeGeometry& g, BondWeights t, Sector s,
                                                 SolverMethod method = SolverMethod::Auto);

/// Which single sector carries the largest weight (used by the "dominant"
/// policy and by the propagator exposed to the RG machinery).
Sector dominant_sector(const LatticeGeometry& g);

/// Two-component fermion propagator of the critical block (spec type).
/// Kernel values are real for this model; the complex return type matches
/// the interface contract.
class FermionPropagator {
public:
    FermionPropagator(const LatticeGeometry& g, double beta, std::optional<Sector> sector = {});

    const LatticeGeometry& geometry() const { return geom_; }
    double beta() const { return beta_; }
    Sector sector() const { return sector_; }

    /// <psi_{omega}(p) psi_{omega'}(q)>, omega in {0 (+), 1 (-)}.
    cdouble kernel(Site p, int omega_p, Site q, int omega_q) const;

    /// 2x2 block of all omega combinations, rows = omega_p, cols = omega_q.
    Eigen::Matrix2d block(Site p, Site q) const;

    /// Torus only: psi-projected momentum-space 2x2 block at grid index m.
    Eigen::Matrix2cd momentum_block_psi(int m1, int m2) const;
    std::array<double, 2> momentum_at(int m1, int m2) const;

    /// Raw 4-component leg propagator among arbitrary legs (internal use).
    Eigen::MatrixXd leg_block(std::span<const LegPoint> legs) const;

private:
    LatticeGeometry geom_;
    double beta_;
    Sector sector_;
    BondWeights t_;
    // torus: cached inverse blocks over the momentum grid
    std::vector<Eigen::Matrix4cd> tinv_;
    std::vector<double> k1_, k2_;
    // cylinder: cached per-k1 inverses of the vertical problem
    std::vector<Eigen::MatrixXcd> cyl_inv_;
    std::vector<double> k1grid_;

    double leg_entry(const LegPoint& p, const LegPoint& q) const;
    friend class ScaleDecomposition;
};

}  // namespace ising
