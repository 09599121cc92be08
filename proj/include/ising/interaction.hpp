#pragma once

#include <utility>
#include <vector>

#include "ising/geometry.hpp"

namespace ising {

/// One translation-invariant coupling class: an even set of site offsets
/// (including (0,0) by convention for the anchor) and its strength V(X).
struct CouplingClass {
    std::vector<std::pair<int, int>> offsets;
    double strength = 0.0;
};

/// Hamiltonian data: H = -J sum_<xy> s_x s_y + lambda sum_X V(X) s_X,
/// with V supported on even sets of bounded range.
class Interaction {
public:
    Interaction(double J, double lambda, std::vector<CouplingClass> couplings = {},
                int range_bound = 3);

    static Interaction nearest_neighbor(double J = 1.0) { return Interaction(J, 0.0); }
    /// Next-to-nearest-neighbor pair perturbation, both diagonals, V = v.
    static Interaction nnn_pair(double J, double lambda, double v = -1.0);

    double J() const { return J_; }
    double lambda() const { return lambda_; }
    const std::vector<CouplingClass>& couplings() const { return couplings_; }
    bool has_perturbation() const { return lambda_ != 0.0 && !couplings_.empty(); }

    /// True when every term is a pair coupling with ferromagnetic effective
    /// strength, the regime where cluster updates are valid.
    bool is_ferromagnetic_pair() const;

    int range() const { return range_; }

private:
    double J_;
    double lambda_;
    std::vector<CouplingClass> couplings_;
    int range_ = 1;
};

/// Instantiated coupling terms on a concrete geometry: lists of site-index
/// tuples with strengths, plus per-site incidence for fast local updates.
class InteractionTable {
public:
    InteractionTable(const LatticeGeometry& g, const Interaction& in);

    struct Term {
        std::vector<std::int32_t> sites;  // distinct site indices
        double strength = 0.0;            // full prefactor in H (sign included)
    };

    const std::vector<Term>& terms() const { return terms_; }
    const std::vector<std::vector<std::int32_t>>& incidence(/*site*/) const { return by_site_; }

    /// Total energy of a configuration of +-1 spins.
    double energy(const std::vector<std::int8_t>& spins) const;

    /// Energy change from flipping one spin.
    double flip_delta(const std::vector<std::int8_t>& spins, std::int32_t site) const;

private:
    std::vector<Term> terms_;
    std::vector<std::vector<std::int32_t>> by_site_;  // term indices touching a site
};

}  // namespace ising
