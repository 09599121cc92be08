#pragma once

#include <vector>

#include "ising/interaction.hpp"

namespace ising {

/// Exact Gibbs expectations by full enumeration of all 2^(L*M) spin
/// configurations. Hard limit of 24 sites. One sweep serves any number of
/// temperatures and bond sets; moments are indexed by subset mask so callers
/// can form centered products.
class BruteForce {
public:
    struct Request {
        std::vector<ResolvedBond> bonds;
    };

    /// moments[r][b][mask] = < prod_{k in mask} sigma_{bond_k} > at betas[b].
    struct Result {
        std::vector<std::vector<std::vector<double>>> moments;
    };

    static Result sweep(const LatticeGeometry& g, const Interaction& in,
                        const std::vector<double>& betas, const std::vector<Request>& requests);
};

/// Centered product expectation < prod_k (sigma_k - <sigma_k>) > / a^n,
/// the enumeration-backed version of the multipoint energy correlation.
double brute_force_correlation(const LatticeGeometry& g, double beta, const Interaction& in,
                               const std::vector<BondObservable>& bonds);

double brute_force_correlation_resolved(const LatticeGeometry& g, double beta,
                                        const Interaction& in,
                                        const std::vector<ResolvedBond>& bonds);

/// Centered product from raw subset moments (shared with the MC estimators).
double centered_from_moments(const std::vector<double>& moments_by_mask, int n);

}  // namespace ising
