#include "ising/enumeration.hpp"

#include <bit>
#include <cmath>
#include <mutex>

namespace ising {

namespace {

struct BondRef {
    std::int32_t a, b;
};

}  // namespace

BruteForce::Result BruteForce::sweep(const LatticeGeometry& g, const Interaction& in,
                                     const std::vector<double>& betas,
                                     const std::vector<Request>& requests) {
    const int nsites = static_cast<int>(g.n_sites());
    if (nsites > 24) throw ValidationError("enumeration limited to 24 sites");
    const InteractionTable table(g, in);
    const int nb = static_cast<int>(betas.size());
    const int nr = static_cast<int>(requests.size());

    std::vector<std::vector<BondRef>> req_bonds(nr);
    for (int r = 0; r < nr; ++r) {
        for (const auto& bond : requests[r].bonds) {
            Site o;
            bool seam;
            if (!g.neighbor(bond.base, bond.dir, o, seam))
                throw ValidationError("bond endpoint leaves the lattice");
            req_bonds[r].push_back(BondRef{static_cast<std::int32_t>(g.site_index(bond.base)),
                                           static_cast<std::int32_t>(g.site_index(o))});
        }
        if (req_bonds[r].size() > 8) throw ValidationError("too many bonds in one request");
    }

    const std::uint64_t total = 1ULL << nsites;
    struct Acc {
        std::vector<double> z;                             // per beta
        std::vector<std::vector<std::vector<double>>> mo;  // [r][beta][mask]
    };
    const int nthreads = std::min<std::int64_t>(thread_count(), 8);
    const std::uint64_t nchunks =
        std::max<std::uint64_t>(nthreads * 4, std::min<std::uint64_t>(total, 1024));
    std::vector<Acc> partial(nchunks);

    auto run_chunk = [&](std::uint64_t c) {
        Acc& acc = partial[c];
        acc.z.assign(nb, 0.0);
        acc.mo.resize(nr);
        for (int r = 0; r < nr; ++r) {
            acc.mo[r].assign(nb, std::vector<double>(1ULL << req_bonds[r].size(), 0.0));
        }
        const std::uint64_t lo = total / nchunks * c + std::min<std::uint64_t>(c, total % nchunks);
        const std::uint64_t hi =
            total / nchunks * (c + 1) + std::min<std::uint64_t>(c + 1, total % nchunks);
        if (lo >= hi) return;

        std::vector<std::int8_t> spins(nsites);
        std::uint64_t gray = lo ^ (lo >> 1);
        for (int s = 0; s < nsites; ++s) spins[s] = (gray >> s) & 1 ? -1 : 1;
        double energy = table.energy(spins);

        std::vector<double> w(nb);
        std::vector<double> prod;
        for (std::uint64_t gidx = lo; gidx < hi; ++gidx) {
            for (int b = 0; b < nb; ++b) w[b] = std::exp(-betas[b] * energy);
            for (int b = 0; b < nb; ++b) acc.z[b] += w[b];
            for (int r = 0; r < nr; ++r) {
                const auto& bonds = req_bonds[r];
                const std::size_t nmask = 1ULL << bonds.size();
                prod.assign(nmask, 1.0);
                for (std::size_t mask = 1; mask < nmask; ++mask) {
                    int k = std::countr_zero(mask);
                    double v = static_cast<double>(spins[bonds[k].a] * spins[bonds[k].b]);
                    prod[mask] = prod[mask & (mask - 1)] * v;
                }
                for (int b = 0; b < nb; ++b) {
                    auto& dst = acc.mo[r][b];
                    for (std::size_t mask = 0; mask < nmask; ++mask) dst[mask] += w[b] * prod[mask];
                }
            }
            if (gidx + 1 < hi) {
                int flip = std::countr_zero(gidx + 1);
                energy += table.flip_delta(spins, flip);
                spins[flip] = -spins[flip];
            }
        }
    };

    parallel_for(static_cast<std::int64_t>(nchunks), [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t c = lo; c < hi; ++c) run_chunk(static_cast<std::uint64_t>(c));
    });

    Result out;
    out.moments.resize(nr);
    std::vector<double> z(nb, 0.0);
    for (const auto& acc : partial) {
        if (acc.z.empty()) continue;
        for (int b = 0; b < nb; ++b) z[b] += acc.z[b];
    }
    for (int r = 0; r < nr; ++r) {
        const std::size_t nmask = 1ULL << req_bonds[r].size();
        out.moments[r].assign(nb, std::vector<double>(nmask, 0.0));
        for (const auto& acc : partial) {
            if (acc.mo.empty()) continue;
            for (int b = 0; b < nb; ++b)
                for (std::size_t mask = 0; mask < nmask; ++mask)
                    out.moments[r][b][mask] += acc.mo[r][b][mask];
        }
        for (int b = 0; b < nb; ++b)
            for (std::size_t mask = 0; mask < nmask; ++mask) out.moments[r][b][mask] /= z[b];
    }
    return out;
}

double centered_from_moments(const std::vector<double>& m, int n) {
    // < prod (s_k - m_k) > by inclusion-exclusion over subset masks.
    const std::size_t full = (1ULL << n) - 1;
    double acc = 0.0;
    for (std::size_t mask = 0; mask <= full; ++mask) {
        double term = m[mask];
        int outside = 0;
        for (int k = 0; k < n; ++k) {
            if (!(mask >> k & 1)) {
                term *= -m[std::size_t(1) << k];
                ++outside;
            }
        }
        (void)outside;
        acc += term;
    }
    return acc;
}

double brute_force_correlation_resolved(const LatticeGeometry& g, double beta,
                                        const Interaction& in,
                                        const std::vector<ResolvedBond>& bonds) {
    BruteForce::Request req{bonds};
    auto res = BruteForce::sweep(g, in, {beta}, {req});
    const int n = static_cast<int>(bonds.size());
    double centered = centered_from_moments(res.moments[0][0], n);
    return centered / std::pow(g.a(), n);
}

double brute_force_correlation(const LatticeGeometry& g, double beta, const Interaction& in,
                               const std::vector<BondObservable>& bonds) {
    std::vector<ResolvedBond> resolved;
    resolved.reserve(bonds.size());
    for (const auto& b : bonds) resolved.push_back(resolve_bond(g, b));
    return brute_force_correlation_resolved(g, beta, in, resolved);
}

}  // namespace ising
