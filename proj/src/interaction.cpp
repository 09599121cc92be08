#include "ising/interaction.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ising {

Interaction::Interaction(double J, double lambda, std::vector<CouplingClass> couplings,
                         int range_bound)
    : J_(J), lambda_(lambda), couplings_(std::move(couplings)) {
    if (!(J > 0.0)) throw ValidationError("nearest-neighbor coupling J must be positive");
    for (const auto& c : couplings_) {
        if (c.offsets.size() % 2 != 0 || c.offsets.empty())
            throw ValidationError("coupling sets must have even, nonzero cardinality");
        std::set<std::pair<int, int>> uniq(c.offsets.begin(), c.offsets.end());
        if (uniq.size() != c.offsets.size())
            throw ValidationError("coupling set has repeated offsets");
        for (const auto& [dx, dy] : c.offsets) {
            int r = std::max(std::abs(dx), std::abs(dy));
            if (r > range_bound) throw ValidationError("coupling range exceeds configured bound");
            range_ = std::max(range_, r);
        }
    }
}

Interaction Interaction::nnn_pair(double J, double lambda, double v) {
    std::vector<CouplingClass> cs;
    cs.push_back(CouplingClass{{{0, 0}, {1, 1}}, v});
    cs.push_back(CouplingClass{{{0, 0}, {1, -1}}, v});
    return Interaction(J, lambda, std::move(cs));
}

bool Interaction::is_ferromagnetic_pair() const {
    for (const auto& c : couplings_) {
        if (c.offsets.size() != 2) return false;
        if (lambda_ * c.strength > 0.0) return false;  // H term +|..| s s is antiferro
    }
    return true;
}

InteractionTable::InteractionTable(const LatticeGeometry& g, const Interaction& in) {
    const int L = g.L(), M = g.M();
    by_site_.resize(g.n_sites());

    auto add_term = [&](std::vector<std::int32_t> sites, double strength) {
        std::sort(sites.begin(), sites.end());
        Term t{std::move(sites), strength};
        for (auto s : t.sites) by_site_[s].push_back(static_cast<std::int32_t>(terms_.size()));
        terms_.push_back(std::move(t));
    };

    // Nearest-neighbor bonds. On L=2 or torus M=2 the two directed bonds of a
    // pair are distinct terms, matching the per-edge Hamiltonian sum.
    for (int j = 0; j < M; ++j) {
        for (int i = 0; i < L; ++i) {
            Site s{i, j};
            for (int dir : {1, 2}) {
                Site o;
                bool seam;
                if (!g.neighbor(s, dir, o, seam)) continue;
                add_term({static_cast<std::int32_t>(g.site_index(s)),
                          static_cast<std::int32_t>(g.site_index(o))},
                         -in.J());
            }
        }
    }

    // Perturbation classes, translated over all anchors that stay inside.
    if (in.has_perturbation()) {
        for (const auto& c : in.couplings()) {
            for (int j = 0; j < M; ++j) {
                for (int i = 0; i < L; ++i) {
                    std::vector<std::int32_t> sites;
                    sites.reserve(c.offsets.size());
                    bool ok = true;
                    for (const auto& [dx, dy] : c.offsets) {
                        int ci = (i + dx) % L;
                        if (ci < 0) ci += L;
                        int rj = j + dy;
                        if (g.is_torus()) {
                            rj %= M;
                            if (rj < 0) rj += M;
                        } else if (rj < 0 || rj >= M) {
                            ok = false;
                            break;
                        }
                        sites.push_back(static_cast<std::int32_t>(g.site_index(Site{ci, rj})));
                    }
                    if (!ok) continue;
                    std::set<std::int32_t> uniq(sites.begin(), sites.end());
                    if (uniq.size() != sites.size()) continue;  // degenerate wrap, drop
                    add_term(std::move(sites), in.lambda() * c.strength);
                }
            }
        }
    }
}

double InteractionTable::energy(const std::vector<std::int8_t>& spins) const {
    double e = 0.0;
    for (const auto& t : terms_) {
        int prod = 1;
        for (auto s : t.sites) prod *= spins[s];
        e += t.strength * prod;
    }
    return e;
}

double InteractionTable::flip_delta(const std::vector<std::int8_t>& spins, std::int32_t site) const {
    double de = 0.0;
    for (auto ti : by_site_[site]) {
        const Term& t = terms_[ti];
        int prod = 1;
        for (auto s : t.sites) prod *= spins[s];
        de += -2.0 * t.strength * prod;
    }
    return de;
}

}  // namespace ising
