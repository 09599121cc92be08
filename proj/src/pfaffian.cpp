#include "ising/pfaffian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ising {

int thread_count() {
    if (const char* env = std::getenv("ISINGLAB_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& chunk_fn) {
    if (n <= 0) return;
    int nt = std::min<std::int64_t>(thread_count(), n);
    if (nt <= 1) {
        chunk_fn(0, n);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(nt);
    std::int64_t chunk = (n + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        std::int64_t lo = t * chunk;
        std::int64_t hi = std::min<std::int64_t>(lo + chunk, n);
        if (lo >= hi) break;
        workers.emplace_back([&chunk_fn, lo, hi] { chunk_fn(lo, hi); });
    }
    for (auto& w : workers) w.join();
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

AntisymmetricMatrix::AntisymmetricMatrix(Eigen::MatrixXcd m, double rel_tol) {
    if (m.rows() != m.cols()) throw DimensionError("antisymmetric matrix must be square");
    if (m.rows() % 2 != 0) throw DimensionError("antisymmetric matrix must have even dimension");
    const double scale = std::max(1e-300, m.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (std::abs(m(i, i)) > rel_tol * scale)
            throw ValidationError("antisymmetric matrix has nonzero diagonal");
        for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
            if (std::abs(m(i, j) + m(j, i)) > rel_tol * scale)
                throw ValidationError("matrix entries violate A(i,j) = -A(j,i)");
        }
    }
    // Make the invariant exact.
    mat_ = 0.5 * (m - m.transpose().eval());
    mat_.diagonal().setZero();
}

AntisymmetricMatrix AntisymmetricMatrix::antisymmetrize(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols()) throw DimensionError("antisymmetric matrix must be square");
    if (m.rows() % 2 != 0) throw DimensionError("antisymmetric matrix must have even dimension");
    AntisymmetricMatrix out;
    out.mat_ = 0.5 * (m - m.transpose().eval());
    out.mat_.diagonal().setZero();
    return out;
}

AntisymmetricMatrix AntisymmetricMatrix::zero(int n) {
    if (n < 0 || n % 2 != 0) throw DimensionError("dimension must be even and nonnegative");
    AntisymmetricMatrix out;
    out.mat_ = Eigen::MatrixXcd::Zero(n, n);
    return out;
}

void AntisymmetricMatrix::set(int i, int j, cdouble v) {
    if (i == j && std::abs(v) != 0.0) throw ValidationError("diagonal entries must be zero");
    mat_(i, j) = v;
    mat_(j, i) = -v;
}

namespace {

// Parlett-Reid pair elimination. At step k the largest remaining element is
// pivoted into (k, k+1), then rows/columns k and k+1 are decoupled from the
// trailing block by congruence updates, which leave the Pfaffian unchanged
// up to the tracked swap signs. Pf = prod of pivots * (-1)^swaps.
template <typename Scalar>
PfaffianResult pfaffian_pr(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw DimensionError("pfaffian requires a square matrix");
    if (n % 2 != 0) throw DimensionError("pfaffian requires even dimension");

    PfaffianResult res;
    if (n == 0) {
        res.value = 1.0;
        res.log_abs = 0.0;
        res.phase = 1.0;
        res.condition = 1.0;
        return res;
    }

    double log_abs = 0.0;
    cdouble phase = 1.0;
    double max_piv = 0.0;
    double min_piv = std::numeric_limits<double>::infinity();
    int sign = 1;

    auto swap_rc = [&a, &sign, n](Eigen::Index p, Eigen::Index q) {
        if (p == q) return;
        for (Eigen::Index c = 0; c < n; ++c) std::swap(a(p, c), a(q, c));
        for (Eigen::Index r = 0; r < n; ++r) std::swap(a(r, p), a(r, q));
        sign = -sign;
    };

    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        // Full pivot: largest |a(i,j)| in the trailing submatrix. Since
        // k <= bi < bj, the two swaps below never alias each other.
        Eigen::Index bi = k, bj = k + 1;
        double best = std::norm(cdouble(a(k, k + 1)));
        for (Eigen::Index i = k; i < n; ++i) {
            for (Eigen::Index j = i + 1; j < n; ++j) {
                double m = std::norm(cdouble(a(i, j)));
                if (m > best) {
                    best = m;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best == 0.0) {
            res.value = 0.0;
            res.log_abs = -std::numeric_limits<double>::infinity();
            res.phase = 1.0;
            res.condition = std::numeric_limits<double>::infinity();
            return res;
        }
        if (bi != k) swap_rc(bi, k);
        if (bj != k + 1) swap_rc(bj, k + 1);

        const Scalar p = a(k, k + 1);
        const double pm = std::abs(p);
        log_abs += std::log(pm);
        phase *= cdouble(p) / pm;
        max_piv = std::max(max_piv, pm);
        min_piv = std::min(min_piv, pm);

        if (k + 2 < n) {
            const Eigen::Index m = n - (k + 2);
            // Decouple row/col k (via col k+1) and row/col k+1 (via col k).
            Mat u = a.block(k + 2, k, m, 1) / p;      // coefficients for col k+1
            Mat v = a.block(k + 2, k + 1, m, 1) / p;  // coefficients for col k
            auto trail = a.block(k + 2, k + 2, m, m);
            // Congruence: trail += u * rowvec(k+1) - v * rowvec(k) restricted, i.e.
            // trail_ij -= (u_i v_j - v_i u_j) * p
            trail.noalias() -= u * (p * v.transpose());
            trail.noalias() += v * (p * u.transpose());
            a.block(k + 2, k, m, 2).setZero();
            a.block(k, k + 2, 2, m).setZero();
        }
    }

    res.log_abs = log_abs;
    res.phase = phase * static_cast<double>(sign);
    res.condition = (min_piv > 0.0) ? max_piv / min_piv : std::numeric_limits<double>::infinity();
    res.value = res.phase * std::exp(log_abs);  // may over/underflow; log form is authoritative
    return res;
}

}  // namespace

PfaffianResult pfaffian_inplace(Eigen::MatrixXcd& scratch) { return pfaffian_pr<cdouble>(scratch); }

PfaffianResult pfaffian_inplace(Eigen::MatrixXd& scratch) { return pfaffian_pr<double>(scratch); }

PfaffianResult pfaffian(const AntisymmetricMatrix& a) {
    Eigen::MatrixXcd scratch = a.mat();
    return pfaffian_inplace(scratch);
}

cdouble pfaffian_value(const AntisymmetricMatrix& a) { return pfaffian(a).value; }

cdouble pfaffian_matching_sum(const Eigen::MatrixXcd& a) {
    const int n = static_cast<int>(a.rows());
    if (n % 2 != 0) throw DimensionError("pfaffian requires even dimension");
    if (n == 0) return 1.0;
    // Recursive expansion along the first free index:
    // Pf(A) = sum_j (-1)^j A(0,j) Pf(A with rows/cols 0,j removed).
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::function<cdouble(std::vector<int>&)> rec = [&](std::vector<int>& live) -> cdouble {
        if (live.empty()) return 1.0;
        cdouble acc = 0.0;
        int i0 = live[0];
        double s = 1.0;
        for (std::size_t j = 1; j < live.size(); ++j) {
            std::vector<int> rest;
            rest.reserve(live.size() - 2);
            for (std::size_t t = 1; t < live.size(); ++t)
                if (t != j) rest.push_back(live[t]);
            acc += s * a(i0, live[j]) * rec(rest);
            s = -s;
        }
        return acc;
    };
    return rec(idx);
}

}  // namespace ising
