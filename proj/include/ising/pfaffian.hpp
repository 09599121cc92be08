#pragma once

#include <Eigen/Dense>

#include "ising/common.hpp"

namespace ising {

/// Complex antisymmetric matrix of even dimension. Construction from raw data
/// validates A = -A^T (relative tolerance for imported data) and a zero
/// diagonal; antisymmetrize() projects instead of validating.
class AntisymmetricMatrix {
public:
    explicit AntisymmetricMatrix(Eigen::MatrixXcd m, double rel_tol = 1e-12);

    /// Builds (m - m^T)/2, for callers that hold only approximate data.
    static AntisymmetricMatrix antisymmetrize(const Eigen::MatrixXcd& m);

    /// Zero matrix of dimension n (n even).
    static AntisymmetricMatrix zero(int n);

    int size() const { return static_cast<int>(mat_.rows()); }
    const Eigen::MatrixXcd& mat() const { return mat_; }
    Eigen::MatrixXcd& mat() { return mat_; }

    /// Sets entries (i,j) and (j,i) = -v in one call.
    void set(int i, int j, cdouble v);

private:
    AntisymmetricMatrix() = default;
    Eigen::MatrixXcd mat_;
};

/// Pfaffian with magnitude carried in log form so large lattices do not
/// overflow. `value` is the plain product when representable.
struct PfaffianResult {
    cdouble value{0.0, 0.0};
    double log_abs = -std::numeric_limits<double>::infinity();
    cdouble phase{1.0, 0.0};   // value = phase * exp(log_abs)
    double condition = 0.0;    // max/min pivot magnitude; inf when singular

    bool is_zero() const { return !std::isfinite(log_abs); }
};

/// Parlett-Reid tridiagonalization with full pivoting. Destroys `scratch`.
PfaffianResult pfaffian_inplace(Eigen::MatrixXcd& scratch);
PfaffianResult pfaffian_inplace(Eigen::MatrixXd& scratch);

PfaffianResult pfaffian(const AntisymmetricMatrix& a);

/// Convenience: the Pfaffian as a plain complex number.
cdouble pfaffian_value(const AntisymmetricMatrix& a);

/// Test oracle: Pfaffian by explicit sum over perfect matchings, O(n!!).
/// Usable up to n ~ 12; independent of the elimination code path.
cdouble pfaffian_matching_sum(const Eigen::MatrixXcd& a);

}  // namespace ising
