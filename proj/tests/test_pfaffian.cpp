#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ising/pfaffian.hpp"

using namespace ising;

namespace {

Eigen::MatrixXcd random_antisymmetric(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            cdouble v(g(rng), g(rng));
            m(i, j) = v;
            m(j, i) = -v;
        }
    }
    return m;
}

Eigen::MatrixXcd random_real_antisymmetric(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = g(rng);
            m(i, j) = v;
            m(j, i) = -v;
        }
    return m;
}

}  // namespace

TEST_CASE("2x2 pfaffian is the off-diagonal entry") {
    cdouble a(1.7, -0.3);
    AntisymmetricMatrix m = AntisymmetricMatrix::zero(2);
    m.set(0, 1, a);
    CHECK(std::abs(pfaffian_value(m) - a) < 1e-14);
}

TEST_CASE("4x4 pfaffian matches the textbook expansion") {
    std::mt19937_64 rng(7);
    Eigen::MatrixXcd m = random_antisymmetric(4, rng);
    cdouble expect = m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
    AntisymmetricMatrix a(m);
    CHECK(std::abs(pfaffian_value(a) - expect) < 1e-12 * std::abs(expect));
}

TEST_CASE("empty matrix has pfaffian one") {
    AntisymmetricMatrix a = AntisymmetricMatrix::zero(0);
    CHECK(pfaffian_value(a) == cdouble(1.0, 0.0));
}

TEST_CASE("odd dimension is rejected") {
    CHECK_THROWS_AS(AntisymmetricMatrix::zero(3), DimensionError);
}

TEST_CASE("asymmetry beyond tolerance is rejected") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(0, 1) = 1.0;
    m(1, 0) = -1.0 + 1e-6;
    CHECK_THROWS_AS(AntisymmetricMatrix{m}, ValidationError);
    CHECK_NOTHROW(AntisymmetricMatrix::antisymmetrize(m));
}

TEST_CASE("matching-sum oracle agrees with the elimination algorithm") {
    std::mt19937_64 rng(11);
    for (int n : {2, 4, 6, 8, 10}) {
        for (int rep = 0; rep < 3; ++rep) {
            Eigen::MatrixXcd m = random_antisymmetric(n, rng);
            cdouble brute = pfaffian_matching_sum(m);
            cdouble fast = pfaffian_value(AntisymmetricMatrix(m));
            CHECK(std::abs(brute - fast) < 1e-11 * std::max(1.0, std::abs(brute)));
        }
    }
}

TEST_CASE("pfaffian squared equals determinant") {
    std::mt19937_64 rng(13);
    for (int n = 2; n <= 20; n += 2) {
        for (int rep = 0; rep < 10; ++rep) {
            Eigen::MatrixXcd m = random_antisymmetric(n, rng);
            cdouble pf = pfaffian_value(AntisymmetricMatrix(m));
            cdouble det = m.determinant();  // independent dense-LU oracle
            CHECK(std::abs(pf * pf - det) < 1e-10 * std::abs(det));
        }
    }
}

TEST_CASE("congruence covariance Pf(B A B^T) = det(B) Pf(A)") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int n : {4, 8, 12}) {
        for (int rep = 0; rep < 5; ++rep) {
            Eigen::MatrixXcd a = random_antisymmetric(n, rng);
            Eigen::MatrixXcd b(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) b(i, j) = cdouble(g(rng), g(rng));
            Eigen::MatrixXcd bab = b * a * b.transpose();
            cdouble lhs = pfaffian_value(AntisymmetricMatrix::antisymmetrize(bab));
            cdouble rhs = b.determinant() * pfaffian_value(AntisymmetricMatrix(a));
            CHECK(std::abs(lhs - rhs) < 1e-8 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("pair transposition flips the sign") {
    std::mt19937_64 rng(19);
    Eigen::MatrixXcd a = random_antisymmetric(8, rng);
    Eigen::MatrixXcd p = a;
    p.row(2).swap(p.row(5));
    p.col(2).swap(p.col(5));
    cdouble v0 = pfaffian_value(AntisymmetricMatrix(a));
    cdouble v1 = pfaffian_value(AntisymmetricMatrix(p));
    CHECK(std::abs(v0 + v1) < 1e-11 * std::abs(v0));
}

TEST_CASE("near-singular input reports a large condition estimate, not silent zero") {
    std::mt19937_64 rng(23);
    Eigen::MatrixXcd m = random_real_antisymmetric(6, rng);
    // Force near-singularity: make rows 4,5 nearly dependent on rows 0,1.
    double eps = 1e-13;
    m.row(4) = m.row(0) * (1.0 + eps);
    m.row(5) = m.row(1) * (1.0 - eps);
    m.col(4) = m.row(4).transpose() * -1.0;
    m.col(5) = m.row(5).transpose() * -1.0;
    m(4, 5) = m(0, 1);
    m(5, 4) = -m(0, 1);
    m.diagonal().setZero();
    Eigen::MatrixXcd scratch = 0.5 * (m - m.transpose().eval());
    PfaffianResult res = pfaffian_inplace(scratch);
    CHECK(res.condition > 1e6);
    // The value is still reported (possibly tiny), never silently zeroed.
    CHECK(std::isfinite(res.log_abs) == !res.is_zero());
}

TEST_CASE("log form survives scales that overflow the plain value") {
    int n = 40;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; i += 2) {
        m(i, i + 1) = 1e20;
        m(i + 1, i) = -1e20;
    }
    PfaffianResult res = pfaffian_inplace(m);
    CHECK(res.log_abs == doctest::Approx(20 * std::log(1e20)));
    CHECK(std::abs(res.phase - cdouble(1.0, 0.0)) < 1e-12);
}
