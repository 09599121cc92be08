#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ising {

using cdouble = std::complex<double>;

/// Bad input: wrong dimensions, broken invariants, malformed requests.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public ValidationError {
public:
    explicit DimensionError(const std::string& msg) : ValidationError(msg) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thread count: ISINGLAB_THREADS env var, else hardware concurrency.
int thread_count();

/// Chunked parallel map over [0, n). Results are combined in index order by
/// the caller, so reductions stay deterministic.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& chunk_fn);

/// SplitMix64 step, used to derive per-chain RNG streams from one master seed.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace ising
