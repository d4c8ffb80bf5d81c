#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace heundc {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument too close to a pole of the function being evaluated.
class PoleProximityError : public Error {
public:
    PoleProximityError(const std::string& msg, cplx nearest_pole)
        : Error(msg), nearest(nearest_pole) {}
    cplx nearest;
};

class DegenerateLatticeError : public Error {
public:
    using Error::Error;
};

/// Square-root branch bookkeeping became inconsistent.
class BranchError : public Error {
public:
    using Error::Error;
};

class LatticeMismatchError : public Error {
public:
    using Error::Error;
};

/// Invalid domain input (bad sign choice, non-integer d where integer required, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Numerical routine failed to reach its accuracy contract.
class AccuracyError : public Error {
public:
    using Error::Error;
};

/// Path or contour construction failed (crowded singularities, blocked corridor).
class PathError : public Error {
public:
    using Error::Error;
};

inline bool finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Deterministic 64-bit mixer (splitmix64); used everywhere randomness is
/// needed so results are reproducible for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1); 53-bit resolution, identical on every platform.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    cplx complex_in_box(double re_lo, double re_hi, double im_lo, double im_hi) {
        double re = uniform(re_lo, re_hi);
        double im = uniform(im_lo, im_hi);
        return {re, im};
    }

private:
    std::uint64_t state_;
};

/// FNV-1a over raw bytes; used for stable content hashes in output files.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace heundc
