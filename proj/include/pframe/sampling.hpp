#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace pframe {

/// Seeded generator with a portable uniform/normal stream.
///
/// The standard distributions are implementation-defined, so the mapping from
/// raw 64-bit draws to doubles is done here to keep generated instances
/// byte-identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform(); // (0, 1]
        double u2 = uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    Eigen::MatrixXd normal_matrix(Eigen::Index rows, Eigen::Index cols) {
        Eigen::MatrixXd m(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i)
                m(i, j) = normal();
        return m;
    }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Derives an independent stream seed from a base seed and a salt.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Gaussian-distributed directions from a randomly shifted Kronecker (R_d)
/// low-discrepancy sequence pushed through Box-Muller. Columns are samples.
inline Eigen::MatrixXd quasi_gaussian_directions(Eigen::Index dim, Eigen::Index count, std::uint64_t seed) {
    const Eigen::Index pairs = (dim + 1) / 2;
    const Eigen::Index width = 2 * pairs;

    // phi is the positive root of x^(width+1) = x + 1
    double phi = 2.0;
    for (int it = 0; it < 64; ++it)
        phi = std::pow(1.0 + phi, 1.0 / static_cast<double>(width + 1));

    Eigen::VectorXd step(width);
    Eigen::VectorXd shift(width);
    Rng rng(seed);
    double g = 1.0;
    for (Eigen::Index j = 0; j < width; ++j) {
        g /= phi;
        step(j) = g;
        shift(j) = rng.uniform();
    }

    Eigen::MatrixXd out(dim, count);
    for (Eigen::Index k = 0; k < count; ++k) {
        const double kk = static_cast<double>(k + 1);
        for (Eigen::Index pr = 0; pr < pairs; ++pr) {
            double u1 = shift(2 * pr) + kk * step(2 * pr);
            double u2 = shift(2 * pr + 1) + kk * step(2 * pr + 1);
            u1 -= std::floor(u1);
            u2 -= std::floor(u2);
            u1 = 1.0 - u1;
            double radius = std::sqrt(-2.0 * std::log(u1));
            double angle = 2.0 * std::numbers::pi * u2;
            out(2 * pr, k) = radius * std::cos(angle);
            if (2 * pr + 1 < dim)
                out(2 * pr + 1, k) = radius * std::sin(angle);
        }
    }
    return out;
}

} // namespace pframe
