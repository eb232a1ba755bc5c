#pragma once

// Dense real vectors and matrices over (R^d, ||.||_p): p-norms, dual norms,
// enclosures of operator norms between l^p spaces, inversion, minimal gain.

#include "pframe/error.hpp"
#include "pframe/sampling.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace pframe {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Absolute tolerance carried by closed-form norm routines.
inline constexpr double kExactTol = 1e-9;
/// Combined tolerance for bracketing assertions.
inline constexpr double kBracketTol = 1e-7;
/// Relative singularity threshold: sigma_min < kSingularRel * sigma_max.
inline constexpr double kSingularRel = 1e-10;

/// Exponent of an l^p norm, p in [1, inf].
class PIndex {
public:
    constexpr PIndex() = default;

    explicit PIndex(double p) : p_(p) {
        if (!(p >= 1.0))
            throw Error(ErrorKind::InvalidArgument, "p must satisfy p >= 1, got " + std::to_string(p));
    }

    static PIndex infinity() { return PIndex(kInf); }

    constexpr double value() const noexcept { return p_; }
    constexpr bool is_inf() const noexcept { return p_ == kInf; }
    constexpr bool is_one() const noexcept { return p_ == 1.0; }
    constexpr bool is_two() const noexcept { return p_ == 2.0; }

    /// 1/p, with 1/inf = 0.
    constexpr double reciprocal() const noexcept { return is_inf() ? 0.0 : 1.0 / p_; }

    /// Hoelder conjugate q with 1/p + 1/q = 1.
    PIndex conjugate() const {
        if (is_one())
            return infinity();
        if (is_inf())
            return PIndex(1.0);
        return PIndex(p_ / (p_ - 1.0));
    }

    friend constexpr bool operator==(PIndex a, PIndex b) noexcept { return a.p_ == b.p_; }

private:
    double p_ = 2.0;
};

inline std::string to_string(PIndex p) {
    if (p.is_inf())
        return "inf";
    std::string s = std::to_string(p.value());
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.')
        s.pop_back();
    return s;
}

template <class Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
    if (!m.allFinite())
        throw Error(ErrorKind::NonFinite, std::string(what) + " has non-finite entries");
}

/// Certified enclosure [lo, hi] of a norm or bound.
struct BoundInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool exact = false;

    static BoundInterval point(double v) { return {v, v, true}; }

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    bool contains(double x, double tol = kBracketTol) const { return x >= lo - tol && x <= hi + tol; }

    friend bool operator==(const BoundInterval&, const BoundInterval&) = default;
};

/// Budget for the sampled lower bound of a non-closed-form operator norm.
struct SearchConfig {
    std::size_t samples = 4096;  // quasi-random unit-sphere directions
    int ascent_steps = 50;       // fixed-point ascent iterations per candidate
    int candidates = 4;          // best samples refined by ascent
    std::uint64_t seed = 20240601;

    friend bool operator==(const SearchConfig&, const SearchConfig&) = default;
};

// ---------------------------------------------------------------------------
// norms

template <class Derived>
double pnorm(const Eigen::MatrixBase<Derived>& v, PIndex p) {
    const double e = p.value();
    if (e == 1.0)
        return v.template lpNorm<1>();
    if (e == 2.0)
        return v.norm();
    if (p.is_inf())
        return v.size() == 0 ? 0.0 : v.template lpNorm<Eigen::Infinity>();
    double scale = v.size() == 0 ? 0.0 : v.template lpNorm<Eigen::Infinity>();
    if (scale == 0.0)
        return 0.0;
    double sum = 0.0;
    if (e == 3.0) {
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            double a = std::abs(v(i)) / scale;
            sum += a * a * a;
        }
        return scale * std::cbrt(sum);
    }
    if (e == 1.5) {
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            double a = std::abs(v(i)) / scale;
            sum += a * std::sqrt(a);
        }
        return scale * std::cbrt(sum * sum);
    }
    for (Eigen::Index i = 0; i < v.size(); ++i)
        sum += std::pow(std::abs(v(i)) / scale, e);
    return scale * std::pow(sum, 1.0 / e);
}

/// Norm of the functional x -> <f, x> on (R^d, ||.||_p).
template <class Derived>
double dual_norm(const Eigen::MatrixBase<Derived>& f, PIndex p) {
    return pnorm(f, p.conjugate());
}

/// Norming functional of y in l^r: z with ||z||_{r*} = 1 and <z, y> = ||y||_r.
inline Vec dual_vector(const Vec& y, PIndex r) {
    Vec z = Vec::Zero(y.size());
    const double ny = pnorm(y, r);
    if (ny == 0.0)
        return z;
    if (r.is_one()) {
        for (Eigen::Index i = 0; i < y.size(); ++i)
            z(i) = (y(i) > 0.0) - (y(i) < 0.0);
        return z;
    }
    if (r.is_inf()) {
        Eigen::Index k = 0;
        y.cwiseAbs().maxCoeff(&k);
        z(k) = y(k) > 0.0 ? 1.0 : -1.0;
        return z;
    }
    if (r.is_two())
        return y / ny;
    const double e = r.value() - 1.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        double a = std::abs(y(i)) / ny;
        z(i) = std::copysign(std::pow(a, e), y(i));
    }
    return z;
}

/// ||I_n||_{a -> b}
inline double identity_norm(Eigen::Index n, PIndex a, PIndex b) {
    if (a.value() <= b.value())
        return 1.0;
    return std::pow(static_cast<double>(n), b.reciprocal() - a.reciprocal());
}

inline double largest_singular_value(const Mat& m) {
    if (m.size() == 0)
        return 0.0;
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues()(0);
}

namespace detail {

/// max_j ||M e_j||_b, the exact 1 -> b norm.
inline double max_column_norm(const Mat& m, PIndex b) {
    double best = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        best = std::max(best, pnorm(m.col(j), b));
    return best;
}

/// max_i ||row_i||_{a*}, the exact a -> inf norm.
inline double max_row_dual_norm(const Mat& m, PIndex a) {
    double best = 0.0;
    PIndex q = a.conjugate();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        best = std::max(best, pnorm(m.row(i).transpose(), q));
    return best;
}

inline std::optional<double> closed_form_norm(const Mat& m, PIndex a, PIndex b) {
    if (a.is_two() && b.is_two())
        return largest_singular_value(m);
    if (a.is_one())
        return max_column_norm(m, b);
    if (b.is_inf())
        return max_row_dual_norm(m, a);
    return std::nullopt;
}

/// Minimum over factorizations through closed-form cases plus Hoelder and
/// interpolation estimates. Every candidate is an upper bound.
inline double norm_upper_bound(const Mat& m, PIndex a, PIndex b) {
    const Eigen::Index n = m.cols();
    const Eigen::Index rows = m.rows();
    const double two = largest_singular_value(m);
    const double one_to_b = max_column_norm(m, b);
    const double a_to_inf = max_row_dual_norm(m, a);

    double best = identity_norm(n, a, PIndex(2.0)) * two * identity_norm(rows, PIndex(2.0), b);
    best = std::min(best, identity_norm(n, a, PIndex(1.0)) * one_to_b);
    best = std::min(best, a_to_inf * identity_norm(rows, PIndex::infinity(), b));

    const PIndex q = a.conjugate();
    if (!b.is_inf()) {
        // ||Mx||_b <= (sum_i ||row_i||_{a*}^b)^(1/b) ||x||_a
        Vec rn(rows);
        for (Eigen::Index i = 0; i < rows; ++i)
            rn(i) = pnorm(m.row(i).transpose(), q);
        best = std::min(best, pnorm(rn, b));
    }
    {
        // ||Mx||_b <= sum_j |x_j| ||col_j||_b <= ||x||_a ||(||col_j||_b)_j||_{a*}
        Vec cn(n);
        for (Eigen::Index j = 0; j < n; ++j)
            cn(j) = pnorm(m.col(j), b);
        best = std::min(best, pnorm(cn, q));
    }

    if (a == b && !a.is_one() && !a.is_inf()) {
        // Riesz convexity along the diagonal 1/p = 1/q
        const double inv = a.reciprocal();
        const double one = max_column_norm(m, PIndex(1.0));
        const double inf = max_row_dual_norm(m, PIndex::infinity());
        best = std::min(best, std::pow(one, inv) * std::pow(inf, 1.0 - inv));
        if (a.value() < 2.0) {
            const double theta = 2.0 * inv - 1.0;
            best = std::min(best, std::pow(one, theta) * std::pow(two, 1.0 - theta));
        } else if (a.value() > 2.0) {
            const double theta = 1.0 - 2.0 * inv;
            best = std::min(best, std::pow(two, 1.0 - theta) * std::pow(inf, theta));
        }
    }
    return best;
}

struct GainSearch {
    double value = 0.0;
    Vec argmax;
};

/// Largest sampled ||Mx||_b / ||x||_a, refined by the norming-functional
/// fixed-point ascent x <- J_a*(M^T J_b(Mx)).
inline GainSearch sampled_max_gain(const Mat& m, PIndex a, PIndex b, const SearchConfig& cfg) {
    const Eigen::Index n = m.cols();
    const Eigen::Index count = static_cast<Eigen::Index>(cfg.samples);
    Mat dirs(n, count + 2 * n);
    dirs.leftCols(count) = quasi_gaussian_directions(n, count, cfg.seed);
    dirs.block(0, count, n, n).setIdentity();
    dirs.rightCols(n) = Mat::Ones(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < j; ++i)
            dirs(i, count + n + j) = -1.0;
    for (Eigen::Index k = 0; k < dirs.cols(); ++k) {
        double nk = pnorm(dirs.col(k), a);
        if (nk > 0.0)
            dirs.col(k) /= nk;
    }

    const Mat images = m * dirs;
    std::vector<double> ratio(static_cast<std::size_t>(dirs.cols()));
    for (Eigen::Index k = 0; k < dirs.cols(); ++k)
        ratio[static_cast<std::size_t>(k)] = pnorm(images.col(k), b);

    std::vector<Eigen::Index> order(ratio.size());
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    const auto keep = std::min<std::size_t>(static_cast<std::size_t>(std::max(cfg.candidates, 1)), order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                      [&](Eigen::Index i, Eigen::Index j) {
                          double ri = ratio[static_cast<std::size_t>(i)];
                          double rj = ratio[static_cast<std::size_t>(j)];
                          return ri > rj || (ri == rj && i < j);
                      });

    GainSearch best{ratio[static_cast<std::size_t>(order[0])], dirs.col(order[0])};
    const PIndex q = a.conjugate();
    for (std::size_t c = 0; c < keep; ++c) {
        Vec x = dirs.col(order[c]);
        for (int step = 0; step < cfg.ascent_steps; ++step) {
            Vec y = m * x;
            if (pnorm(y, b) == 0.0)
                break;
            Vec g = m.transpose() * dual_vector(y, b);
            Vec next = dual_vector(g, q);
            double nn = pnorm(next, a);
            if (nn == 0.0)
                break;
            next /= nn;
            double r = pnorm(Vec(m * next), b);
            if (r > best.value) {
                best.value = r;
                best.argmax = next;
            }
            if ((next - x).lpNorm<Eigen::Infinity>() < 1e-15)
                break;
            x = std::move(next);
        }
    }
    return best;
}

} // namespace detail

/// Enclosure of sup_{x != 0} ||Mx||_{p_out} / ||x||_{p_in}.
inline BoundInterval opnorm(const Mat& m, PIndex p_in, PIndex p_out, const SearchConfig& cfg = {}) {
    if (m.rows() == 0 || m.cols() == 0)
        throw Error(ErrorKind::DimensionMismatch, "opnorm of an empty matrix");
    require_finite(m, "operator");
    if (auto v = detail::closed_form_norm(m, p_in, p_out))
        return BoundInterval::point(*v);
    if (m.isZero(0.0))
        return BoundInterval::point(0.0);
    const double lo = detail::sampled_max_gain(m, p_in, p_out, cfg).value;
    const double hi = std::max(lo, detail::norm_upper_bound(m, p_in, p_out));
    return {lo, hi, false};
}

/// Inverse of a square matrix; throws Singular when
/// sigma_min < rel_tol * sigma_max.
inline Mat invert(const Mat& m, double rel_tol = kSingularRel) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw Error(ErrorKind::DimensionMismatch, "invert needs a nonempty square matrix");
    require_finite(m, "matrix");
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    if (smax == 0.0 || smin < rel_tol * smax)
        throw Error(ErrorKind::Singular, "sigma_min/sigma_max = " + std::to_string(smax == 0.0 ? 0.0 : smin / smax));
    return svd.matrixV() * sv.cwiseInverse().asDiagonal() * svd.matrixU().transpose();
}

inline bool is_invertible(const Mat& m, double rel_tol = kSingularRel) {
    if (m.rows() != m.cols() || m.rows() == 0 || !m.allFinite())
        return false;
    Eigen::JacobiSVD<Mat> svd(m);
    const auto& sv = svd.singularValues();
    return sv(0) > 0.0 && sv(sv.size() - 1) >= rel_tol * sv(0);
}

/// Enclosure of inf_{x != 0} ||Mx||_{p_out} / ||x||_{p_in} for square M,
/// as the reciprocal of ||M^{-1}||_{p_out -> p_in}. Singular M gives [0, 0].
inline BoundInterval min_gain(const Mat& m, PIndex p_in, PIndex p_out, const SearchConfig& cfg = {}) {
    if (m.rows() != m.cols())
        throw Error(ErrorKind::DimensionMismatch, "min_gain needs a square matrix");
    Mat inv;
    try {
        inv = invert(m);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Singular)
            return BoundInterval::point(0.0);
        throw;
    }
    const BoundInterval n = opnorm(inv, p_out, p_in, cfg);
    return {1.0 / n.hi, 1.0 / n.lo, n.exact};
}

} // namespace pframe
