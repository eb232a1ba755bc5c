#pragma once

// Pairs ({f_n}, {tau_n}) of functionals and vectors on (R^d, ||.||_X) together
// with the analysis, synthesis and frame operators.

#include "pframe/normed_linalg.hpp"

#include <Eigen/Eigenvalues>

#include <tuple>

namespace pframe {

/// N functionals (rows of F, N x d) and N vectors (columns of T, d x N).
///
/// `p` indexes the coefficient space l^p. The norm on X = R^d is a separate
/// choice and defaults to the same index.
class FramePair {
public:
    FramePair(Mat functionals, Mat vectors, PIndex p) : FramePair(std::move(functionals), std::move(vectors), p, p) {}

    FramePair(Mat functionals, Mat vectors, PIndex p, PIndex x_norm)
        : f_(std::move(functionals)), t_(std::move(vectors)), p_(p), x_norm_(x_norm) {
        if (p_.is_inf())
            throw Error(ErrorKind::InvalidArgument, "frame pairs need p in [1, inf)");
        if (f_.rows() == 0 || f_.cols() == 0)
            throw Error(ErrorKind::DimensionMismatch, "empty functional matrix");
        if (f_.rows() != t_.cols() || f_.cols() != t_.rows())
            throw Error(ErrorKind::DimensionMismatch,
                        "F is " + std::to_string(f_.rows()) + "x" + std::to_string(f_.cols()) + " but T is " +
                            std::to_string(t_.rows()) + "x" + std::to_string(t_.cols()));
        require_finite(f_, "F");
        require_finite(t_, "T");
    }

    const Mat& functionals() const noexcept { return f_; }
    const Mat& vectors() const noexcept { return t_; }
    PIndex p() const noexcept { return p_; }
    PIndex x_norm() const noexcept { return x_norm_; }
    Eigen::Index dim() const noexcept { return f_.cols(); }
    Eigen::Index count() const noexcept { return f_.rows(); }

    friend bool operator==(const FramePair& a, const FramePair& b) {
        return a.p_ == b.p_ && a.x_norm_ == b.x_norm_ && a.f_.rows() == b.f_.rows() && a.f_.cols() == b.f_.cols() &&
               a.f_ == b.f_ && a.t_ == b.t_;
    }

private:
    Mat f_;
    Mat t_;
    PIndex p_;
    PIndex x_norm_;
};

/// Unsquared bounds a||x|| <= ||S x|| <= b||x||.
struct ASFBounds {
    BoundInterval lower;
    BoundInterval upper;
};

/// Squared-sense bounds a||h||^2 <= sum |<h, tau_n>|^2 <= b||h||^2.
struct HilbertFrameBounds {
    double lower = 0.0;
    double upper = 0.0;
};

struct ThetaNorms {
    BoundInterval analysis;          // ||theta_f||: X -> l^p
    BoundInterval synthesis;         // ||theta_tau||: l^p -> X
    BoundInterval analysis_inverse;  // ||theta_f S^{-1}||
};

inline Vec analysis(const FramePair& fp, const Vec& x) {
    if (x.size() != fp.dim())
        throw Error(ErrorKind::DimensionMismatch, "analysis input has length " + std::to_string(x.size()));
    return fp.functionals() * x;
}

inline Vec synthesis(const FramePair& fp, const Vec& c) {
    if (c.size() != fp.count())
        throw Error(ErrorKind::DimensionMismatch, "synthesis input has length " + std::to_string(c.size()));
    return fp.vectors() * c;
}

inline Mat frame_operator(const FramePair& fp) { return fp.vectors() * fp.functionals(); }

inline bool is_asf(const FramePair& fp, double rel_tol = kSingularRel) {
    return is_invertible(frame_operator(fp), rel_tol);
}

inline Mat frame_operator_inverse(const FramePair& fp) {
    try {
        return invert(frame_operator(fp));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Singular)
            throw Error(ErrorKind::NotAnASF, "frame operator is singular");
        throw;
    }
}

inline ASFBounds asf_bounds(const FramePair& fp, const SearchConfig& cfg = {}) {
    const Mat s = frame_operator(fp);
    const Mat s_inv = frame_operator_inverse(fp);
    const BoundInterval inv = opnorm(s_inv, fp.x_norm(), fp.x_norm(), cfg);
    return {{1.0 / inv.hi, 1.0 / inv.lo, inv.exact}, opnorm(s, fp.x_norm(), fp.x_norm(), cfg)};
}

/// ||S^{-1}||_{X -> X}
inline BoundInterval inverse_frame_operator_norm(const FramePair& fp, const SearchConfig& cfg = {}) {
    return opnorm(frame_operator_inverse(fp), fp.x_norm(), fp.x_norm(), cfg);
}

inline ThetaNorms theta_norms(const FramePair& fp, const SearchConfig& cfg = {}) {
    const Mat s_inv = frame_operator_inverse(fp);
    return {opnorm(fp.functionals(), fp.x_norm(), fp.p(), cfg), opnorm(fp.vectors(), fp.p(), fp.x_norm(), cfg),
            opnorm(fp.functionals() * s_inv, fp.x_norm(), fp.p(), cfg)};
}

/// f_n = <., tau_n>, so that theta_f = theta_tau^T and p = 2.
inline FramePair canonical_hilbert_pair(const Mat& vectors) {
    return FramePair(vectors.transpose(), vectors, PIndex(2.0));
}

/// Tight squared-sense frame bounds: extreme eigenvalues of T T^T.
inline HilbertFrameBounds hilbert_frame_bounds(const Mat& vectors, double rel_tol = kSingularRel) {
    if (vectors.rows() == 0 || vectors.cols() == 0)
        throw Error(ErrorKind::DimensionMismatch, "empty vector family");
    require_finite(vectors, "T");
    const Mat s = vectors * vectors.transpose();
    Eigen::SelfAdjointEigenSolver<Mat> eig(s, Eigen::EigenvaluesOnly);
    const auto& ev = eig.eigenvalues();
    const double lmin = ev(0);
    const double lmax = ev(ev.size() - 1);
    if (!(lmax > 0.0) || lmin < rel_tol * lmax)
        throw Error(ErrorKind::NotAFrame, "lambda_min(T T^T) = " + std::to_string(lmin));
    return {lmin, lmax};
}

} // namespace pframe
