#pragma once

// Perturbation conditions and predicted-bound formulas for Hilbert frames and
// p-approximate Schauder frames (p-ASFs).
//
// Conditions quantified over all x or all coefficient sequences are checked
// three-valued: CERTIFIED only through a sound norm certificate, FALSIFIED
// only through an explicit witness, UNDECIDED otherwise.

#include "pframe/config.hpp"
#include "pframe/frames.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>

namespace pframe {

struct PerturbationParams {
    double r = 0.0;
    double s = 0.0;
    double t = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    void validate() const {
        for (double v : {r, s, t, alpha, beta, gamma})
            if (!(v >= 0.0) || !std::isfinite(v))
                throw Error(ErrorKind::InvalidArgument, "perturbation parameters must be finite and nonnegative");
    }

    friend bool operator==(const PerturbationParams&, const PerturbationParams&) = default;
};

enum class TheoremTag { PW1, PW2, PW3, MAIN, COROLLARY, SUMMABLE };

inline const char* to_string(TheoremTag tag) {
    switch (tag) {
    case TheoremTag::PW1: return "pw1";
    case TheoremTag::PW2: return "pw2";
    case TheoremTag::PW3: return "pw3";
    case TheoremTag::MAIN: return "main";
    case TheoremTag::COROLLARY: return "corollary";
    case TheoremTag::SUMMABLE: return "summable";
    }
    return "unknown";
}

inline bool is_hilbert_theorem(TheoremTag tag) {
    return tag == TheoremTag::PW1 || tag == TheoremTag::PW2 || tag == TheoremTag::PW3;
}

/// Predicted bounds of the perturbed family. `lower` is absent when the
/// theorem only asserts existence of a lower bound.
struct PredictedBounds {
    std::optional<double> lower;
    double upper = 0.0;
    TheoremTag theorem = TheoremTag::MAIN;

    friend bool operator==(const PredictedBounds&, const PredictedBounds&) = default;
};

enum class VerdictStatus { Certified, Falsified, Undecided };

inline const char* to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::Certified: return "CERTIFIED";
    case VerdictStatus::Falsified: return "FALSIFIED";
    case VerdictStatus::Undecided: return "UNDECIDED";
    }
    return "UNDECIDED";
}

struct ConditionVerdict {
    VerdictStatus status = VerdictStatus::Undecided;
    std::optional<Vec> witness;
    std::optional<Eigen::Index> prefix;  // 1-based prefix length m of the witness
    double margin = 0.0;  // certificate slack when certified, minus the worst violation otherwise
    bool conflict = false;  // a certificate and a witness both fired

    bool certified() const { return status == VerdictStatus::Certified; }
};

struct HildingResult {
    bool invertible = false;
    double gain_lo = 0.0;
    double gain_hi = 0.0;
    double inv_norm_bound = 0.0;
};

namespace detail {

inline double abs_pow(double x, double p) {
    const double a = std::abs(x);
    if (p == 1.0)
        return a;
    if (p == 2.0)
        return a * a;
    if (p == 3.0)
        return a * a * a;
    if (p == 1.5)
        return a * std::sqrt(a);
    return std::pow(a, p);
}

inline double root(double sum, double p) {
    if (p == 1.0)
        return sum;
    if (p == 2.0)
        return std::sqrt(sum);
    if (p == 3.0)
        return std::cbrt(sum);
    if (p == 1.5)
        return std::cbrt(sum * sum);
    return std::pow(sum, 1.0 / p);
}

/// Directions for falsification: coordinate vectors first, then quasi-random
/// samples, each normalized to the unit sphere of `norm`.
inline Mat probe_directions(Eigen::Index dim, const SearchConfig& cfg, PIndex norm, std::uint64_t salt) {
    const Eigen::Index count = static_cast<Eigen::Index>(cfg.samples);
    Mat dirs(dim, dim + count);
    dirs.leftCols(dim).setIdentity();
    dirs.rightCols(count) = quasi_gaussian_directions(dim, count, mix_seed(cfg.seed, salt));
    for (Eigen::Index k = dim; k < dirs.cols(); ++k) {
        const double n = pnorm(dirs.col(k), norm);
        if (n > 0.0)
            dirs.col(k) /= n;
    }
    return dirs;
}

inline Eigen::Index support_length(const Vec& c) {
    for (Eigen::Index i = c.size(); i > 0; --i)
        if (c(i - 1) != 0.0)
            return i;
    return 1;
}

/// Largest eigenvalue of a symmetric matrix.
inline double lambda_max(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> eig(m, Eigen::EigenvaluesOnly);
    return eig.eigenvalues()(eig.eigenvalues().size() - 1);
}

inline double lambda_min(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> eig(m, Eigen::EigenvaluesOnly);
    return eig.eigenvalues()(0);
}

inline ConditionVerdict combine(std::optional<double> certificate_margin, double worst_violation, Vec witness,
                                Eigen::Index prefix, double tol) {
    ConditionVerdict v;
    const bool falsified = worst_violation > tol;
    if (certificate_margin && falsified) {
        v.status = VerdictStatus::Undecided;
        v.conflict = true;
        v.margin = -worst_violation;
    } else if (certificate_margin) {
        v.status = VerdictStatus::Certified;
        v.margin = *certificate_margin;
    } else if (falsified) {
        v.status = VerdictStatus::Falsified;
        v.margin = -worst_violation;
    } else {
        v.status = VerdictStatus::Undecided;
        v.margin = -worst_violation;
    }
    if (falsified) {
        v.witness = std::move(witness);
        v.prefix = prefix;
    }
    return v;
}

} // namespace detail

// ---------------------------------------------------------------------------
// operator perturbation (Hilding type)

/// Checks ||Ux - Vx|| <= alpha ||Ux|| + beta ||Vx|| on (R^d, ||.||_p) and
/// reports the resulting sandwich and inverse-norm bound.
inline std::pair<ConditionVerdict, HildingResult> hilding_check(const Mat& u, const Mat& v, double alpha, double beta,
                                                                 PIndex p, const Config& cfg = {}) {
    if (!(alpha >= 0.0 && alpha < 1.0 && beta >= 0.0 && beta < 1.0))
        throw Error(ErrorKind::AlphaBetaOutOfRange, "alpha and beta must lie in [0, 1)");
    if (u.rows() != u.cols() || u.rows() != v.rows() || u.cols() != v.cols())
        throw Error(ErrorKind::DimensionMismatch, "U and V must be square of equal size");
    Mat u_inv;
    try {
        u_inv = invert(u, cfg.singular_rel);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Singular)
            throw Error(ErrorKind::USingular, "U is not invertible");
        throw;
    }
    const Mat diff = u - v;

    std::optional<double> cert;
    auto offer = [&](double margin) {
        if (margin >= -cfg.exact_tol)
            cert = cert ? std::max(*cert, margin) : margin;
    };
    // ||(U-V)x|| <= ||(U-V)U^{-1}|| ||Ux||
    offer(alpha - opnorm(diff * u_inv, p, p, cfg.search).hi);
    if (beta > 0.0 && is_invertible(v, cfg.singular_rel))
        offer(beta - opnorm(diff * invert(v, cfg.singular_rel), p, p, cfg.search).hi);
    if (p.is_two()) {
        // (a+b+c)^2 >= a^2+b^2+c^2 for nonnegative terms
        const Mat gram = alpha * alpha * u.transpose() * u + beta * beta * v.transpose() * v - diff.transpose() * diff;
        const double scale = std::max(1.0, (u.transpose() * u).norm());
        offer(detail::lambda_min(gram) / scale);
    }

    const Mat dirs = detail::probe_directions(u.cols(), cfg.search, p, 0x4811);
    const Mat ux = u * dirs;
    const Mat vx = v * dirs;
    double worst = -kInf;
    Eigen::Index arg = 0;
    for (Eigen::Index k = 0; k < dirs.cols(); ++k) {
        const double viol = pnorm(ux.col(k) - vx.col(k), p) - alpha * pnorm(ux.col(k), p) - beta * pnorm(vx.col(k), p);
        if (viol > worst + 1e-12 * std::max(1.0, std::abs(worst)) || worst == -kInf) {
            worst = viol;
            arg = k;
        }
    }
    ConditionVerdict verdict = detail::combine(cert, worst, dirs.col(arg), u.cols(), cfg.tol);

    HildingResult res;
    res.invertible = verdict.certified();
    res.gain_lo = (1.0 - alpha) / (1.0 + beta);
    res.gain_hi = (1.0 + alpha) / (1.0 - beta);
    res.inv_norm_bound = ((1.0 + beta) / (1.0 - alpha)) * opnorm(u_inv, p, p, cfg.search).hi;
    return {verdict, res};
}

// ---------------------------------------------------------------------------
// Hilbert-space theorems (squared-sense bounds)

inline void require_positive_bounds(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw Error(ErrorKind::NonpositiveBounds, "frame bounds must be positive");
}

/// Condition alpha + gamma/sqrt(a) < 1; bounds a(1-(alpha+gamma/sqrt a))^2 and
/// b(1+(alpha+gamma/sqrt b))^2.
inline std::pair<bool, PredictedBounds> pw2_predicted(double a, double b, double alpha, double gamma) {
    require_positive_bounds(a, b);
    PerturbationParams{.alpha = alpha, .gamma = gamma}.validate();
    const double lower_shift = alpha + gamma / std::sqrt(a);
    const double upper_shift = alpha + gamma / std::sqrt(b);
    const double lo = 1.0 - lower_shift;
    const double hi = 1.0 + upper_shift;
    return {lower_shift < 1.0, {a * (lo * lo), b * (hi * hi), TheoremTag::PW2}};
}

/// Condition max{alpha + gamma/sqrt(a), beta} < 1; bounds
/// a(1-(alpha+beta+gamma/sqrt a)/(1+beta))^2 and b(1+(alpha+beta+gamma/sqrt b)/(1-beta))^2.
inline std::pair<bool, PredictedBounds> pw3_predicted(double a, double b, double alpha, double beta, double gamma) {
    require_positive_bounds(a, b);
    PerturbationParams{.alpha = alpha, .beta = beta, .gamma = gamma}.validate();
    const bool holds = std::max(alpha + gamma / std::sqrt(a), beta) < 1.0;
    const double lo = 1.0 - (alpha + beta + gamma / std::sqrt(a)) / (1.0 + beta);
    const double hi = 1.0 + (alpha + beta + gamma / std::sqrt(b)) / (1.0 - beta);
    return {holds, {a * (lo * lo), b * (hi * hi), TheoremTag::PW3}};
}

struct Pw1Result {
    double c = 0.0;  // sum_n ||tau_n - omega_n||^2
    double a = 0.0;
    double b = 0.0;
    bool holds = false;
    PredictedBounds predicted;
};

/// c = sum ||tau_n - omega_n||^2 < a with bounds a(1-sqrt(c/a))^2 and
/// b(1+sqrt(c/b))^2, evaluated as the alpha = 0, gamma = sqrt(c) case of pw2.
inline Pw1Result pw1_check(const Mat& vectors, const Mat& omega) {
    if (vectors.rows() != omega.rows() || vectors.cols() != omega.cols())
        throw Error(ErrorKind::DimensionMismatch, "T and Omega must have the same shape");
    require_finite(omega, "Omega");
    const HilbertFrameBounds hb = hilbert_frame_bounds(vectors);
    Pw1Result out;
    out.a = hb.lower;
    out.b = hb.upper;
    out.c = (vectors - omega).squaredNorm();
    out.holds = out.c < out.a;
    out.predicted = pw2_predicted(out.a, out.b, 0.0, std::sqrt(out.c)).second;
    out.predicted.theorem = TheoremTag::PW1;
    return out;
}

// ---------------------------------------------------------------------------
// p-ASF perturbation conditions

/// ||sum_{n<=m} (f_n - g_n)(x) e_n|| <= r||sum_{n<=m} f_n(x) e_n|| + t||x|| + s||sum_{n<=m} g_n(x) e_n||
/// for all x and all prefixes m.
///
/// Certificate: ||F - G||_{X -> l^p} <= t. The left side is largest at m = N
/// while the right side is at least t||x||, so this covers every prefix and
/// every r, s >= 0.
inline ConditionVerdict analysis_condition(const Mat& f, const Mat& g, PIndex p, PIndex x_norm,
                                           const PerturbationParams& params, const Config& cfg = {}) {
    params.validate();
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw Error(ErrorKind::DimensionMismatch, "F and G must have the same shape");
    if (!(params.s < 1.0))
        throw Error(ErrorKind::InvalidArgument, "analysis condition needs s < 1");
    if (p.is_inf())
        throw Error(ErrorKind::InvalidArgument, "coefficient index p must be finite");
    const Mat diff = f - g;

    std::optional<double> cert;
    const double margin = params.t - opnorm(diff, x_norm, p, cfg.search).hi;
    if (margin >= -cfg.exact_tol)
        cert = margin;

    const Mat dirs = detail::probe_directions(f.cols(), cfg.search, x_norm, 0xa7a1);
    const Mat dx = diff * dirs;
    const Mat fx = f * dirs;
    const Mat gx = g * dirs;
    const double e = p.value();
    double worst = -kInf;
    Eigen::Index arg = 0;
    Eigen::Index arg_m = 1;
    for (Eigen::Index k = 0; k < dirs.cols(); ++k) {
        double sd = 0.0;
        double sf = 0.0;
        double sg = 0.0;
        for (Eigen::Index m = 0; m < f.rows(); ++m) {
            sd += detail::abs_pow(dx(m, k), e);
            sf += params.r > 0.0 ? detail::abs_pow(fx(m, k), e) : 0.0;
            sg += params.s > 0.0 ? detail::abs_pow(gx(m, k), e) : 0.0;
            const double viol = detail::root(sd, e) - params.r * detail::root(sf, e) - params.t -
                                params.s * detail::root(sg, e);
            if (viol > worst + 1e-12 * std::max(1.0, std::abs(worst)) || worst == -kInf) {
                worst = viol;
                arg = k;
                arg_m = m + 1;
            }
        }
    }
    return detail::combine(cert, worst, dirs.col(arg), arg_m, cfg.tol);
}

/// ||sum_{n<=m} c_n(tau_n - omega_n)|| <= alpha||sum c_n tau_n|| + gamma ||c||_p + beta||sum c_n omega_n||
/// for all coefficient prefixes.
///
/// A prefix sequence zero-padded to length N gives the same value on both
/// sides, so m = N covers every prefix. Certificates: ||T - Omega||_{l^p -> X}
/// <= gamma (any alpha, beta), and for p = X = 2 the Gram ordering
/// D^T D <= alpha^2 T^T T + gamma^2 I + beta^2 Omega^T Omega.
inline ConditionVerdict synthesis_condition(const Mat& t, const Mat& omega, PIndex p, PIndex x_norm,
                                            const PerturbationParams& params, const Config& cfg = {}) {
    params.validate();
    if (t.rows() != omega.rows() || t.cols() != omega.cols())
        throw Error(ErrorKind::DimensionMismatch, "T and Omega must have the same shape");
    if (p.is_inf())
        throw Error(ErrorKind::InvalidArgument, "coefficient index p must be finite");
    const Mat diff = t - omega;

    std::optional<double> cert;
    auto offer = [&](double margin) {
        if (margin >= -cfg.exact_tol)
            cert = cert ? std::max(*cert, margin) : margin;
    };
    offer(params.gamma - opnorm(diff, p, x_norm, cfg.search).hi);
    if (p.is_two() && x_norm.is_two() && (params.alpha > 0.0 || params.beta > 0.0)) {
        const Eigen::Index n = t.cols();
        const Mat gram = params.alpha * params.alpha * t.transpose() * t +
                         params.beta * params.beta * omega.transpose() * omega +
                         params.gamma * params.gamma * Mat::Identity(n, n) - diff.transpose() * diff;
        const double scale = std::max(1.0, (t.transpose() * t).norm());
        offer(detail::lambda_min(gram) / scale);
    }

    const Mat dirs = detail::probe_directions(t.cols(), cfg.search, p, 0x5e7a);
    const Mat dc = diff * dirs;
    const Mat tc = t * dirs;
    const Mat oc = omega * dirs;
    double worst = -kInf;
    Eigen::Index arg = 0;
    for (Eigen::Index k = 0; k < dirs.cols(); ++k) {
        const double viol = pnorm(dc.col(k), x_norm) - params.alpha * pnorm(tc.col(k), x_norm) - params.gamma -
                            params.beta * pnorm(oc.col(k), x_norm);
        if (viol > worst + 1e-12 * std::max(1.0, std::abs(worst)) || worst == -kInf) {
            worst = viol;
            arg = k;
        }
    }
    const Vec witness = dirs.col(arg);
    return detail::combine(cert, worst, witness, detail::support_length(witness), cfg.tol);
}

/// Norms of the unperturbed pair that every p-ASF bound formula consumes.
struct PairNorms {
    ThetaNorms theta;
    BoundInterval inverse;  // ||S^{-1}||_{X -> X}
};

inline PairNorms pair_norms(const FramePair& fp, const SearchConfig& cfg = {}) {
    return {theta_norms(fp, cfg), inverse_frame_operator_norm(fp, cfg)};
}

struct MainPrediction {
    bool admissible = false;
    double admissibility = 0.0;  // max{alpha + gamma ||theta_f S^{-1}||, beta, s}
    std::optional<PredictedBounds> predicted;
};

/// Upper-bound formula shared by the main and summable theorems:
/// ((1+alpha)/(1-beta)||theta_tau|| + gamma/(1-beta)) ((1+r)/(1-s)||theta_f|| + t/(1-s)).
inline double perturbed_upper_bound(const PerturbationParams& q, const ThetaNorms& theta) {
    const double synthesis_gain = (1.0 + q.alpha) / (1.0 - q.beta) * theta.synthesis.hi + q.gamma / (1.0 - q.beta);
    const double analysis_gain = (1.0 + q.r) / (1.0 - q.s) * theta.analysis.hi + q.t / (1.0 - q.s);
    return synthesis_gain * analysis_gain;
}

/// Admissibility max{alpha + gamma||theta_f S^{-1}||, beta, s} < 1 and the
/// perturbed pair's bounds, all from the conservative ends of the enclosures.
inline MainPrediction main_predicted_bounds(const PairNorms& norms, const PerturbationParams& q) {
    q.validate();
    MainPrediction out;
    const double shift = q.alpha + q.gamma * norms.theta.analysis_inverse.hi;
    out.admissibility = std::max({shift, q.beta, q.s});
    out.admissible = out.admissibility < 1.0;
    if (!out.admissible)
        return out;
    PredictedBounds pb;
    pb.theorem = TheoremTag::MAIN;
    pb.lower = (1.0 - shift) / ((1.0 + q.beta) * norms.inverse.hi);
    pb.upper = perturbed_upper_bound(q, norms.theta);
    out.predicted = pb;
    return out;
}

/// Lower bound that accounts for the analysis perturbation. The stated lower
/// bound controls S_{f,omega} = theta_omega theta_f only; for S_{g,omega}
/// subtract ||theta_omega|| ||theta_f - theta_g||, both bounded by the
/// hypotheses. Negative values are vacuous.
inline double corrected_lower_bound(double stated_lower, const PerturbationParams& q, const ThetaNorms& theta) {
    const double omega_norm = ((1.0 + q.alpha) * theta.synthesis.hi + q.gamma) / (1.0 - q.beta);
    const double g_norm = ((1.0 + q.r) * theta.analysis.hi + q.t) / (1.0 - q.s);
    return stated_lower - omega_norm * (q.r * theta.analysis.hi + q.s * g_norm + q.t);
}

inline MainPrediction main_predicted_bounds(const FramePair& fp, const PerturbationParams& q,
                                            const Config& cfg = {}) {
    return main_predicted_bounds(pair_norms(fp, cfg.search), q);
}

struct CorollaryResult {
    double lambda = 0.0;            // in the selected exponent mode
    double lambda_as_stated = 0.0;  // sum ||tau_n - omega_n||^p
    double lambda_conjugate = 0.0;  // sum ||tau_n - omega_n||^q (max_n when q = inf)
    double gamma = 0.0;
    double exponent = 0.0;          // exponent actually used (inf encoded as kInf)
    double fn_gap = 0.0;            // sum ||f_n - g_n||
    bool holds = false;
    ExponentMode mode = ExponentMode::AsStatedP;
    std::optional<PredictedBounds> predicted;
    std::optional<std::string> warning;
};

inline constexpr const char* kExponentWarning =
    "corollary exponent mismatch: the condition sums ||tau_n - omega_n||^p while the Hoelder step that "
    "justifies it needs the conjugate exponent q; both values are reported";

/// Condition lambda < 1/||theta_f S^{-1}||^e and bounds
/// (1 - gamma||theta_f S^{-1}||)/||S^{-1}|| and (||theta_tau|| + gamma)(||theta_f|| + sum ||f_n - g_n||)
/// with gamma = lambda^(1/e), e = p or q.
inline CorollaryResult corollary_check(const FramePair& fp, const PairNorms& norms, const Mat& g, const Mat& omega,
                                       ExponentMode mode) {
    if (g.rows() != fp.count() || g.cols() != fp.dim() || omega.rows() != fp.dim() || omega.cols() != fp.count())
        throw Error(ErrorKind::DimensionMismatch, "perturbed family has the wrong shape");
    const PIndex p = fp.p();
    const PIndex q = p.conjugate();
    const PIndex x = fp.x_norm();
    const Mat dt = fp.vectors() - omega;
    const Mat df = fp.functionals() - g;

    CorollaryResult out;
    const Eigen::Index n = fp.count();
    Vec dist(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        dist(k) = pnorm(dt.col(k), x);
        out.fn_gap += dual_norm(df.row(k).transpose(), x);
    }
    for (Eigen::Index k = 0; k < n; ++k)
        out.lambda_as_stated += detail::abs_pow(dist(k), p.value());
    if (q.is_inf()) {
        out.lambda_conjugate = dist.maxCoeff();
    } else {
        for (Eigen::Index k = 0; k < n; ++k)
            out.lambda_conjugate += detail::abs_pow(dist(k), q.value());
    }

    // The two readings coincide at p = 2; report them as one.
    out.mode = p.is_two() ? ExponentMode::AsStatedP : mode;
    if (!p.is_two())
        out.warning = kExponentWarning;

    const double k_norm = norms.theta.analysis_inverse.hi;
    if (out.mode == ExponentMode::AsStatedP) {
        out.exponent = p.value();
        out.lambda = out.lambda_as_stated;
        out.gamma = detail::root(out.lambda, p.value());
        out.holds = out.lambda < 1.0 / detail::abs_pow(k_norm, p.value());
    } else {
        out.exponent = q.value();
        out.lambda = out.lambda_conjugate;
        if (q.is_inf()) {
            out.gamma = out.lambda;
            out.holds = out.lambda < 1.0 / k_norm;
        } else {
            out.gamma = detail::root(out.lambda, q.value());
            out.holds = out.lambda < 1.0 / detail::abs_pow(k_norm, q.value());
        }
    }
    if (out.holds) {
        PredictedBounds pb;
        pb.theorem = TheoremTag::COROLLARY;
        pb.lower = (1.0 - out.gamma * k_norm) / norms.inverse.hi;
        pb.upper = (norms.theta.synthesis.hi + out.gamma) * (norms.theta.analysis.hi + out.fn_gap);
        out.predicted = pb;
    }
    return out;
}

inline CorollaryResult corollary_check(const FramePair& fp, const Mat& g, const Mat& omega, ExponentMode mode,
                                       const Config& cfg = {}) {
    return corollary_check(fp, pair_norms(fp, cfg.search), g, omega, mode);
}

struct SummableResult {
    std::array<double, 4> sums{};
    std::array<bool, 4> holds{};
    bool any = false;
    PredictedBounds predicted;  // upper bound only
};

/// The four alternative summability conditions, each a sum over n that must
/// stay below 1, and the accompanying upper bound.
inline SummableResult summable_conditions_check(const FramePair& fp, const PairNorms& norms, const Mat& g,
                                                const Mat& omega, const PerturbationParams& q) {
    q.validate();
    if (g.rows() != fp.count() || g.cols() != fp.dim() || omega.rows() != fp.dim() || omega.cols() != fp.count())
        throw Error(ErrorKind::DimensionMismatch, "perturbed family has the wrong shape");
    const PIndex x = fp.x_norm();
    const Mat& f = fp.functionals();
    const Mat& t = fp.vectors();
    const Mat s_inv = frame_operator_inverse(fp);
    const Mat df = f - g;
    const Mat dt = t - omega;
    const Mat s_inv_t = s_inv * t;
    const Mat s_inv_omega = s_inv * omega;
    const Mat s_inv_dt = s_inv * dt;
    const Mat df_s_inv = df * s_inv;
    const Mat g_s_inv = g * s_inv;
    const Mat f_s_inv = f * s_inv;

    SummableResult out;
    for (Eigen::Index n = 0; n < fp.count(); ++n) {
        const double df_norm = dual_norm(df.row(n).transpose(), x);
        const double dt_norm = pnorm(dt.col(n), x);
        const double df_s_norm = dual_norm(df_s_inv.row(n).transpose(), x);
        out.sums[0] += df_norm * pnorm(s_inv_t.col(n), x) + dual_norm(g.row(n).transpose(), x) * pnorm(s_inv_dt.col(n), x);
        out.sums[1] += df_norm * pnorm(s_inv_omega.col(n), x) + dual_norm(f.row(n).transpose(), x) * pnorm(s_inv_dt.col(n), x);
        out.sums[2] += df_s_norm * pnorm(t.col(n), x) + dual_norm(g_s_inv.row(n).transpose(), x) * dt_norm;
        out.sums[3] += df_s_norm * pnorm(omega.col(n), x) + dual_norm(f_s_inv.row(n).transpose(), x) * dt_norm;
    }
    for (std::size_t i = 0; i < 4; ++i) {
        out.holds[i] = out.sums[i] < 1.0;
        out.any = out.any || out.holds[i];
    }
    out.predicted.theorem = TheoremTag::SUMMABLE;
    out.predicted.upper = perturbed_upper_bound(q, norms.theta);
    return out;
}

inline SummableResult summable_conditions_check(const FramePair& fp, const Mat& g, const Mat& omega,
                                                const PerturbationParams& q, const Config& cfg = {}) {
    return summable_conditions_check(fp, pair_norms(fp, cfg.search), g, omega, q);
}

} // namespace pframe
