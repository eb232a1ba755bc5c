#pragma once

// Brute-force oracles and the bracket-test harness. The oracles search the
// unit sphere directly (dense sampling + coordinate refinement) and never go
// through the closed-form or fixed-point routines of normed_linalg, so they
// can be used to cross-check them.

#include "pframe/perturbation.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace pframe {

// ---------------------------------------------------------------------------
// sphere search

namespace detail {

/// Compass search with expansion along coordinates; `phi` is scale invariant
/// and `x` is renormalized by `normalize` after each sweep.
template <class Objective, class Normalize>
double coordinate_refine(Objective&& phi, Normalize&& normalize, Vec& x, bool maximize, int sweeps, double rel_tol) {
    const double sign = maximize ? 1.0 : -1.0;
    double best = phi(x);
    double h = 0.25;
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        const double before = best;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            for (double dir : {1.0, -1.0}) {
                double step = dir * h;
                bool moved = false;
                for (int expand = 0; expand < 30; ++expand) {
                    const double old = x(i);
                    x(i) = old + step;
                    const double v = phi(x);
                    if (sign * (v - best) > 0.0) {
                        best = v;
                        moved = true;
                        step *= 2.0;
                    } else {
                        x(i) = old;
                        break;
                    }
                }
                if (moved)
                    break;
            }
        }
        normalize(x);
        if (sign * (best - before) <= rel_tol * std::abs(best)) {
            h *= 0.5;
            if (h < rel_tol)
                break;
        }
    }
    return best;
}

template <class Objective>
struct SphereExtremum {
    double value;
    Vec arg;
};

/// Best values of a scale-invariant objective over the unit sphere of `norm`
/// in R^dim: dense quasi-random sampling, then coordinate refinement of the
/// three best samples.
template <class Objective>
SphereExtremum<Objective> sphere_search(Objective&& phi, Eigen::Index dim, PIndex norm, bool maximize,
                                        const Config& cfg, std::uint64_t salt) {
    const Eigen::Index count = static_cast<Eigen::Index>(cfg.oracle_samples);
    Mat dirs(dim, dim + count);
    dirs.leftCols(dim).setIdentity();
    dirs.rightCols(count) = quasi_gaussian_directions(dim, count, mix_seed(cfg.search.seed, salt));
    auto normalize = [&](Vec& v) {
        const double n = pnorm(v, norm);
        if (n > 0.0)
            v /= n;
    };

    const double sign = maximize ? 1.0 : -1.0;
    constexpr int kKeep = 3;
    std::vector<std::pair<double, Eigen::Index>> top;
    for (Eigen::Index k = 0; k < dirs.cols(); ++k) {
        Vec v = dirs.col(k);
        normalize(v);
        dirs.col(k) = v;
        const double val = sign * phi(v);
        if (static_cast<int>(top.size()) < kKeep || val > top.back().first) {
            top.emplace_back(val, k);
            std::sort(top.begin(), top.end(), [](auto& a, auto& b) { return a.first > b.first; });
            if (static_cast<int>(top.size()) > kKeep)
                top.pop_back();
        }
    }

    SphereExtremum<Objective> best{sign * top.front().first, dirs.col(top.front().second)};
    for (auto& [val, k] : top) {
        Vec x = dirs.col(k);
        const double refined = coordinate_refine(phi, normalize, x, maximize, cfg.refine_steps, cfg.refine_rel_tol);
        if (sign * refined > sign * best.value) {
            best.value = refined;
            best.arg = x;
        }
    }
    return best;
}

} // namespace detail

struct GainExtrema {
    double min = 0.0;  // upper estimate of inf ||Mx||_b / ||x||_a
    double max = 0.0;  // lower estimate of sup ||Mx||_b / ||x||_a
};

/// Sampled extreme gains of M: (R^n, ||.||_a) -> (R^m, ||.||_b).
inline GainExtrema sampled_gain_extrema(const Mat& m, PIndex a, PIndex b, const Config& cfg = {}) {
    auto gain = [&](const Vec& x) {
        const double nx = pnorm(x, a);
        return nx > 0.0 ? pnorm(Vec(m * x), b) / nx : 0.0;
    };
    GainExtrema out;
    out.max = detail::sphere_search(gain, m.cols(), a, true, cfg, 0x0a11).value;
    out.min = detail::sphere_search(gain, m.cols(), a, false, cfg, 0x0a12).value;
    if (m.rows() == m.cols() && is_invertible(m, cfg.singular_rel)) {
        // inf gain of M is 1 / sup gain of M^{-1}; both searches overestimate the inf
        const Mat inv = invert(m, cfg.singular_rel);
        auto inv_gain = [&](const Vec& y) {
            const double ny = pnorm(y, b);
            return ny > 0.0 ? pnorm(Vec(inv * y), a) / ny : 0.0;
        };
        const double sup_inv = detail::sphere_search(inv_gain, m.rows(), b, true, cfg, 0x0a13).value;
        if (sup_inv > 0.0)
            out.min = std::min(out.min, 1.0 / sup_inv);
    } else if (m.rows() == m.cols()) {
        out.min = 0.0;
    }
    return out;
}

/// Actual unsquared bounds of a pair, computed without the enclosure routines.
struct ActualBounds {
    double lower = 0.0;
    double upper = 0.0;
    bool exact = false;    // singular values rather than sampling
    bool squared = false;  // Hilbert frame bounds (eigenvalues of T T^T)

    friend bool operator==(const ActualBounds&, const ActualBounds&) = default;
};

/// min/max of ||Sx|| / ||x|| over the unit X-sphere; exact singular values
/// when X is Euclidean.
inline ActualBounds actual_bounds_oracle(const FramePair& fp, const Config& cfg = {}) {
    const Mat s = frame_operator(fp);
    if (!is_invertible(s, cfg.singular_rel))
        throw Error(ErrorKind::NotAnASF, "frame operator is singular");
    if (fp.x_norm().is_two()) {
        Eigen::JacobiSVD<Mat> svd(s);
        const auto& sv = svd.singularValues();
        return {sv(sv.size() - 1), sv(0), true, false};
    }
    const GainExtrema g = sampled_gain_extrema(s, fp.x_norm(), fp.x_norm(), cfg);
    return {g.min, g.max, false, false};
}

/// Smallest gamma for which ||sum c_n(tau_n - omega_n)|| <= alpha||sum c_n tau_n||
/// + gamma||c||_p + beta||sum c_n omega_n|| holds on every sampled prefix.
inline double best_gamma_oracle(const Mat& t, const Mat& omega, PIndex p, PIndex x_norm, double alpha, double beta,
                                const Config& cfg = {}) {
    if (t.rows() != omega.rows() || t.cols() != omega.cols())
        throw Error(ErrorKind::DimensionMismatch, "T and Omega must have the same shape");
    if (!(beta < 1.0))
        throw Error(ErrorKind::InvalidArgument, "best_gamma_oracle needs beta < 1");
    const Mat diff = t - omega;
    if (diff.isZero(0.0))
        return 0.0;
    // Zero-padding a prefix sequence leaves every term unchanged, so sampling
    // full-length sequences covers all prefixes.
    auto excess = [&](const Vec& c) {
        const double nc = pnorm(c, p);
        if (nc == 0.0)
            return 0.0;
        return (pnorm(Vec(diff * c), x_norm) - alpha * pnorm(Vec(t * c), x_norm) -
                beta * pnorm(Vec(omega * c), x_norm)) /
               nc;
    };
    return std::max(0.0, detail::sphere_search(excess, t.cols(), p, true, cfg, 0x9a33).value);
}

struct PrefixMaximum {
    double value = 0.0;
    Eigen::Index prefix = 0;  // 1-based maximizing prefix length
};

/// Smallest t for which ||P_m(F-G)x||_p <= r||P_m Fx||_p + t||x|| + s||P_m Gx||_p
/// on every sampled x and prefix m; reports the maximizing prefix (largest on ties).
inline PrefixMaximum best_t_oracle(const Mat& f, const Mat& g, PIndex p, PIndex x_norm, double r, double s,
                                   const Config& cfg = {}) {
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw Error(ErrorKind::DimensionMismatch, "F and G must have the same shape");
    if (!(s < 1.0))
        throw Error(ErrorKind::InvalidArgument, "best_t_oracle needs s < 1");
    const Mat diff = f - g;
    const double e = p.value();
    const Eigen::Index n = f.rows();
    auto best_prefix = [&](const Vec& x) {
        PrefixMaximum pm{-kInf, n};
        const double nx = pnorm(x, x_norm);
        if (nx == 0.0)
            return PrefixMaximum{0.0, n};
        const Vec dx = diff * x;
        const Vec fx = f * x;
        const Vec gx = g * x;
        double sd = 0.0, sf = 0.0, sg = 0.0;
        for (Eigen::Index m = 0; m < n; ++m) {
            sd += detail::abs_pow(dx(m), e);
            sf += detail::abs_pow(fx(m), e);
            sg += detail::abs_pow(gx(m), e);
            const double v = (detail::root(sd, e) - r * detail::root(sf, e) - s * detail::root(sg, e)) / nx;
            if (v >= pm.value) {
                pm.value = v;
                pm.prefix = m + 1;
            }
        }
        return pm;
    };
    auto objective = [&](const Vec& x) { return best_prefix(x).value; };
    const auto ext = detail::sphere_search(objective, f.cols(), x_norm, true, cfg, 0x7b44);
    PrefixMaximum out = best_prefix(ext.arg);
    out.value = std::max(0.0, std::max(out.value, ext.value));
    return out;
}

// ---------------------------------------------------------------------------
// instances and bracket tests

/// A base pair ({f_n}, {tau_n}) with its perturbation ({g_n}, {omega_n}).
struct Instance {
    FramePair fp;
    Mat g;
    Mat omega;
    PerturbationParams params;
    std::uint64_t seed = 0;

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.fp == b.fp && a.g.rows() == b.g.rows() && a.g.cols() == b.g.cols() && a.g == b.g &&
               a.omega.rows() == b.omega.rows() && a.omega.cols() == b.omega.cols() && a.omega == b.omega &&
               a.params == b.params && a.seed == b.seed;
    }
};

struct NamedVerdict {
    std::string name;
    ConditionVerdict verdict;
};

struct VerificationReport {
    TheoremTag theorem = TheoremTag::MAIN;
    std::uint64_t seed = 0;
    double p = 2.0;
    double x_norm = 2.0;
    std::vector<NamedVerdict> verdicts;
    bool hypotheses_hold = false;
    std::optional<PredictedBounds> predicted;
    std::optional<ActualBounds> actual;
    std::optional<bool> perturbed_is_asf;
    std::optional<bool> bracket_ok;
    std::map<std::string, double> quantities;
    std::vector<std::string> warnings;
    std::optional<std::string> error;
    std::map<std::string, double> timings_ms;

    /// Hypotheses certified but the conclusion failed.
    bool certified_violation() const { return hypotheses_hold && bracket_ok && !*bracket_ok; }
};

inline constexpr const char* kStatedLowerWarning =
    "stated lower bound exceeded: it bounds S_{f,omega} and ignores the analysis perturbation g_n != f_n; "
    "see corrected_lower";

namespace detail {

inline bool all_certified(const std::vector<NamedVerdict>& vs) {
    return std::all_of(vs.begin(), vs.end(), [](const NamedVerdict& v) { return v.verdict.certified(); });
}

inline void finish_bracket(VerificationReport& rep, double tol) {
    if (!rep.hypotheses_hold)
        return;
    if (!rep.perturbed_is_asf.value_or(false) || !rep.actual || !rep.predicted) {
        rep.bracket_ok = false;
        return;
    }
    bool ok = rep.actual->upper <= rep.predicted->upper + tol;
    rep.quantities["upper_slack"] = rep.predicted->upper - rep.actual->upper;
    if (rep.predicted->lower) {
        ok = ok && *rep.predicted->lower - tol <= rep.actual->lower;
        rep.quantities["lower_slack"] = rep.actual->lower - *rep.predicted->lower;
    }
    rep.bracket_ok = ok;
}

inline void hilbert_actual(VerificationReport& rep, const Mat& omega, const Config& cfg) {
    try {
        const HilbertFrameBounds hb = hilbert_frame_bounds(omega, cfg.singular_rel);
        rep.actual = ActualBounds{hb.lower, hb.upper, true, true};
        rep.perturbed_is_asf = true;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotAFrame)
            throw;
        rep.perturbed_is_asf = false;
    }
}

inline void asf_actual(VerificationReport& rep, const Instance& inst, const Config& cfg) {
    const FramePair perturbed(inst.g, inst.omega, inst.fp.p(), inst.fp.x_norm());
    if (!is_asf(perturbed, cfg.singular_rel)) {
        rep.perturbed_is_asf = false;
        return;
    }
    rep.perturbed_is_asf = true;
    rep.actual = actual_bounds_oracle(perturbed, cfg);
}

/// When the stated lower bound fails, record the lower bound of S_{f,omega}
/// (which the stated bound does control) and the corrected bound's slack.
inline void diagnose_lower(VerificationReport& rep, const Instance& inst, const Config& cfg) {
    const auto corrected = rep.quantities.find("corrected_lower");
    if (corrected == rep.quantities.end() || !rep.actual)
        return;
    rep.quantities["corrected_lower_slack"] = rep.actual->lower - corrected->second;
    const auto slack = rep.quantities.find("lower_slack");
    if (slack == rep.quantities.end() || slack->second >= -cfg.tol)
        return;
    const FramePair f_omega(inst.fp.functionals(), inst.omega, inst.fp.p(), inst.fp.x_norm());
    if (is_asf(f_omega, cfg.singular_rel))
        rep.quantities["actual_lower_f_omega"] = actual_bounds_oracle(f_omega, cfg).lower;
    rep.warnings.push_back(kStatedLowerWarning);
}

inline void record_norms(VerificationReport& rep, const PairNorms& norms) {
    rep.quantities["theta_f_hi"] = norms.theta.analysis.hi;
    rep.quantities["theta_tau_hi"] = norms.theta.synthesis.hi;
    rep.quantities["theta_f_s_inv_hi"] = norms.theta.analysis_inverse.hi;
    rep.quantities["s_inv_hi"] = norms.inverse.hi;
}

} // namespace detail

/// Runs a theorem's hypotheses on an instance and, when they are certified,
/// compares the predicted bounds with the oracle's actual bounds of the
/// perturbed family. Failures are report fields, never exceptions.
inline VerificationReport bracket_test(const Instance& inst, TheoremTag tag, const Config& cfg = {}) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    VerificationReport rep;
    rep.theorem = tag;
    rep.seed = inst.seed;
    rep.p = inst.fp.p().value();
    rep.x_norm = inst.fp.x_norm().value();
    const PerturbationParams& q = inst.params;
    const Mat& t = inst.fp.vectors();

    try {
        if (is_hilbert_theorem(tag)) {
            const HilbertFrameBounds hb = hilbert_frame_bounds(t, cfg.singular_rel);
            rep.quantities["a"] = hb.lower;
            rep.quantities["b"] = hb.upper;
            if (tag == TheoremTag::PW1) {
                const Pw1Result r = pw1_check(t, inst.omega);
                rep.quantities["c"] = r.c;
                rep.predicted = r.predicted;
                rep.hypotheses_hold = r.holds;
            } else {
                PerturbationParams used = q;
                used.r = used.s = used.t = 0.0;
                if (tag == TheoremTag::PW2)
                    used.beta = 0.0;
                rep.verdicts.push_back(
                    {"synthesis", synthesis_condition(t, inst.omega, PIndex(2.0), PIndex(2.0), used, cfg)});
                auto [holds, pb] = tag == TheoremTag::PW2 ? pw2_predicted(hb.lower, hb.upper, used.alpha, used.gamma)
                                                          : pw3_predicted(hb.lower, hb.upper, used.alpha, used.beta,
                                                                          used.gamma);
                rep.quantities["admissibility"] =
                    std::max(used.alpha + used.gamma / std::sqrt(hb.lower), used.beta);
                rep.predicted = pb;
                rep.hypotheses_hold = holds && detail::all_certified(rep.verdicts);
            }
            if (rep.hypotheses_hold)
                detail::hilbert_actual(rep, inst.omega, cfg);
        } else {
            if (!is_asf(inst.fp, cfg.singular_rel)) {
                rep.error = "base pair is not an approximate Schauder frame";
                return rep;
            }
            const PairNorms norms = pair_norms(inst.fp, cfg.search);
            detail::record_norms(rep, norms);
            const PIndex p = inst.fp.p();
            const PIndex x = inst.fp.x_norm();
            if (tag == TheoremTag::COROLLARY) {
                const CorollaryResult c = corollary_check(inst.fp, norms, inst.g, inst.omega, cfg.exponent_mode);
                rep.quantities["lambda"] = c.lambda;
                rep.quantities["lambda_as_stated"] = c.lambda_as_stated;
                rep.quantities["lambda_conjugate"] = c.lambda_conjugate;
                rep.quantities["gamma"] = c.gamma;
                rep.quantities["exponent"] = c.exponent;
                rep.quantities["fn_gap"] = c.fn_gap;
                if (c.warning)
                    rep.warnings.push_back(*c.warning);
                rep.warnings.push_back(std::string("exponent mode: ") + to_string(c.mode));
                rep.predicted = c.predicted;
                rep.hypotheses_hold = c.holds;
                if (c.predicted)
                    rep.quantities["corrected_lower"] = corrected_lower_bound(
                        *c.predicted->lower, PerturbationParams{0.0, 0.0, c.fn_gap, 0.0, 0.0, c.gamma}, norms.theta);
            } else {
                rep.verdicts.push_back({"analysis", analysis_condition(inst.fp.functionals(), inst.g, p, x, q, cfg)});
                rep.verdicts.push_back({"synthesis", synthesis_condition(t, inst.omega, p, x, q, cfg)});
                if (tag == TheoremTag::MAIN) {
                    const MainPrediction mp = main_predicted_bounds(norms, q);
                    rep.quantities["admissibility"] = mp.admissibility;
                    rep.predicted = mp.predicted;
                    rep.hypotheses_hold = mp.admissible && detail::all_certified(rep.verdicts);
                    if (mp.predicted)
                        rep.quantities["corrected_lower"] =
                            corrected_lower_bound(*mp.predicted->lower, q, norms.theta);
                } else {
                    const SummableResult sr = summable_conditions_check(inst.fp, norms, inst.g, inst.omega, q);
                    for (std::size_t i = 0; i < 4; ++i)
                        rep.quantities["sum" + std::to_string(i + 1)] = sr.sums[i];
                    rep.quantities["admissibility"] = std::max(q.beta, q.s);
                    rep.predicted = sr.predicted;
                    rep.hypotheses_hold = sr.any && std::max(q.beta, q.s) < 1.0 && detail::all_certified(rep.verdicts);
                }
            }
            if (rep.hypotheses_hold)
                detail::asf_actual(rep, inst, cfg);
        }
        detail::finish_bracket(rep, cfg.tol);
        detail::diagnose_lower(rep, inst, cfg);
    } catch (const Error& e) {
        rep.error = e.what();
        rep.hypotheses_hold = false;
        rep.bracket_ok.reset();
    }
    rep.timings_ms["total"] = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    return rep;
}

// ---------------------------------------------------------------------------
// instance generation

enum class InstanceMode { HilbertCanonical, GeneralPASF };

inline const char* to_string(InstanceMode m) { return m == InstanceMode::HilbertCanonical ? "hilbert" : "general"; }

namespace detail {

/// Gaussian matrix whose Gram/frame operator has sigma_min/sigma_max >= floor.
inline Mat well_conditioned(Rng& rng, Eigen::Index rows, Eigen::Index cols, const std::function<Mat(const Mat&)>& op,
                            double floor, int attempts) {
    for (int k = 0; k < attempts; ++k) {
        Mat m = rng.normal_matrix(rows, cols);
        Eigen::JacobiSVD<Mat> svd(op(m));
        const auto& sv = svd.singularValues();
        if (sv(0) > 0.0 && sv(sv.size() - 1) >= floor * sv(0))
            return m;
    }
    throw Error(ErrorKind::GenerationFailed, "no well-conditioned frame after resampling");
}

inline double max_prefix_gram_gamma(const Mat& t, const Mat& diff, double alpha) {
    // smallest gamma with D^T D <= alpha^2 T^T T + gamma^2 I
    const Mat gram = diff.transpose() * diff - alpha * alpha * t.transpose() * t;
    return std::sqrt(std::max(0.0, lambda_max(gram)));
}

} // namespace detail

/// Deterministic instance from a seed.
///
/// Hilbert mode builds a canonical pair (F = T^T, p = X = 2, G = F) with a
/// Gaussian column perturbation of T; general mode draws F and T
/// independently and perturbs both. Constants are set from certified norms
/// inflated by 10%, and the perturbation is halved until every hypothesis of
/// the mode's theorems holds. `perturb_scale` is therefore an upper limit.
inline Instance random_instance(std::uint64_t seed, Eigen::Index d, Eigen::Index n, PIndex p, double perturb_scale,
                                InstanceMode mode, const Config& cfg = {}) {
    if (d < 1 || n < 1)
        throw Error(ErrorKind::InvalidArgument, "need d >= 1 and N >= 1");
    if (p.is_inf())
        throw Error(ErrorKind::InvalidArgument, "p must be finite");
    if (!(perturb_scale >= 0.0) || !std::isfinite(perturb_scale))
        throw Error(ErrorKind::InvalidArgument, "perturb_scale must be finite and nonnegative");
    constexpr double kInflate = 1.1;
    constexpr int kAttempts = 200;
    constexpr int kHalvings = 40;
    Rng rng(seed);

    if (mode == InstanceMode::HilbertCanonical) {
        const Mat t = detail::well_conditioned(
            rng, d, n, [](const Mat& m) -> Mat { return m * m.transpose(); }, 1e-3, kAttempts);
        const Mat noise = rng.normal_matrix(d, n);
        PerturbationParams q;
        if (perturb_scale > 0.0) {
            q.alpha = rng.uniform(0.0, 0.25);
            q.beta = rng.uniform(0.0, 0.25);
        }
        const FramePair fp = canonical_hilbert_pair(t);
        const HilbertFrameBounds hb = hilbert_frame_bounds(t);
        double scale = perturb_scale;
        for (int h = 0; h <= kHalvings; ++h, scale *= 0.5) {
            const Mat omega = t + scale * noise;
            const Mat diff = t - omega;
            const double c = diff.squaredNorm();
            PerturbationParams trial = q;
            // The Gram certificate dominates the sampled minimal gamma, so it is
            // the one inflated.
            trial.gamma = kInflate * detail::max_prefix_gram_gamma(t, diff, q.alpha);
            if (scale == 0.0)
                trial = {};
            const double shift = trial.alpha + trial.gamma / std::sqrt(hb.lower);
            if (c < hb.lower && shift < 1.0 && trial.beta < 1.0 && is_invertible(omega * omega.transpose(), cfg.singular_rel))
                return {fp, fp.functionals(), omega, trial, seed};
        }
        throw Error(ErrorKind::GenerationFailed, "perturbation could not be shrunk into the admissible region");
    }

    const Mat f = rng.normal_matrix(n, d);
    Mat t;
    for (int k = 0;; ++k) {
        if (k == kAttempts)
            throw Error(ErrorKind::GenerationFailed, "no invertible frame operator after resampling");
        t = rng.normal_matrix(d, n);
        if (is_invertible(t * f, 1e-2))
            break;
    }
    const Mat noise_f = rng.normal_matrix(n, d);
    const Mat noise_t = rng.normal_matrix(d, n);
    PerturbationParams q;
    if (perturb_scale > 0.0) {
        q.r = rng.uniform(0.0, 0.25);
        q.s = rng.uniform(0.0, 0.25);
        q.alpha = rng.uniform(0.0, 0.25);
        q.beta = rng.uniform(0.0, 0.25);
    }
    const FramePair fp(f, t, p);
    const PairNorms norms = pair_norms(fp, cfg.search);
    double scale = perturb_scale;
    for (int h = 0; h <= kHalvings; ++h, scale *= 0.5) {
        const Mat g = f + scale * noise_f;
        const Mat omega = t + scale * noise_t;
        PerturbationParams trial = q;
        trial.t = kInflate * opnorm(f - g, p, p, cfg.search).hi;
        trial.gamma = kInflate * opnorm(t - omega, p, p, cfg.search).hi;
        if (scale == 0.0)
            trial = {};
        const MainPrediction mp = main_predicted_bounds(norms, trial);
        if (mp.admissible && is_asf(FramePair(g, omega, p), 1e-6))
            return {fp, g, omega, trial, seed};
    }
    throw Error(ErrorKind::GenerationFailed, "perturbation could not be shrunk into the admissible region");
}

/// Canonical pair from T checked through the main theorem with G = F.
///
/// Without explicit parameters gamma is the certified ||T - Omega||_2 and all
/// other constants are zero.
inline VerificationReport hilbert_specialization_test(const Mat& t, const Mat& omega, const Config& cfg = {},
                                                      std::optional<PerturbationParams> params = std::nullopt) {
    const FramePair fp = canonical_hilbert_pair(t);
    PerturbationParams q;
    if (params) {
        q = *params;
    } else if (t.rows() == omega.rows() && t.cols() == omega.cols()) {
        q.gamma = largest_singular_value(t - omega);
    }
    Instance inst{fp, fp.functionals(), omega, q, cfg.search.seed};
    VerificationReport rep = bracket_test(inst, TheoremTag::MAIN, cfg);
    rep.quantities["transpose_identity"] = fp.functionals() == t.transpose() ? 1.0 : 0.0;
    Eigen::FullPivLU<Mat> lu(omega);
    rep.quantities["omega_rank"] = static_cast<double>(lu.rank());
    if (rep.hypotheses_hold) {
        try {
            const HilbertFrameBounds hb = hilbert_frame_bounds(omega, cfg.singular_rel);
            rep.quantities["omega_frame_lower"] = hb.lower;
            rep.quantities["omega_frame_upper"] = hb.upper;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotAFrame)
                throw;
            rep.bracket_ok = false;
        }
        if (lu.rank() != t.rows())
            rep.bracket_ok = false;
    }
    return rep;
}

} // namespace pframe
