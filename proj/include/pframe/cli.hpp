#pragma once

// The analyze | check | verify | gen commands, as functions from options to
// (exit code, JSON text) so they can be driven without a process boundary.

#include "pframe/io.hpp"

#include <string>
#include <vector>

namespace pframe::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kNotAnASF = 2,
    kFalsified = 3,
    kUndecided = 4,
};

struct CommandResult {
    int exit_code = kSuccess;
    std::string output;  // JSON document, or an error message when exit_code == kUsage
};

inline CommandResult usage_error(const std::string& message) { return {kUsage, message}; }

// ---------------------------------------------------------------------------
// analyze

inline CommandResult analyze_instance(const Instance& inst, const Config& cfg) {
    const FramePair& fp = inst.fp;
    json out;
    out["provenance"] = io::provenance(cfg);
    out["p"] = io::p_index(fp.p());
    out["x_norm"] = io::p_index(fp.x_norm());
    out["dim"] = fp.dim();
    out["count"] = fp.count();
    out["frame_operator"] = io::matrix(frame_operator(fp));
    const bool asf = is_asf(fp, cfg.singular_rel);
    out["asf"] = asf;
    if (!asf) {
        out["bounds"] = nullptr;
        out["theta_norms"] = nullptr;
        return {kNotAnASF, io::dump(out)};
    }
    const ASFBounds b = asf_bounds(fp, cfg.search);
    out["bounds"] = {{"lower", io::interval(b.lower)}, {"upper", io::interval(b.upper)}};
    const ThetaNorms th = theta_norms(fp, cfg.search);
    out["theta_norms"] = {{"analysis", io::interval(th.analysis)},
                          {"synthesis", io::interval(th.synthesis)},
                          {"analysis_inverse", io::interval(th.analysis_inverse)}};
    return {kSuccess, io::dump(out)};
}

inline CommandResult cmd_analyze(const std::string& path, const Config& cfg) {
    try {
        return analyze_instance(io::instance(io::parse_text(io::read_file(path))), cfg);
    } catch (const Error& e) {
        return usage_error(e.what());
    }
}

// ---------------------------------------------------------------------------
// check

/// Keys an instance must carry explicitly for a theorem check. A perturbation
/// check needs the perturbed vectors; theorems with free constants need them.
inline std::vector<std::string> required_fields(TheoremTag tag) {
    switch (tag) {
    case TheoremTag::PW1:
    case TheoremTag::COROLLARY: return {"Omega"};
    case TheoremTag::PW2:
    case TheoremTag::PW3:
    case TheoremTag::MAIN:
    case TheoremTag::SUMMABLE: return {"Omega", "params"};
    }
    return {};
}

inline int check_exit_code(const VerificationReport& rep) {
    for (const auto& v : rep.verdicts)
        if (v.verdict.status == VerdictStatus::Falsified)
            return kFalsified;
    return rep.hypotheses_hold ? kSuccess : kUndecided;
}

inline CommandResult check_instance(const Instance& inst, TheoremTag tag, const Config& cfg,
                                    bool with_timings = false) {
    if (!is_hilbert_theorem(tag) && !is_asf(inst.fp, cfg.singular_rel)) {
        json out;
        out["provenance"] = io::provenance(cfg);
        out["x_norm"] = io::p_index(inst.fp.x_norm());
        out["error"] = "base pair is not an approximate Schauder frame";
        return {kNotAnASF, io::dump(out)};
    }
    const VerificationReport rep = bracket_test(inst, tag, cfg);
    json out = io::report(rep, with_timings);
    out["provenance"] = io::provenance(cfg);
    if (rep.error && is_hilbert_theorem(tag))
        return {kNotAnASF, io::dump(out)};
    return {check_exit_code(rep), io::dump(out)};
}

inline CommandResult cmd_check(const std::string& path, TheoremTag tag, const Config& cfg,
                               bool with_timings = false) {
    try {
        const json doc = io::parse_text(io::read_file(path));
        for (const auto& key : required_fields(tag))
            io::require(doc, key);
        return check_instance(io::instance(doc), tag, cfg, with_timings);
    } catch (const Error& e) {
        return usage_error(e.what());
    }
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::uint64_t first_seed = 1;
    std::uint64_t last_seed = 100;
    Eigen::Index dim = 2;
    Eigen::Index count = 3;
    double p = 2.0;
    double scale = 0.05;
    TheoremTag theorem = TheoremTag::PW1;
    std::optional<InstanceMode> mode;  // defaults by theorem
};

inline InstanceMode default_mode(TheoremTag tag) {
    return is_hilbert_theorem(tag) ? InstanceMode::HilbertCanonical : InstanceMode::GeneralPASF;
}

/// Seeded ensemble of bracket tests, aggregated. Exit code is nonzero only
/// when a trial with certified hypotheses violated its predicted bounds.
inline CommandResult cmd_verify(const VerifyOptions& opt, const Config& cfg) {
    if (opt.last_seed < opt.first_seed)
        return usage_error("empty seed range");
    if (opt.dim < 1 || opt.count < 1)
        return usage_error("--dim and --count must be positive");
    const InstanceMode mode = opt.mode.value_or(default_mode(opt.theorem));
    if (is_hilbert_theorem(opt.theorem) && mode != InstanceMode::HilbertCanonical)
        return usage_error("Hilbert-space theorems need --mode hilbert");
    if (mode == InstanceMode::HilbertCanonical && opt.p != 2.0)
        return usage_error("Hilbert instances have p = 2");
    PIndex p;
    try {
        p = PIndex(opt.p);
    } catch (const Error& e) {
        return usage_error(e.what());
    }

    json failed = json::array();
    json violations = json::array();
    json undecided = json::array();
    json corrected_violations = json::array();
    json violation_details = json::array();
    std::size_t trials = 0, certified = 0, passed = 0;
    std::optional<double> worst_lower, worst_upper;
    std::uint64_t worst_lower_seed = 0, worst_upper_seed = 0;

    for (std::uint64_t seed = opt.first_seed;; ++seed) {
        ++trials;
        Config trial_cfg = cfg;
        trial_cfg.search.seed = mix_seed(cfg.search.seed, seed);
        try {
            const Instance inst = random_instance(seed, opt.dim, opt.count, p, opt.scale, mode, trial_cfg);
            const VerificationReport rep = bracket_test(inst, opt.theorem, trial_cfg);
            if (!rep.hypotheses_hold) {
                undecided.push_back(seed);
            } else {
                ++certified;
                if (rep.bracket_ok.value_or(false))
                    ++passed;
                else {
                    violations.push_back(seed);
                    json detail = {{"seed", seed}};
                    for (const char* key : {"lower_slack", "upper_slack", "actual_lower_f_omega",
                                            "corrected_lower_slack"})
                        if (auto it = rep.quantities.find(key); it != rep.quantities.end())
                            detail[key] = io::number(it->second);
                    if (rep.predicted && rep.predicted->lower)
                        detail["predicted_lower"] = io::number(*rep.predicted->lower);
                    if (rep.actual)
                        detail["actual_lower"] = io::number(rep.actual->lower);
                    violation_details.push_back(detail);
                }
                if (auto it = rep.quantities.find("corrected_lower_slack");
                    it != rep.quantities.end() && it->second < -cfg.tol)
                    corrected_violations.push_back(seed);
                if (auto it = rep.quantities.find("lower_slack"); it != rep.quantities.end())
                    if (!worst_lower || it->second < *worst_lower) {
                        worst_lower = it->second;
                        worst_lower_seed = seed;
                    }
                if (auto it = rep.quantities.find("upper_slack"); it != rep.quantities.end())
                    if (!worst_upper || it->second < *worst_upper) {
                        worst_upper = it->second;
                        worst_upper_seed = seed;
                    }
            }
        } catch (const Error& e) {
            failed.push_back({{"seed", seed}, {"error", e.what()}});
        }
        if (seed == opt.last_seed)
            break;
    }

    json out;
    out["provenance"] = io::provenance(cfg);
    out["theorem"] = to_string(opt.theorem);
    out["mode"] = to_string(mode);
    out["seeds"] = {{"first", opt.first_seed}, {"last", opt.last_seed}};
    out["dim"] = opt.dim;
    out["count"] = opt.count;
    out["p"] = io::number(opt.p);
    out["x_norm"] = io::number(opt.p);
    out["scale"] = opt.scale;
    out["trials"] = trials;
    out["certified"] = certified;
    out["bracket_ok"] = passed;
    out["certified_violations"] = violations;
    out["violation_details"] = violation_details;
    out["corrected_lower_violations"] = corrected_violations;
    out["undecided"] = undecided;
    out["generation_failed"] = failed;
    out["worst_lower_slack"] = worst_lower ? json{{"value", io::number(*worst_lower)}, {"seed", worst_lower_seed}}
                                           : json(nullptr);
    out["worst_upper_slack"] = worst_upper ? json{{"value", io::number(*worst_upper)}, {"seed", worst_upper_seed}}
                                           : json(nullptr);
    return {violations.empty() ? kSuccess : kFalsified, io::dump(out)};
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
    std::uint64_t seed = 1;
    Eigen::Index dim = 2;
    Eigen::Index count = 3;
    double p = 2.0;
    double scale = 0.1;
    InstanceMode mode = InstanceMode::HilbertCanonical;
};

inline CommandResult cmd_gen(const GenOptions& opt, const Config& cfg) {
    try {
        if (opt.mode == InstanceMode::HilbertCanonical && opt.p != 2.0)
            return usage_error("Hilbert instances have p = 2");
        const Instance inst = random_instance(opt.seed, opt.dim, opt.count, PIndex(opt.p), opt.scale, opt.mode, cfg);
        return {kSuccess, io::dump(io::instance(inst))};
    } catch (const Error& e) {
        return usage_error(e.what());
    }
}

} // namespace pframe::cli
