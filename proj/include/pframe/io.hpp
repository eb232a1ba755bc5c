#pragma once

// JSON instance and report files.

#include "pframe/oracle.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace pframe {

using json = nlohmann::json;

inline constexpr const char* kToolName = "pframe";
inline constexpr const char* kToolVersion = "1.0.0";

namespace io {

// Non-finite reals are written as the strings "inf", "-inf" and "nan".
inline json number(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return v;
}

inline double number(const json& j, const std::string& key = "value") {
    if (j.is_number())
        return j.get<double>();
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s == "inf")
            return kInf;
        if (s == "-inf")
            return -kInf;
        if (s == "nan")
            return std::numeric_limits<double>::quiet_NaN();
    }
    throw Error(ErrorKind::Parse, "field '" + key + "' must be a number or \"inf\"");
}

inline json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

inline std::optional<double> optional_number(const json& j, const std::string& key) {
    if (j.is_null())
        return std::nullopt;
    return number(j, key);
}

inline const json& require(const json& obj, const std::string& key) {
    if (!obj.is_object() || !obj.contains(key))
        throw Error(ErrorKind::MissingField, "missing field '" + key + "'");
    return obj.at(key);
}

inline json matrix(const Mat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(number(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat matrix(const json& j, const std::string& key) {
    if (!j.is_array() || j.empty())
        throw Error(ErrorKind::Parse, "field '" + key + "' must be a nonempty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty())
        throw Error(ErrorKind::Parse, "field '" + key + "' must be a nonempty array of rows");
    const std::size_t cols = j[0].size();
    Mat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw Error(ErrorKind::Parse, "field '" + key + "' row " + std::to_string(i) + " has the wrong length");
        for (std::size_t k = 0; k < cols; ++k) {
            if (!j[i][k].is_number())
                throw Error(ErrorKind::Parse, "field '" + key + "' has a non-numeric entry");
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = j[i][k].get<double>();
        }
    }
    require_finite(m, key.c_str());
    return m;
}

inline json vector(const Vec& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(number(v(i)));
    return out;
}

inline Vec vector(const json& j, const std::string& key) {
    if (!j.is_array())
        throw Error(ErrorKind::Parse, "field '" + key + "' must be an array");
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = number(j[i], key);
    return v;
}

inline json p_index(PIndex p) { return number(p.value()); }

inline PIndex p_index(const json& j, const std::string& key) {
    try {
        return PIndex(number(j, key));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidArgument)
            throw Error(ErrorKind::Parse, "field '" + key + "': " + e.what());
        throw;
    }
}

inline json params(const PerturbationParams& q) {
    return {{"r", q.r}, {"s", q.s}, {"t", q.t}, {"alpha", q.alpha}, {"beta", q.beta}, {"gamma", q.gamma}};
}

inline PerturbationParams params(const json& j) {
    if (!j.is_object())
        throw Error(ErrorKind::Parse, "field 'params' must be an object");
    PerturbationParams q;
    auto get = [&](const char* key, double& slot) {
        if (j.contains(key))
            slot = number(j.at(key), std::string("params.") + key);
    };
    get("r", q.r);
    get("s", q.s);
    get("t", q.t);
    get("alpha", q.alpha);
    get("beta", q.beta);
    get("gamma", q.gamma);
    try {
        q.validate();
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, std::string("field 'params': ") + e.what());
    }
    return q;
}

// ---------------------------------------------------------------------------
// instance files

inline json instance(const Instance& inst) {
    json j;
    j["p"] = p_index(inst.fp.p());
    j["x_norm"] = p_index(inst.fp.x_norm());
    j["F"] = matrix(inst.fp.functionals());
    j["T"] = matrix(inst.fp.vectors());
    j["G"] = matrix(inst.g);
    j["Omega"] = matrix(inst.omega);
    j["params"] = params(inst.params);
    j["seed"] = inst.seed;
    return j;
}

/// Parses an instance document; absent G, Omega and params default to F, T
/// and zero.
inline Instance instance(const json& j) {
    if (!j.is_object())
        throw Error(ErrorKind::Parse, "instance must be a JSON object");
    const PIndex p = p_index(require(j, "p"), "p");
    if (p.is_inf())
        throw Error(ErrorKind::Parse, "field 'p' must be finite");
    const PIndex x = j.contains("x_norm") ? p_index(j.at("x_norm"), "x_norm") : p;
    Mat f = matrix(require(j, "F"), "F");
    Mat t = matrix(require(j, "T"), "T");
    std::optional<FramePair> fp;
    try {
        fp.emplace(f, t, p, x);
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    Mat g = j.contains("G") ? matrix(j.at("G"), "G") : f;
    Mat omega = j.contains("Omega") ? matrix(j.at("Omega"), "Omega") : t;
    if (g.rows() != f.rows() || g.cols() != f.cols())
        throw Error(ErrorKind::Parse, "field 'G' must have the shape of F");
    if (omega.rows() != t.rows() || omega.cols() != t.cols())
        throw Error(ErrorKind::Parse, "field 'Omega' must have the shape of T");
    PerturbationParams q = j.contains("params") ? params(j.at("params")) : PerturbationParams{};
    std::uint64_t seed = 0;
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_integer())
            throw Error(ErrorKind::Parse, "field 'seed' must be an integer");
        seed = j.at("seed").get<std::uint64_t>();
    }
    return {*fp, std::move(g), std::move(omega), q, seed};
}

/// Parses JSON text, mapping syntax errors to Parse errors with line and
/// column.
inline json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Canonical text form: two-space indent, trailing LF.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// reports

inline VerdictStatus verdict_status(const std::string& s) {
    if (s == "CERTIFIED")
        return VerdictStatus::Certified;
    if (s == "FALSIFIED")
        return VerdictStatus::Falsified;
    if (s == "UNDECIDED")
        return VerdictStatus::Undecided;
    throw Error(ErrorKind::Parse, "unknown verdict status '" + s + "'");
}

inline TheoremTag theorem_tag(const std::string& s) {
    for (TheoremTag t : {TheoremTag::PW1, TheoremTag::PW2, TheoremTag::PW3, TheoremTag::MAIN, TheoremTag::COROLLARY,
                         TheoremTag::SUMMABLE})
        if (s == to_string(t))
            return t;
    throw Error(ErrorKind::Parse, "unknown theorem '" + s + "'");
}

inline json verdict(const NamedVerdict& nv) {
    const ConditionVerdict& v = nv.verdict;
    json j = {{"name", nv.name},
              {"status", to_string(v.status)},
              {"margin", number(v.margin)},
              {"conflict", v.conflict},
              {"witness", v.witness ? vector(*v.witness) : json(nullptr)},
              {"prefix", v.prefix ? json(*v.prefix) : json(nullptr)}};
    return j;
}

inline NamedVerdict verdict(const json& j) {
    NamedVerdict nv;
    nv.name = require(j, "name").get<std::string>();
    nv.verdict.status = verdict_status(require(j, "status").get<std::string>());
    nv.verdict.margin = number(require(j, "margin"), "margin");
    nv.verdict.conflict = require(j, "conflict").get<bool>();
    if (!require(j, "witness").is_null())
        nv.verdict.witness = vector(j.at("witness"), "witness");
    if (!require(j, "prefix").is_null())
        nv.verdict.prefix = j.at("prefix").get<Eigen::Index>();
    return nv;
}

inline json predicted(const PredictedBounds& pb) {
    return {{"theorem", to_string(pb.theorem)}, {"lower", optional_number(pb.lower)}, {"upper", number(pb.upper)}};
}

inline PredictedBounds predicted(const json& j) {
    PredictedBounds pb;
    pb.theorem = theorem_tag(require(j, "theorem").get<std::string>());
    pb.lower = optional_number(require(j, "lower"), "lower");
    pb.upper = number(require(j, "upper"), "upper");
    return pb;
}

inline json actual(const ActualBounds& a) {
    return {{"lower", number(a.lower)},
            {"upper", number(a.upper)},
            {"exact", a.exact},
            {"sense", a.squared ? "squared" : "unsquared"}};
}

inline ActualBounds actual(const json& j) {
    ActualBounds a;
    a.lower = number(require(j, "lower"), "lower");
    a.upper = number(require(j, "upper"), "upper");
    a.exact = require(j, "exact").get<bool>();
    a.squared = require(j, "sense").get<std::string>() == "squared";
    return a;
}

inline json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

inline std::optional<bool> optional_bool(const json& j) {
    if (j.is_null())
        return std::nullopt;
    return j.get<bool>();
}

inline json report(const VerificationReport& r, bool with_timings = false) {
    json j;
    j["theorem"] = to_string(r.theorem);
    j["seed"] = r.seed;
    j["p"] = number(r.p);
    j["x_norm"] = number(r.x_norm);
    j["verdicts"] = json::array();
    for (const auto& v : r.verdicts)
        j["verdicts"].push_back(verdict(v));
    j["hypotheses_hold"] = r.hypotheses_hold;
    j["predicted"] = r.predicted ? predicted(*r.predicted) : json(nullptr);
    j["actual"] = r.actual ? actual(*r.actual) : json(nullptr);
    j["perturbed_is_asf"] = optional_bool(r.perturbed_is_asf);
    j["bracket_ok"] = optional_bool(r.bracket_ok);
    j["quantities"] = json::object();
    for (const auto& [k, v] : r.quantities)
        j["quantities"][k] = number(v);
    j["warnings"] = r.warnings;
    j["error"] = r.error ? json(*r.error) : json(nullptr);
    if (with_timings) {
        j["timings_ms"] = json::object();
        for (const auto& [k, v] : r.timings_ms)
            j["timings_ms"][k] = number(v);
    }
    return j;
}

inline VerificationReport report(const json& j) {
    VerificationReport r;
    r.theorem = theorem_tag(require(j, "theorem").get<std::string>());
    r.seed = require(j, "seed").get<std::uint64_t>();
    r.p = number(require(j, "p"), "p");
    r.x_norm = number(require(j, "x_norm"), "x_norm");
    for (const auto& v : require(j, "verdicts"))
        r.verdicts.push_back(verdict(v));
    r.hypotheses_hold = require(j, "hypotheses_hold").get<bool>();
    if (!require(j, "predicted").is_null())
        r.predicted = predicted(j.at("predicted"));
    if (!require(j, "actual").is_null())
        r.actual = actual(j.at("actual"));
    r.perturbed_is_asf = optional_bool(require(j, "perturbed_is_asf"));
    r.bracket_ok = optional_bool(require(j, "bracket_ok"));
    for (const auto& [k, v] : require(j, "quantities").items())
        r.quantities[k] = number(v, k);
    r.warnings = require(j, "warnings").get<std::vector<std::string>>();
    if (!require(j, "error").is_null())
        r.error = j.at("error").get<std::string>();
    if (j.contains("timings_ms"))
        for (const auto& [k, v] : j.at("timings_ms").items())
            r.timings_ms[k] = number(v, k);
    return r;
}

/// Tool version, seed, search budgets and tolerances of a run.
inline json provenance(const Config& cfg) {
    return {{"tool", kToolName},
            {"version", kToolVersion},
            {"seed", cfg.search.seed},
            {"search", {{"samples", cfg.search.samples},
                        {"ascent_steps", cfg.search.ascent_steps},
                        {"candidates", cfg.search.candidates}}},
            {"oracle", {{"samples", cfg.oracle_samples},
                        {"refine_steps", cfg.refine_steps},
                        {"refine_rel_tol", cfg.refine_rel_tol}}},
            {"tolerances", {{"exact", cfg.exact_tol}, {"bracket", cfg.tol}, {"singular_rel", cfg.singular_rel}}},
            {"exponent_mode", to_string(cfg.exponent_mode)}};
}

inline Config provenance(const json& j) {
    Config cfg;
    cfg.search.seed = require(j, "seed").get<std::uint64_t>();
    const json& s = require(j, "search");
    cfg.search.samples = require(s, "samples").get<std::size_t>();
    cfg.search.ascent_steps = require(s, "ascent_steps").get<int>();
    cfg.search.candidates = require(s, "candidates").get<int>();
    const json& o = require(j, "oracle");
    cfg.oracle_samples = require(o, "samples").get<std::size_t>();
    cfg.refine_steps = require(o, "refine_steps").get<int>();
    cfg.refine_rel_tol = require(o, "refine_rel_tol").get<double>();
    const json& t = require(j, "tolerances");
    cfg.exact_tol = require(t, "exact").get<double>();
    cfg.tol = require(t, "bracket").get<double>();
    cfg.singular_rel = require(t, "singular_rel").get<double>();
    cfg.exponent_mode = require(j, "exponent_mode").get<std::string>() == "conjugate" ? ExponentMode::ConjugateQ
                                                                                      : ExponentMode::AsStatedP;
    return cfg;
}

inline json interval(const BoundInterval& b) {
    return {{"lo", number(b.lo)}, {"hi", number(b.hi)}, {"exact", b.exact}};
}

} // namespace io
} // namespace pframe
