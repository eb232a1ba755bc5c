#include "pframe/frames.hpp"
#include "pframe/sampling.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace pframe;

namespace {

Mat mercedes() {
    Mat t(2, 3);
    t << 1.0, -0.5, -0.5, 0.0, std::sqrt(3.0) / 2.0, -std::sqrt(3.0) / 2.0;
    return t;
}

Mat diag21() {
    Mat t(2, 2);
    t << 2, 0, 0, 1;
    return t;
}

Mat omega_example() {
    Mat o(2, 2);
    o << 1.0, 0.0, 0.3, 1.0;
    return o;
}

Vec vec2(double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
}

// Eigenvalues of a symmetric 2x2 matrix, written out.
std::pair<double, double> sym2_eigs(double a, double b, double d) {
    const double m = 0.5 * (a + d);
    const double r = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
    return {m - r, m + r};
}

} // namespace

TEST(FramePair, ValidatesShapes) {
    EXPECT_THROW(FramePair(Mat::Identity(3, 2), Mat::Identity(2, 2), PIndex(2)), Error);
    EXPECT_THROW(FramePair(Mat::Identity(2, 3), Mat::Identity(2, 2), PIndex(2)), Error);
    Mat bad = Mat::Identity(2, 2);
    bad(0, 1) = std::nan("");
    EXPECT_THROW(FramePair(bad, Mat::Identity(2, 2), PIndex(2)), Error);
    EXPECT_THROW(FramePair(Mat::Identity(2, 2), Mat::Identity(2, 2), PIndex::infinity()), Error);
}

TEST(FramePair, XNormDefaultsToP) {
    const FramePair fp(Mat::Identity(2, 2), Mat::Identity(2, 2), PIndex(1.5));
    EXPECT_EQ(fp.x_norm(), PIndex(1.5));
    const FramePair fq(Mat::Identity(2, 2), Mat::Identity(2, 2), PIndex(1.5), PIndex(3));
    EXPECT_EQ(fq.x_norm(), PIndex(3));
}

TEST(Analysis, SpecExamples) {
    const FramePair id(Mat::Identity(2, 2), Mat::Identity(2, 2), PIndex(2));
    EXPECT_EQ(analysis(id, vec2(1, 2)), vec2(1, 2));

    Mat f(3, 2);
    f << 1, 0, 0, 1, 1, 1;
    const FramePair fp(f, Mat::Ones(2, 3), PIndex(2));
    Vec want(3);
    want << 1, 2, 3;
    EXPECT_EQ(analysis(fp, vec2(1, 2)), want);

    const FramePair z(Mat::Zero(3, 2), Mat::Ones(2, 3), PIndex(2));
    EXPECT_EQ(analysis(z, vec2(-4, 7)), Vec::Zero(3));
}

TEST(Synthesis, SpecExamples) {
    const FramePair id(Mat::Identity(2, 2), Mat::Identity(2, 2), PIndex(2));
    EXPECT_EQ(synthesis(id, vec2(1, 2)), vec2(1, 2));

    const FramePair m(mercedes().transpose(), mercedes(), PIndex(2));
    EXPECT_LT(synthesis(m, Vec::Ones(3)).norm(), 1e-15);

    const FramePair d(diag21().transpose(), diag21(), PIndex(2));
    EXPECT_EQ(synthesis(d, vec2(1, 1)), vec2(2, 1));
}

TEST(FrameOperator, SpecExamples) {
    EXPECT_EQ(frame_operator(FramePair(Mat::Identity(2, 2), Mat::Identity(2, 2), PIndex(2))), Mat::Identity(2, 2));
    const Mat s = frame_operator(canonical_hilbert_pair(mercedes()));
    EXPECT_LT((s - 1.5 * Mat::Identity(2, 2)).norm(), 1e-15);
    Mat want(2, 2);
    want << 4, 0, 0, 1;
    EXPECT_EQ(frame_operator(canonical_hilbert_pair(diag21())), want);
}

TEST(FrameOperator, EqualsSumOfRankOnes) {
    Rng rng(3);
    const Mat f = rng.normal_matrix(5, 3);
    const Mat t = rng.normal_matrix(3, 5);
    Mat s = Mat::Zero(3, 3);
    for (Eigen::Index n = 0; n < 5; ++n)
        s += t.col(n) * f.row(n);
    EXPECT_LT((frame_operator(FramePair(f, t, PIndex(1.5))) - s).norm(), 1e-12);
}

TEST(IsASF, SpecExamples) {
    EXPECT_TRUE(is_asf(FramePair(Mat::Identity(2, 2), Mat::Identity(2, 2), PIndex(2))));
    Mat dup(2, 2);
    dup << 1, 1, 0, 0;
    EXPECT_FALSE(is_asf(canonical_hilbert_pair(dup)));
    EXPECT_TRUE(is_asf(canonical_hilbert_pair(mercedes())));
}

TEST(IsASF, UndercompleteNeverASF) {
    Rng rng(8);
    const Mat t = rng.normal_matrix(3, 2);
    EXPECT_FALSE(is_asf(canonical_hilbert_pair(t)));
    try {
        frame_operator_inverse(canonical_hilbert_pair(t));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAnASF);
    }
}

TEST(ASFBounds, SpecExamples) {
    const ASFBounds id = asf_bounds(FramePair(Mat::Identity(2, 2), Mat::Identity(2, 2), PIndex(2)));
    EXPECT_NEAR(id.lower.lo, 1.0, kExactTol);
    EXPECT_NEAR(id.upper.hi, 1.0, kExactTol);

    const ASFBounds d = asf_bounds(canonical_hilbert_pair(diag21()));
    EXPECT_NEAR(d.lower.lo, 1.0, kExactTol);
    EXPECT_NEAR(d.lower.hi, 1.0, kExactTol);
    EXPECT_NEAR(d.upper.lo, 4.0, kExactTol);
    EXPECT_NEAR(d.upper.hi, 4.0, kExactTol);

    const ASFBounds o = asf_bounds(FramePair(Mat::Identity(2, 2), omega_example(), PIndex(2)));
    auto [l, u] = sym2_eigs(1.0, 0.3, 1.09);
    EXPECT_NEAR(o.lower.lo, std::sqrt(l), kExactTol);
    EXPECT_NEAR(o.upper.hi, std::sqrt(u), kExactTol);
    EXPECT_NEAR(std::sqrt(l), 0.8612, 1e-4);
    EXPECT_NEAR(std::sqrt(u), 1.1612, 1e-4);
}

TEST(ASFBounds, IntervalsOrderedForGeneralP) {
    Rng rng(21);
    for (double p : {1.0, 1.5, 3.0}) {
        const Mat t = rng.normal_matrix(3, 6);
        const Mat f = rng.normal_matrix(6, 3);
        const FramePair fp(f, t, PIndex(p));
        if (!is_asf(fp))
            continue;
        const ASFBounds b = asf_bounds(fp);
        EXPECT_LE(b.lower.lo, b.lower.hi + 1e-12);
        EXPECT_LE(b.upper.lo, b.upper.hi + 1e-12);
        EXPECT_LE(b.lower.lo, b.upper.hi);
        // any direction's gain lies between the bounds
        for (int k = 0; k < 50; ++k) {
            const Vec x = rng.normal_matrix(3, 1).col(0);
            const double gain = pnorm(frame_operator(fp) * x, PIndex(p)) / pnorm(x, PIndex(p));
            EXPECT_GE(gain, b.lower.lo - 1e-12);
            EXPECT_LE(gain, b.upper.hi + 1e-12);
        }
    }
}

TEST(ThetaNorms, SpecExamples) {
    const ThetaNorms id = theta_norms(FramePair(Mat::Identity(2, 2), Mat::Identity(2, 2), PIndex(2)));
    EXPECT_NEAR(id.analysis.hi, 1.0, kExactTol);
    EXPECT_NEAR(id.synthesis.hi, 1.0, kExactTol);
    EXPECT_NEAR(id.analysis_inverse.hi, 1.0, kExactTol);

    const ThetaNorms m = theta_norms(canonical_hilbert_pair(mercedes()));
    EXPECT_NEAR(m.analysis.hi, std::sqrt(1.5), kExactTol);
    EXPECT_NEAR(m.synthesis.hi, std::sqrt(1.5), kExactTol);
    EXPECT_NEAR(m.analysis_inverse.hi, std::sqrt(2.0 / 3.0), kExactTol);

    const ThetaNorms d = theta_norms(canonical_hilbert_pair(diag21()));
    EXPECT_NEAR(d.analysis.hi, 2.0, kExactTol);
    EXPECT_NEAR(d.synthesis.hi, 2.0, kExactTol);
    EXPECT_NEAR(d.analysis_inverse.hi, 1.0, kExactTol);
}

TEST(CanonicalPair, SpecExamples) {
    EXPECT_EQ(canonical_hilbert_pair(Mat::Identity(2, 2)).functionals(), Mat::Identity(2, 2));
    const FramePair m = canonical_hilbert_pair(mercedes());
    EXPECT_EQ(m.functionals(), Mat(mercedes().transpose()));
    EXPECT_EQ(m.p(), PIndex(2));
    const HilbertFrameBounds hb = hilbert_frame_bounds(diag21());
    EXPECT_NEAR(hb.lower, 1.0, kExactTol);
    EXPECT_NEAR(hb.upper, 4.0, kExactTol);
}

TEST(HilbertFrameBounds, SpecExamples) {
    const HilbertFrameBounds i = hilbert_frame_bounds(Mat::Identity(2, 2));
    EXPECT_NEAR(i.lower, 1.0, kExactTol);
    EXPECT_NEAR(i.upper, 1.0, kExactTol);
    const HilbertFrameBounds m = hilbert_frame_bounds(mercedes());
    EXPECT_NEAR(m.lower, 1.5, kExactTol);
    EXPECT_NEAR(m.upper, 1.5, kExactTol);
    const HilbertFrameBounds o = hilbert_frame_bounds(omega_example());
    auto [l, u] = sym2_eigs(1.0, 0.3, 1.09);
    EXPECT_NEAR(o.lower, l, kExactTol);
    EXPECT_NEAR(o.upper, u, kExactTol);
    EXPECT_NEAR(l, 0.7416, 1e-4);
    EXPECT_NEAR(u, 1.3484, 1e-4);
}

TEST(HilbertFrameBounds, NotAFrame) {
    Mat t(2, 3);
    t << 1, 2, 3, 0, 0, 0;
    try {
        hilbert_frame_bounds(t);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAFrame);
    }
}

// Property: for p = 2 canonical pairs, ASF bounds are the Hilbert frame
// bounds (S = T T^T is symmetric positive definite).
TEST(HilbertFrameBounds, AgreeWithASFBoundsOfCanonicalPair) {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const Mat t = rng.normal_matrix(3, 5);
        const HilbertFrameBounds hb = hilbert_frame_bounds(t);
        const ASFBounds ab = asf_bounds(canonical_hilbert_pair(t));
        EXPECT_NEAR(ab.lower.lo, hb.lower, 1e-9 * hb.upper);
        EXPECT_NEAR(ab.upper.hi, hb.upper, 1e-9 * hb.upper);
        // frame inequality a||h||^2 <= sum <h, tau_n>^2 <= b||h||^2
        const Vec h = rng.normal_matrix(3, 1).col(0);
        const double energy = (t.transpose() * h).squaredNorm();
        EXPECT_GE(energy, hb.lower * h.squaredNorm() * (1 - 1e-12));
        EXPECT_LE(energy, hb.upper * h.squaredNorm() * (1 + 1e-12));
    }
}
