#include "pframe/normed_linalg.hpp"
#include "pframe/sampling.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace pframe;

namespace {

Vec vec(std::initializer_list<double> xs) {
    Vec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs)
        v(i++) = x;
    return v;
}

Mat mat2(double a, double b, double c, double d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return m;
}

// Independent oracle: ||x||_p written out directly.
double naive_pnorm(const Vec& x, double p) {
    if (std::isinf(p))
        return x.cwiseAbs().maxCoeff();
    double s = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        s += std::pow(std::abs(x(i)), p);
    return std::pow(s, 1.0 / p);
}

// Independent oracle for 2x2 operator norms: dense scan of the unit circle
// in l^a, parametrized by angle. Returns a lower estimate of the true norm.
double circle_scan_norm(const Mat& m, double a, double b, int steps = 200000) {
    double best = 0.0;
    for (int k = 0; k < steps; ++k) {
        const double th = 2.0 * std::numbers::pi * k / steps;
        Vec x(2);
        x << std::cos(th), std::sin(th);
        x /= naive_pnorm(x, a);
        best = std::max(best, naive_pnorm(m * x, b));
    }
    return best;
}

} // namespace

TEST(PNorm, SpecExamples) {
    EXPECT_DOUBLE_EQ(pnorm(vec({3, 4}), PIndex(2)), 5.0);
    EXPECT_DOUBLE_EQ(pnorm(vec({1, 1, 1}), PIndex(1)), 3.0);
    EXPECT_NEAR(pnorm(vec({1, -2, 2}), PIndex(3)), std::cbrt(17.0), 1e-14);
    EXPECT_NEAR(std::cbrt(17.0), 2.5713, 1e-4);
}

TEST(PNorm, MatchesDirectSumForGeneralExponents) {
    Rng rng(7);
    for (double p : {1.0, 1.25, 1.5, 2.0, 2.5, 3.0, 7.0}) {
        for (int trial = 0; trial < 50; ++trial) {
            const Vec x = rng.normal_matrix(5, 1).col(0) * 3.0;
            EXPECT_NEAR(pnorm(x, PIndex(p)), naive_pnorm(x, p), 1e-12 * naive_pnorm(x, p)) << "p=" << p;
        }
    }
    const Vec x = vec({0.5, -4, 2});
    EXPECT_DOUBLE_EQ(pnorm(x, PIndex::infinity()), 4.0);
}

TEST(PNorm, ZeroAndTiny) {
    EXPECT_EQ(pnorm(Vec::Zero(3), PIndex(1.5)), 0.0);
    const Vec tiny = vec({1e-300, 1e-300});
    EXPECT_GT(pnorm(tiny, PIndex(3)), 0.0);
}

TEST(PIndex, RejectsBelowOne) {
    EXPECT_THROW(PIndex(0.5), Error);
    EXPECT_THROW(PIndex(std::nan("")), Error);
}

TEST(PIndex, Conjugates) {
    EXPECT_TRUE(PIndex(1).conjugate().is_inf());
    EXPECT_TRUE(PIndex::infinity().conjugate().is_one());
    EXPECT_DOUBLE_EQ(PIndex(2).conjugate().value(), 2.0);
    EXPECT_DOUBLE_EQ(PIndex(3).conjugate().value(), 1.5);
    EXPECT_DOUBLE_EQ(PIndex(1.5).conjugate().value(), 3.0);
}

TEST(DualNorm, SpecExamples) {
    EXPECT_DOUBLE_EQ(dual_norm(vec({1, 0}), PIndex(2)), 1.0);
    EXPECT_DOUBLE_EQ(dual_norm(vec({1, 1}), PIndex(1)), 1.0);
    EXPECT_DOUBLE_EQ(dual_norm(vec({1, 1}), PIndex::infinity()), 2.0);
}

TEST(DualVector, NormsTheVector) {
    Rng rng(11);
    for (double r : {1.0, 1.5, 2.0, 3.0, kInf}) {
        const PIndex ri = std::isinf(r) ? PIndex::infinity() : PIndex(r);
        for (int trial = 0; trial < 20; ++trial) {
            const Vec y = rng.normal_matrix(4, 1).col(0);
            const Vec z = dual_vector(y, ri);
            EXPECT_NEAR(z.dot(y), pnorm(y, ri), 1e-12 * pnorm(y, ri));
            EXPECT_NEAR(pnorm(z, ri.conjugate()), 1.0, 1e-12);
        }
    }
}

TEST(OpNorm, SpecExamples) {
    const BoundInterval id = opnorm(Mat::Identity(2, 2), PIndex(2), PIndex(2));
    EXPECT_TRUE(id.exact);
    EXPECT_NEAR(id.lo, 1.0, kExactTol);
    EXPECT_NEAR(id.hi, 1.0, kExactTol);

    const BoundInterval d = opnorm(mat2(3, 0, 0, 1), PIndex(2), PIndex(2));
    EXPECT_TRUE(d.exact);
    EXPECT_NEAR(d.lo, 3.0, kExactTol);
    EXPECT_NEAR(d.hi, 3.0, kExactTol);

    const BoundInterval c = opnorm(mat2(1, 0, 0, 2), PIndex(1), PIndex(1));
    EXPECT_TRUE(c.exact);
    EXPECT_NEAR(c.lo, 2.0, kExactTol);
    EXPECT_NEAR(c.hi, 2.0, kExactTol);
}

TEST(OpNorm, ClosedFormsMatchDefinitions) {
    // 1 -> b: max column norm; a -> inf: max row dual norm.
    const Mat m = mat2(1, -2, 3, 0.5);
    EXPECT_NEAR(opnorm(m, PIndex(1), PIndex(3)).hi, std::max(naive_pnorm(m.col(0), 3), naive_pnorm(m.col(1), 3)),
                1e-12);
    EXPECT_NEAR(opnorm(m, PIndex(1), PIndex::infinity()).hi, 3.0, 1e-12);
    EXPECT_NEAR(opnorm(m, PIndex::infinity(), PIndex::infinity()).hi, 3.5, 1e-12);
    EXPECT_NEAR(opnorm(m, PIndex(1.5), PIndex::infinity()).hi,
                std::max(naive_pnorm(m.row(0).transpose(), 3), naive_pnorm(m.row(1).transpose(), 3)), 1e-12);
}

TEST(OpNorm, ZeroMatrix) {
    const BoundInterval z = opnorm(Mat::Zero(3, 2), PIndex(1.5), PIndex(3));
    EXPECT_EQ(z.lo, 0.0);
    EXPECT_EQ(z.hi, 0.0);
}

// Property: lo <= true norm <= hi, with the true norm estimated by an
// independent circle scan (which itself can only underestimate).
TEST(OpNorm, EnclosesCircleScanOn2x2) {
    Rng rng(2024);
    const double ps[] = {1.0, 1.5, 2.0, 3.0, kInf};
    auto idx = [](double p) { return std::isinf(p) ? PIndex::infinity() : PIndex(p); };
    for (int trial = 0; trial < 12; ++trial) {
        const Mat m = rng.normal_matrix(2, 2);
        for (double a : ps)
            for (double b : ps) {
                const BoundInterval n = opnorm(m, idx(a), idx(b));
                const double scan = circle_scan_norm(m, a, b, 20000);
                EXPECT_LE(n.lo, n.hi);
                EXPECT_LE(scan, n.hi * (1 + 1e-12) + 1e-12) << a << "->" << b;
                // the sampled lower end should be nearly tight on 2x2
                EXPECT_GE(n.lo, scan * (1 - 1e-3)) << a << "->" << b;
            }
    }
}

TEST(OpNorm, LowerEndAttainedByItsWitnessDirection) {
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const Mat m = rng.normal_matrix(4, 3);
        const detail::GainSearch g = detail::sampled_max_gain(m, PIndex(1.5), PIndex(3), SearchConfig{});
        EXPECT_NEAR(naive_pnorm(m * g.argmax, 3) / naive_pnorm(g.argmax, 1.5), g.value, 1e-10 * g.value);
    }
}

TEST(OpNorm, DeterministicForFixedSeed) {
    Rng rng(99);
    const Mat m = rng.normal_matrix(5, 6);
    const BoundInterval a = opnorm(m, PIndex(1.5), PIndex(3));
    const BoundInterval b = opnorm(m, PIndex(1.5), PIndex(3));
    EXPECT_EQ(a, b);
}

TEST(Invert, SpecExamples) {
    EXPECT_TRUE(invert(Mat::Identity(2, 2)).isApprox(Mat::Identity(2, 2)));
    EXPECT_TRUE(invert(mat2(4, 0, 0, 1)).isApprox(mat2(0.25, 0, 0, 1)));
    EXPECT_LT((invert(mat2(1, 0, 0.3, 1)) - mat2(1, 0, -0.3, 1)).norm(), 1e-14);
}

TEST(Invert, SingularThrows) {
    try {
        invert(mat2(1, 2, 2, 4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Singular);
    }
    EXPECT_FALSE(is_invertible(mat2(1, 0, 0, 1e-12)));
    EXPECT_TRUE(is_invertible(mat2(1, 0, 0, 1e-9)));
}

TEST(MinGain, SpecExamples) {
    const BoundInterval i = min_gain(Mat::Identity(2, 2), PIndex(2), PIndex(2));
    EXPECT_NEAR(i.lo, 1.0, kExactTol);
    EXPECT_NEAR(i.hi, 1.0, kExactTol);
    const BoundInterval d = min_gain(mat2(4, 0, 0, 1), PIndex(2), PIndex(2));
    EXPECT_NEAR(d.lo, 1.0, kExactTol);
    EXPECT_NEAR(d.hi, 1.0, kExactTol);

    // smallest singular value of [[1,0],[0.3,1]] from the 2x2 eigenvalue formula
    const double tr = 1.0 + 1.09, det = 1.0;
    const double smin = std::sqrt(0.5 * (tr - std::sqrt(tr * tr - 4 * det)));
    const BoundInterval s = min_gain(mat2(1, 0, 0.3, 1), PIndex(2), PIndex(2));
    EXPECT_NEAR(s.lo, smin, kExactTol);
    EXPECT_NEAR(s.hi, smin, kExactTol);
    EXPECT_NEAR(smin, 0.8612, 1e-4);
}

TEST(MinGain, SingularIsZero) {
    const BoundInterval z = min_gain(mat2(1, 1, 1, 1), PIndex(2), PIndex(2));
    EXPECT_EQ(z.lo, 0.0);
    EXPECT_EQ(z.hi, 0.0);
}

TEST(IdentityNorm, EmbeddingConstants) {
    EXPECT_DOUBLE_EQ(identity_norm(4, PIndex(1), PIndex(2)), 1.0);
    EXPECT_NEAR(identity_norm(4, PIndex(2), PIndex(1)), 2.0, 1e-14);
    EXPECT_NEAR(identity_norm(4, PIndex::infinity(), PIndex(1)), 4.0, 1e-14);
}
