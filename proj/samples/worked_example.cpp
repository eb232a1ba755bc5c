// Worked 2x2 example: T = I, Omega columns (1, 0.3), (0, 1), canonical duals.

#include "pframe/oracle.hpp"

#include <cstdio>

int main() {
    using namespace pframe;
    const Mat t = Mat::Identity(2, 2);
    Mat omega(2, 2);
    omega << 1.0, 0.0, 0.3, 1.0;

    const Pw1Result pw1 = pw1_check(t, omega);
    std::printf("c = %.6g  holds = %d  predicted = (%.6g, %.6g)\n", pw1.c, pw1.holds, *pw1.predicted.lower,
                pw1.predicted.upper);

    const HilbertFrameBounds hb = hilbert_frame_bounds(omega);
    std::printf("perturbed frame bounds = (%.6g, %.6g)\n", hb.lower, hb.upper);

    const FramePair fp = canonical_hilbert_pair(t);
    const CorollaryResult cor = corollary_check(fp, fp.functionals(), omega, ExponentMode::AsStatedP);
    std::printf("lambda = %.6g  corollary predicted = (%.6g, %.6g)\n", cor.lambda, *cor.predicted->lower,
                cor.predicted->upper);

    const ActualBounds actual = actual_bounds_oracle(FramePair(fp.functionals(), omega, PIndex(2.0)));
    std::printf("perturbed ASF bounds = (%.6g, %.6g)\n", actual.lower, actual.upper);
    return 0;
}
