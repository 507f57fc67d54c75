#include <catch2/catch_amalgamated.hpp>

#include "tripts/exact.hpp"

#include "helpers.hpp"

using namespace tripts;
using tripts::testing::rat;

TEST_CASE("scalar_sign on rationals and sqrt3 combinations") {
    CHECK(scalar_sign(ExactScalar(rat(0), rat(0))) == 0);
    // -5 + 3*sqrt(3) > 0 because 25 < 27
    CHECK(scalar_sign(ExactScalar(rat(-5), rat(3))) == 1);
    // 2 - sqrt(3) > 0 because 4 > 3
    CHECK(scalar_sign(ExactScalar(rat(2), rat(-1))) == 1);
    CHECK(scalar_sign(ExactScalar(rat(5), rat(-3))) == -1);
    CHECK(scalar_sign(ExactScalar(rat(-2), rat(1))) == -1);
    CHECK(scalar_sign(ExactScalar(rat(-7), rat(4))) == -1); // 49 > 48
    CHECK(scalar_sign(ExactScalar(rat(0), rat(-2))) == -1);
    CHECK(scalar_sign(ExactScalar(rat(1, 7), rat(0))) == 1);
}

TEST_CASE("arithmetic closure and canonical equality") {
    ExactScalar s = ExactScalar::sqrt3();
    ExactScalar one(1);
    CHECK((one + s) * (one + s) == ExactScalar(rat(4), rat(2)));
    CHECK(s * s == ExactScalar(4) - one);
    CHECK((one + s) - s == one);
    CHECK(ExactScalar(rat(1, 2), rat(1, 3)) == ExactScalar(rat(2, 4), rat(3, 9)));
    CHECK(ExactScalar(rat(1), rat(0)) != ExactScalar(rat(0), rat(1)));
    ExactScalar q = ExactScalar(rat(3), rat(5)) / rat(2);
    CHECK(q == ExactScalar(rat(3, 2), rat(5, 2)));
}

TEST_CASE("ordering is exact and consistent with the double approximation") {
    std::vector<ExactScalar> vals;
    for (long a = -4; a <= 4; ++a) {
        for (long b = -4; b <= 4; ++b) {
            vals.push_back(ExactScalar(rat(a, 3), rat(b, 5)));
        }
    }
    for (const auto& u : vals) {
        for (const auto& v : vals) {
            ExactScalar d = u - v;
            int s = d.sign();
            double approx = d.to_double();
            if (std::abs(approx) > 1e-9) {
                CHECK(s == (approx > 0 ? 1 : -1));
            }
            CHECK((u < v) == (s < 0));
            CHECK((u == v) == (s == 0));
            // repeated evaluation is identical
            CHECK(d.sign() == s);
        }
    }
}
