#include "doctest.h"

#include "xxchain/chain.hpp"
#include "xxchain/errors.hpp"

#include <cmath>

using namespace xxchain;

TEST_CASE("krawtchouk couplings at N=3, p=1/2") {
    const Chain c = krawtchouk_chain(3, 0.5);
    const double s3 = std::sqrt(3.0) / 2.0;
    REQUIRE(c.N == 3);
    CHECK(c.J[0] == doctest::Approx(s3).epsilon(1e-14));
    CHECK(c.J[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.J[2] == doctest::Approx(s3).epsilon(1e-14));
    for (double b : c.B) CHECK(b == doctest::Approx(1.5).epsilon(1e-14));
    REQUIRE(c.dual.has_value());
    for (int l = 0; l <= 3; ++l) CHECK((*c.dual)[l] == doctest::Approx(l));
}

TEST_CASE("homogeneous chain is constant arrays with a dual grid") {
    const Chain c = homogeneous_chain(2, 1.0, 0.0);
    CHECK(c.J == std::vector<double>{1.0, 1.0});
    CHECK(c.B == std::vector<double>{0.0, 0.0, 0.0});
    CHECK(c.dual.has_value());
}

TEST_CASE("custom chain carries no dual grid unless given") {
    const Chain c = custom_chain({1.0}, {0.0, 0.0});
    CHECK(c.N == 1);
    CHECK_FALSE(c.dual.has_value());
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(custom_chain({0.0}, {0.0, 0.0}), NonPositiveCoupling);
    CHECK_THROWS_AS(custom_chain({-1.0, 1.0}, {0.0, 0.0, 0.0}), NonPositiveCoupling);
    CHECK_THROWS_AS(custom_chain({1.0}, {0.0}), LengthMismatch);
    CHECK_THROWS_AS(custom_chain({1.0}, {0.0, 0.0}, std::vector<double>{1.0, 0.0}),
                    NonMonotoneDual);
    CHECK_THROWS_AS(custom_chain({1.0}, {0.0, 0.0}, std::vector<double>{0.0}), LengthMismatch);
    CHECK_THROWS_AS(krawtchouk_chain(3, 0.0), NonPositiveCoupling);
    CHECK_THROWS_AS(krawtchouk_chain(3, 1.0), NonPositiveCoupling);
}

TEST_CASE("build_chain dispatches on the spec variant") {
    const Chain k = build_chain(KrawtchoukSpec{4, 0.3});
    CHECK(k.N == 4);
    const Chain h = build_chain(HomogeneousSpec{3, 2.0, -1.0});
    CHECK(h.J[1] == 2.0);
    CHECK(h.B[2] == -1.0);
    const Chain c = build_chain(CustomSpec{{1.0, 2.0}, {0.0, 1.0, 0.0}, std::nullopt});
    CHECK(c.N == 2);
}

TEST_CASE("field shift and coupling scale act entrywise") {
    Chain c = krawtchouk_chain(4, 0.5);
    const Chain shifted = shifted_fields(c, 2.5);
    for (int l = 0; l <= 4; ++l)
        CHECK(shifted.B[l] == doctest::Approx(c.B[l] + 2.5));
    CHECK(shifted.J == c.J);

    const Chain scaled = scaled_couplings(c, 0.25);
    for (int l = 0; l < 4; ++l) CHECK(scaled.J[l] == doctest::Approx(0.25 * c.J[l]));
    for (int l = 0; l <= 4; ++l) CHECK(scaled.B[l] == doctest::Approx(0.25 * c.B[l]));
}
