#include <doctest.h>

#include <random>

#include "toricsyz/betti.hpp"
#include "toricsyz/errors.hpp"

using namespace toricsyz;

namespace {

const FormulaVariant kValidated = validated_variant();

double ratio(const Int& num, const Int& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q.get_d();
}

}  // namespace

TEST_CASE("binomial: values and conventions") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(100, 50) == Int("100891344545564193334812497256"));
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial: Pascal's rule on a random grid") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long> pick_n(1, 200);
    for (int trial = 0; trial < 200; ++trial) {
        const long n = pick_n(rng);
        std::uniform_int_distribution<long> pick_k(0, n);
        const long k = pick_k(rng);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

TEST_CASE("hilbert_numerator: scroll coefficients") {
    auto num = hilbert_numerator({0, 1});
    REQUIRE(num.r == 5);
    REQUIRE(num.a.size() == 9);
    const long expect[9] = {1, 0, -6, 8, -3, 0, 0, 0, 0};
    for (size_t j = 0; j < 9; ++j) {
        CAPTURE(j);
        CHECK(num.a[j] == expect[j]);
    }
}

TEST_CASE("hilbert_numerator: leading coefficients for any spec") {
    for (auto spec : {SurfaceSpec{0, 2}, SurfaceSpec{1, 1}, SurfaceSpec{3, 4}, SurfaceSpec{6, 2}}) {
        CAPTURE(spec.delta);
        CAPTURE(spec.d);
        auto num = hilbert_numerator(spec);
        CHECK(num.a[0] == 1);
        CHECK(num.a[1] == 0);
    }
}

TEST_CASE("hilbert_numerator: agrees with the h-star factorization") {
    // N(t) = (1-t)^{r-2} (1 + (n-3) t + interior t^2): an independent route
    // through the degree-2 numerator of the Ehrhart series.
    for (auto spec : {SurfaceSpec{0, 3}, SurfaceSpec{1, 2}, SurfaceSpec{2, 2}, SurfaceSpec{5, 1}}) {
        CAPTURE(spec.delta);
        CAPTURE(spec.d);
        auto pc = constants(spec);
        auto num = hilbert_numerator(spec);
        for (long j = 0; j < static_cast<long>(num.a.size()); ++j) {
            Int expect = 0;
            const long hstar[3] = {1, pc.n - 3, pc.interior};
            for (long i = 0; i <= 2; ++i) {
                if (j - i < 0) continue;
                Int term = hstar[i] * binomial(pc.r - 2, j - i);
                if ((j - i) % 2 != 0) term = -term;
                expect += term;
            }
            CAPTURE(j);
            CHECK(num.a[static_cast<size_t>(j)] == expect);
        }
    }
}

TEST_CASE("NumeratorStream matches the materialized coefficients") {
    SurfaceSpec spec{1, 3};
    auto num = hilbert_numerator(spec);
    NumeratorStream stream(spec);
    for (long j = static_cast<long>(num.a.size()) - 1; j >= 0; --j)
        CHECK(stream.coefficient(j) == num.a[static_cast<size_t>(j)]);
    CHECK(stream.coefficient(num.r + 10) == 0);
    CHECK(numerator_coefficient(spec, 2) == num.a[2]);
}

TEST_CASE("row2: closed form") {
    CHECK(row2({0, 1}, 3, kValidated) == 0);
    CHECK(row2({0, 2}, 6, kValidated) == 1);
    for (auto spec : {SurfaceSpec{0, 1}, SurfaceSpec{2, 3}})
        for (int kappa : {2, 3})
            for (auto interp : {N1Interpretation::AlgebraicClosedForm, N1Interpretation::HeightOne,
                                N1Interpretation::GeometricInterior})
                CHECK(row2(spec, 0, FormulaVariant{1, kappa, interp}) == 0);
    CHECK_THROWS_AS(row2({0, 1}, 6, kValidated), std::out_of_range);
    CHECK_THROWS_AS(row2({0, 1}, -1, kValidated), std::out_of_range);
}

TEST_CASE("printed_row1: verbatim evaluation, including its failures") {
    const FormulaVariant algebraic_s1{1, 3, N1Interpretation::AlgebraicClosedForm};
    CHECK(printed_row1({0, 1}, 1, algebraic_s1) == -8);
    CHECK(printed_row1({0, 2}, 1, algebraic_s1) == -32);
    // at p = 0 the middle term vanishes and the value is <= 0
    for (auto spec : {SurfaceSpec{0, 1}, SurfaceSpec{1, 2}}) {
        for (int s : {1, 2}) {
            FormulaVariant v{s, 3, N1Interpretation::AlgebraicClosedForm};
            CHECK(printed_row1(spec, 0, v) <= 0);
        }
    }
    CHECK_THROWS_AS(printed_row1({0, 1}, 9, algebraic_s1), std::out_of_range);
}

TEST_CASE("row1_from_numerator: reconstruction values") {
    CHECK(row1_from_numerator({0, 1}, 1, kValidated) == 6);
    CHECK(row1_from_numerator({0, 1}, 3, kValidated) == 3);
    CHECK(row1_from_numerator({0, 2}, 1, kValidated) == 20);
    CHECK_THROWS_AS(row1_from_numerator({0, 1}, 0, kValidated), std::out_of_range);
    CHECK_THROWS_AS(row1_from_numerator({0, 1}, 6, kValidated), std::out_of_range);
}

TEST_CASE("row1_from_numerator: wrong variant raises the negative diagnostic") {
    const FormulaVariant wrong{2, 2, N1Interpretation::GeometricInterior};
    CHECK_THROWS_AS((void)row1_from_numerator({0, 2}, 7, wrong), negative_betti_error);
    try {
        (void)row1_from_numerator({0, 2}, 7, wrong);
    } catch (const negative_betti_error& e) {
        CHECK(e.p() == 7);
        CHECK(e.value() == "-1");
    }
}

TEST_CASE("betti_table: assembled tables") {
    SUBCASE("scroll (0,1): Eagon-Northcott shape") {
        auto table = betti_table({0, 1}, kValidated);
        CHECK(table.entry(0, 0) == 1);
        CHECK(table.entry(1, 1) == 6);
        CHECK(table.entry(2, 1) == 8);
        CHECK(table.entry(3, 1) == 3);
        for (long p = 4; p <= 5; ++p) CHECK(table.entry(p, 1) == 0);
        for (long p = 0; p <= 5; ++p) {
            CHECK(table.entry(p, 2) == 0);
            if (p >= 1) CHECK(table.entry(p, 0) == 0);
        }
        CHECK(table.entry(17, 1) == 0);  // p > r convention
    }
    SUBCASE("(0,2): lone corner syzygy in row 2") {
        auto table = betti_table({0, 2}, kValidated);
        CHECK(table.entry(6, 2) == 1);
        CHECK(table.entry(1, 1) == 20);
    }
    SUBCASE("(1,1): odd-delta table") {
        auto table = betti_table({1, 1}, kValidated);
        CHECK(table.entry(1, 1) == 9);
        CHECK(table.entry(2, 1) == 16);
        CHECK(table.entry(3, 1) == 9);
        CHECK(table.entry(4, 2) == 1);
        CHECK(table.entry(3, 2) == 0);
    }
}

TEST_CASE("betti_table: numerator identity closes globally") {
    for (auto spec : {SurfaceSpec{0, 1}, SurfaceSpec{0, 2}, SurfaceSpec{1, 2}, SurfaceSpec{3, 1},
                      SurfaceSpec{1, 3}, SurfaceSpec{5, 1}, SurfaceSpec{0, 4}}) {
        CAPTURE(spec.delta);
        CAPTURE(spec.d);
        auto table = betti_table(spec, kValidated);
        auto num = hilbert_numerator(spec);
        for (long j = 0; j < static_cast<long>(num.a.size()); ++j) {
            Int sum = 0;
            for (int q = 0; q <= 2; ++q) {
                const long p = j - q;
                if (p < 0 || p > table.r()) continue;
                if (p % 2 == 0)
                    sum += table.entry(p, q);
                else
                    sum -= table.entry(p, q);
            }
            CAPTURE(j);
            CHECK(sum == num.a[static_cast<size_t>(j)]);
        }
    }
}

TEST_CASE("printed row-1 formulas agree with the reconstruction asymptotically") {
    // relative gap at the central column within 10/sqrt(r) for both shifts
    for (long d : {50L, 100L, 200L}) {
        const SurfaceSpec spec{0, d};
        const long r = constants(spec).r;
        const long p = (r + 1) / 2;
        const Int truth = row1_from_numerator(spec, p, kValidated);
        REQUIRE(truth > 0);
        for (int s : {1, 2}) {
            const FormulaVariant v{s, 3, N1Interpretation::AlgebraicClosedForm};
            Int gap = printed_row1(spec, p, v) - truth;
            if (gap < 0) gap = -gap;
            CAPTURE(d);
            CAPTURE(s);
            CHECK(ratio(gap, truth) <= 10.0 / std::sqrt(static_cast<double>(r)));
        }
    }
}

TEST_CASE("FormulaVariant validation") {
    CHECK_THROWS_AS(validate(FormulaVariant{0, 3, N1Interpretation::HeightOne}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate(FormulaVariant{1, 5, N1Interpretation::HeightOne}),
                    std::invalid_argument);
    CHECK_NOTHROW(validate(kValidated));
    CHECK(to_string(kValidated) == "geometric-interior,kappa=3,s=2");
}

TEST_CASE("BettiTable rejects negatives and bad indices") {
    BettiTable table(3, Provenance::NumeratorReconstruction);
    CHECK_THROWS_AS(table.set(1, 1, Int(-2)), std::invalid_argument);
    CHECK_THROWS_AS(table.set(4, 1, Int(0)), std::out_of_range);
    CHECK_THROWS_AS((void)table.entry(0, 3), std::out_of_range);
}
