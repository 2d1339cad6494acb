#include "toricsyz/betti.hpp"

#include <stdexcept>
#include <string>

namespace toricsyz {

namespace {

const Int& zero_int() {
    static const Int zero(0);
    return zero;
}

void check_q(int q) {
    if (q < 0 || q > 2) throw std::out_of_range("BettiTable: q must be in 0..2");
}

}  // namespace

void validate(const FormulaVariant& variant) {
    if (variant.q1_coeff_shift != 1 && variant.q1_coeff_shift != 2)
        throw std::invalid_argument("FormulaVariant: q1_coeff_shift must be 1 or 2");
    if (variant.q2_max_shift != 2 && variant.q2_max_shift != 3)
        throw std::invalid_argument("FormulaVariant: q2_max_shift must be 2 or 3");
    switch (variant.n1_interpretation) {
        case N1Interpretation::AlgebraicClosedForm:
        case N1Interpretation::GeometricInterior:
        case N1Interpretation::HeightOne:
            return;
    }
    throw std::invalid_argument("FormulaVariant: bad n1 interpretation");
}

FormulaVariant validated_variant() {
    return FormulaVariant{2, 3, N1Interpretation::GeometricInterior};
}

const char* to_string(N1Interpretation interp) {
    switch (interp) {
        case N1Interpretation::AlgebraicClosedForm: return "algebraic-closed-form";
        case N1Interpretation::GeometricInterior: return "geometric-interior";
        case N1Interpretation::HeightOne: return "height-one";
    }
    return "?";
}

std::string to_string(const FormulaVariant& variant) {
    return std::string(to_string(variant.n1_interpretation)) +
           ",kappa=" + std::to_string(variant.q2_max_shift) +
           ",s=" + std::to_string(variant.q1_coeff_shift);
}

long n1_value(const PolytopeConstants& pc, N1Interpretation interp) {
    switch (interp) {
        case N1Interpretation::AlgebraicClosedForm: return static_cast<long>(pc.n1_algebraic.as_integer());
        case N1Interpretation::GeometricInterior: return pc.interior;
        case N1Interpretation::HeightOne: return pc.height_one;
    }
    throw std::invalid_argument("n1_value: bad interpretation");
}

// ---- BettiTable -------------------------------------------------------------

BettiTable::BettiTable(long r, Provenance prov) : r_(r), prov_(prov) {
    if (r < 0) throw std::invalid_argument("BettiTable: r must be >= 0");
    rows_.resize(static_cast<size_t>(r) + 1);
}

const Int& BettiTable::entry(long p, int q) const {
    check_q(q);
    if (p < 0) throw std::out_of_range("BettiTable: p must be >= 0");
    if (p > r_) return zero_int();
    return rows_[static_cast<size_t>(p)][static_cast<size_t>(q)];
}

void BettiTable::set(long p, int q, Int value) {
    check_q(q);
    if (p < 0 || p > r_) throw std::out_of_range("BettiTable: p out of range");
    if (value < 0)
        throw std::invalid_argument("BettiTable: entries must be nonnegative (k_{" +
                                    std::to_string(p) + "," + std::to_string(q) +
                                    "} = " + value.get_str() + ")");
    rows_[static_cast<size_t>(p)][static_cast<size_t>(q)] = std::move(value);
}

bool operator==(const BettiTable& a, const BettiTable& b) {
    if (a.r_ != b.r_) return false;
    for (long p = 0; p <= a.r_; ++p)
        for (int q = 0; q <= 2; ++q)
            if (a.entry(p, q) != b.entry(p, q)) return false;
    return true;
}

// ---- numerator --------------------------------------------------------------

Int binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
    if (k < 0 || k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

NumeratorCoefficients hilbert_numerator(const SurfaceSpec& spec) {
    const auto pc = constants(spec);
    const long r = pc.r;
    NumeratorCoefficients out;
    out.r = r;
    out.a.assign(static_cast<size_t>(r) + 4, Int(0));

    // running C(r+1, i)
    std::vector<Int> binom(static_cast<size_t>(r) + 2);
    binom[0] = 1;
    for (long i = 1; i <= r + 1; ++i) {
        binom[i] = binom[i - 1];
        binom[i] *= (r + 2 - i);
        mpz_divexact_ui(binom[i].get_mpz_t(), binom[i].get_mpz_t(), static_cast<unsigned long>(i));
    }

    for (long j = 0; j <= r + 3; ++j) {
        Int& acc = out.a[static_cast<size_t>(j)];
        const long imax = std::min(j, r + 1);
        for (long i = 0; i <= imax; ++i) {
            const unsigned long h =
                static_cast<unsigned long>(ehrhart_count(spec, j - i));
            if (i % 2 == 0)
                mpz_addmul_ui(acc.get_mpz_t(), binom[i].get_mpz_t(), h);
            else
                mpz_submul_ui(acc.get_mpz_t(), binom[i].get_mpz_t(), h);
        }
    }
    return out;
}

NumeratorStream::NumeratorStream(const SurfaceSpec& spec) : spec_(spec) {
    r_ = constants(spec).r;
    binom_.push_back(Int(1));
}

void NumeratorStream::grow(long upto) {
    while (static_cast<long>(binom_.size()) <= upto) {
        const long i = static_cast<long>(binom_.size());
        Int next = binom_.back();
        next *= (r_ + 2 - i);
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(i));
        binom_.push_back(std::move(next));
    }
}

Int NumeratorStream::coefficient(long j) {
    if (j < 0) throw std::out_of_range("NumeratorStream: j must be >= 0");
    if (j > r_ + 3) return 0;
    const long imax = std::min(j, r_ + 1);
    grow(imax);
    Int acc(0);
    for (long i = 0; i <= imax; ++i) {
        const unsigned long h = static_cast<unsigned long>(ehrhart_count(spec_, j - i));
        if (i % 2 == 0)
            mpz_addmul_ui(acc.get_mpz_t(), binom_[i].get_mpz_t(), h);
        else
            mpz_submul_ui(acc.get_mpz_t(), binom_[i].get_mpz_t(), h);
    }
    return acc;
}

Int numerator_coefficient(const SurfaceSpec& spec, long j) {
    return NumeratorStream(spec).coefficient(j);
}

// ---- row formulas -----------------------------------------------------------

Int row2(const SurfaceSpec& spec, long p, const FormulaVariant& variant) {
    validate(variant);
    const auto pc = constants(spec);
    if (p < 0 || p > pc.r) throw std::out_of_range("row2: p must be in 0..r");
    const long nu = n1_value(pc, variant.n1_interpretation);
    const long coeff = p - pc.n + nu + variant.q2_max_shift;
    if (coeff <= 0) return 0;
    return Int(coeff) * binomial(pc.r - 2, p);
}

Int printed_row1(const SurfaceSpec& spec, long p, const FormulaVariant& variant) {
    validate(variant);
    const auto pc = constants(spec);
    if (p < 0 || p > pc.r) throw std::out_of_range("printed_row1: p must be in 0..r");
    const long r = pc.r;
    const long nu = n1_value(pc, variant.n1_interpretation);

    // max{p - r + nu + 1, 0} C(r-2, p-1) + p C(r, p+1) - (r + nu - s) C(r-2, p);
    // the first and third coefficients are the printed expressions rewritten
    // through n = r + 1 and the selected n^(1).
    const long max_coeff = std::max(p - r + nu + 1, 0L);
    Int value = Int(max_coeff) * binomial(r - 2, p - 1);
    value += Int(p) * binomial(r, p + 1);
    value -= Int(r + nu - variant.q1_coeff_shift) * binomial(r - 2, p);
    return value;
}

namespace {

// shared by row1_from_numerator and betti_table
Int row1_from_coefficient(const Int& a_p_plus_1, const SurfaceSpec& spec, long p,
                          const FormulaVariant& variant) {
    Int value = (p % 2 == 0) ? a_p_plus_1 : Int(-a_p_plus_1);
    value += row2(spec, p - 1, variant);
    if (value < 0) throw negative_betti_error(p, value.get_str());
    return value;
}

}  // namespace

Int row1_from_numerator(const SurfaceSpec& spec, long p, const FormulaVariant& variant) {
    validate(variant);
    const auto pc = constants(spec);
    if (p < 1 || p > pc.r) throw std::out_of_range("row1_from_numerator: p must be in 1..r");
    return row1_from_coefficient(numerator_coefficient(spec, p + 1), spec, p, variant);
}

BettiTable betti_table(const SurfaceSpec& spec, const FormulaVariant& variant) {
    validate(variant);
    const auto pc = constants(spec);
    const auto num = hilbert_numerator(spec);

    BettiTable table(pc.r, Provenance::NumeratorReconstruction);
    table.set(0, 0, 1);
    table.set(0, 1, 0);
    table.set(0, 2, row2(spec, 0, variant));
    for (long p = 1; p <= pc.r; ++p) {
        table.set(p, 0, 0);
        table.set(p, 1, row1_from_coefficient(num.a[static_cast<size_t>(p) + 1], spec, p, variant));
        table.set(p, 2, row2(spec, p, variant));
    }
    return table;
}

const std::array<Q2VariantKey, 6>& VariantReport::q2_keys() {
    static const std::array<Q2VariantKey, 6> keys = {{
        {N1Interpretation::AlgebraicClosedForm, 2},
        {N1Interpretation::AlgebraicClosedForm, 3},
        {N1Interpretation::GeometricInterior, 2},
        {N1Interpretation::GeometricInterior, 3},
        {N1Interpretation::HeightOne, 2},
        {N1Interpretation::HeightOne, 3},
    }};
    return keys;
}

const std::array<std::pair<N1Interpretation, int>, 6>& VariantReport::printed_keys() {
    static const std::array<std::pair<N1Interpretation, int>, 6> keys = {{
        {N1Interpretation::AlgebraicClosedForm, 1},
        {N1Interpretation::AlgebraicClosedForm, 2},
        {N1Interpretation::GeometricInterior, 1},
        {N1Interpretation::GeometricInterior, 2},
        {N1Interpretation::HeightOne, 1},
        {N1Interpretation::HeightOne, 2},
    }};
    return keys;
}

}  // namespace toricsyz
