#pragma once

#include <array>
#include <optional>
#include <vector>

#include "toricsyz/bigint.hpp"
#include "toricsyz/errors.hpp"
#include "toricsyz/lattice.hpp"

namespace toricsyz {

// Which count the row formulas should use for n^(1). The three candidates
// disagree: the algebraic closed form r/3 + E_delta equals the height-one
// count, which exceeds the geometric interior count by gcd(delta, 2).
enum class N1Interpretation { AlgebraicClosedForm, GeometricInterior, HeightOne };

// One choice of the ambiguous printed constants. The q=1 shift only affects
// the printed_row1 diagnostic; table construction consumes the other two.
struct FormulaVariant {
    int q1_coeff_shift = 2;  // s in {1, 2}
    int q2_max_shift = 3;    // kappa in {2, 3}
    N1Interpretation n1_interpretation = N1Interpretation::GeometricInterior;

    friend bool operator==(const FormulaVariant&, const FormulaVariant&) = default;
};

void validate(const FormulaVariant& variant);  // std::invalid_argument on bad fields

// The variant that survives reconciliation against the Koszul oracle.
FormulaVariant validated_variant();

const char* to_string(N1Interpretation interp);
std::string to_string(const FormulaVariant& variant);

// The n^(1) value selected by an interpretation, as an exact integer.
long n1_value(const PolytopeConstants& pc, N1Interpretation interp);

enum class Provenance { PrintedFormula, NumeratorReconstruction, Oracle };

// Exact Betti numbers k_{p,q} for p = 0..r, q = 0..2. Entries are always
// nonnegative; signed diagnostics live outside the table.
class BettiTable {
public:
    BettiTable(long r, Provenance prov);

    long r() const { return r_; }
    Provenance provenance() const { return prov_; }

    // entry(p, q) is 0 for p > r by convention
    const Int& entry(long p, int q) const;
    void set(long p, int q, Int value);  // rejects negatives and bad indices

    // entrywise comparison; provenance is not part of table identity
    friend bool operator==(const BettiTable& a, const BettiTable& b);

private:
    long r_;
    Provenance prov_;
    std::vector<std::array<Int, 3>> rows_;
};

// Coefficients of N(t) = (1-t)^{r+1} * sum_k H(k) t^k for j = 0..r+3.
struct NumeratorCoefficients {
    long r = 0;
    std::vector<Int> a;
};

// C(n, k) with the convention that out-of-range k gives 0. n must be >= 0.
Int binomial(long n, long k);

// Full coefficient vector, O(r^2) big-integer operations.
NumeratorCoefficients hilbert_numerator(const SurfaceSpec& spec);

// Single coefficient a[j] without materializing the table; O(j) operations.
Int numerator_coefficient(const SurfaceSpec& spec, long j);

// Streaming access for large r: keeps the running binomial prefix so that
// repeated nearby-j queries cost O(j) once, O(1) storage growth after.
class NumeratorStream {
public:
    explicit NumeratorStream(const SurfaceSpec& spec);
    Int coefficient(long j);
    long r() const { return r_; }

private:
    SurfaceSpec spec_;
    long r_;
    std::vector<Int> binom_;  // C(r+1, i) prefix, grown on demand
    void grow(long upto);
};

// Second-row closed form max{p - n + nu + kappa, 0} * C(r-2, p).
Int row2(const SurfaceSpec& spec, long p, const FormulaVariant& variant);

// The printed three-term first-row expression, evaluated verbatim with the
// variant's constants. May be negative at small d; diagnostic only.
Int printed_row1(const SurfaceSpec& spec, long p, const FormulaVariant& variant);

// k_{p,1} = (-1)^p a[p+1] + k_{p-1,2}; throws negative_betti_error when the
// reconstruction is negative (wrong variant).
Int row1_from_numerator(const SurfaceSpec& spec, long p, const FormulaVariant& variant);

// Assembles rows 0..2 for p = 0..r from row2 and the numerator reconstruction.
BettiTable betti_table(const SurfaceSpec& spec, const FormulaVariant& variant);

// ---- reconciliation against the oracle ------------------------------------

// The q2-relevant projection of a variant; the q1 shift cannot be
// discriminated by exact tables (it never enters them).
struct Q2VariantKey {
    N1Interpretation n1_interpretation;
    int q2_max_shift;

    friend bool operator==(const Q2VariantKey&, const Q2VariantKey&) = default;
};

struct Row2Evidence {
    SurfaceSpec spec;
    long p = 0;
    Int oracle_value;
    std::array<Int, 6> predicted;  // one per Q2VariantKey, reconcile order
};

struct PrintedRow1Evidence {
    SurfaceSpec spec;
    long p = 0;
    Int oracle_value;
    std::array<Int, 6> printed;  // (n1 interp, s) pairs, reconcile order
};

struct VariantReport {
    std::vector<SurfaceSpec> tested_grid;
    // Full variants whose assembled table matches the oracle on every cell.
    // They come in q1-shift pairs by construction.
    std::vector<FormulaVariant> survivors;
    std::vector<Q2VariantKey> surviving_q2;
    // Present iff surviving_q2 is a single key; its q1 shift is reported as
    // the default (2) and flagged undetermined below.
    std::optional<FormulaVariant> winning_variant;
    bool q1_shift_determined = false;
    std::vector<Row2Evidence> row2_evidence;
    std::vector<PrintedRow1Evidence> printed_row1_evidence;

    static const std::array<Q2VariantKey, 6>& q2_keys();
    static const std::array<std::pair<N1Interpretation, int>, 6>& printed_keys();
};

// reconcile() itself lives in reconcile.hpp (it needs the oracle).

}  // namespace toricsyz
