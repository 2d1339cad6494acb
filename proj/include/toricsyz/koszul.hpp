#pragma once

#include <cstdint>
#include <vector>

#include "toricsyz/betti.hpp"
#include "toricsyz/lattice.hpp"

namespace toricsyz {

inline constexpr std::uint32_t kOraclePrime = 32003;
inline constexpr std::uint32_t kOracleCheckPrime = 65521;
inline constexpr std::uint64_t kOracleEntryLimit = 5'000'000;
inline constexpr long kOracleMaxR = 15;

// Coordinate-format sparse matrix over F_prime. Values are stored reduced.
struct SparseMatrix {
    struct Entry {
        std::uint32_t row = 0;
        std::uint32_t col = 0;
        std::uint32_t value = 0;  // nonzero, < prime
    };

    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::uint32_t prime = kOraclePrime;
    std::vector<Entry> entries;
};

// Dimensions of the three-term complex computing K_{p,q}:
//   wedge^{p+1} V (x) H^0((q-1)L)  ->  wedge^p V (x) H^0(qL)  ->  wedge^{p-1} V (x) H^0((q+1)L)
struct KoszulStratum {
    SurfaceSpec spec;
    long p = 0;
    int q = 0;
    std::uint64_t left_dim = 0;
    std::uint64_t mid_dim = 0;
    std::uint64_t right_dim = 0;
};

KoszulStratum stratum(const SurfaceSpec& spec, long p, int q);

// Matrix of the Koszul differential
//   wedge^{p+1} V (x) H^0(qL)  ->  wedge^p V (x) H^0((q+1)L),
//   e_{i_0..i_p} (x) m  |->  sum_j (-1)^j e_{..i_j-hat..} (x) (v_{i_j} * m),
// where V's basis is the lattice points of Delta in lex (y, x) order,
// monomial multiplication is lattice-point addition, and exterior tuples are
// indexed in colex order. Column index = colex(T) * H(q) + monomial index;
// row index = colex(S) * H(q+1) + monomial index. Each column carries exactly
// p+1 entries. Requires 0 <= p <= n and q in {0..3}.
SparseMatrix koszul_matrix(const SurfaceSpec& spec, long p, int q,
                           std::uint32_t prime = kOraclePrime);

// Exact rank over F_prime. Splits the matrix into connected components, then
// eliminates each one: dense Gaussian elimination for components below the
// entry threshold, sparse elimination with Markowitz-style pivoting above it.
std::uint64_t rank_mod_p(const SparseMatrix& m);

struct OracleOptions {
    std::uint64_t entry_limit = kOracleEntryLimit;  // per-stratum matrix entries
    std::uint32_t prime = kOraclePrime;
    int threads = 0;  // 0 = hardware concurrency
};

// Ground-truth k_{p,q} = mid_dim - rank(mid->right) - rank(left->mid).
// Requires p <= r, q in {0..3}, r <= 15; throws resource_limit_error when the
// feasibility guard or the entry limit is exceeded.
std::uint64_t oracle_kpq(const SurfaceSpec& spec, long p, int q,
                         const OracleOptions& options = {});

struct OracleResult {
    BettiTable table;            // rows 0..2, provenance Oracle
    std::vector<Int> row3;       // q = 3 values per p, kept for verification
    double elapsed_seconds = 0.0;
};

// Full table over p = 0..r, q = 0..3 with shared rank computations.
OracleResult oracle_table_full(const SurfaceSpec& spec, const OracleOptions& options = {});

// As above, but asserts row q=3 is identically zero and folds it out.
// Throws std::logic_error if the row-3 assertion ever fails.
BettiTable oracle_table(const SurfaceSpec& spec, const OracleOptions& options = {});

// Test support: multiplies consecutive differentials and reports whether the
// composite is zero mod prime (the complex property).
bool composite_is_zero(const SparseMatrix& second, const SparseMatrix& first);

}  // namespace toricsyz
