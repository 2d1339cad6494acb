#include "toricsyz/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstring>
#include <mutex>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "toricsyz/errors.hpp"

namespace toricsyz {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

constexpr u64 kDenseNnzThreshold = 100'000;   // below this a component is eliminated densely
constexpr u64 kDenseCellCap = u64(1) << 24;   // hard cap on dense cells (128 MB of doubles)
constexpr u64 kStructuralEntryCap = u64(1) << 31;

u64 modinv(u64 a, u64 p) {
    // extended Euclid; p prime, 0 < a < p
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
    while (new_r != 0) {
        long long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::invalid_argument("modinv: argument not invertible");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<u64>(t);
}

void check_prime(u32 prime) {
    if (prime < 3 || prime >= (u32(1) << 16))
        throw std::invalid_argument("prime must be an odd prime below 2^16");
}

// O(1) lattice-point -> index lookup inside the k-th dilate, lex (y, x) order.
struct DilateIndex {
    long twok = 0;
    std::vector<long> xmax;        // per y
    std::vector<u64> offset;       // per y
    u64 size = 0;

    static DilateIndex build(const SurfaceSpec& spec, long k) {
        DilateIndex di;
        di.twok = 2 * k;
        di.xmax.resize(static_cast<size_t>(di.twok) + 1);
        di.offset.resize(static_cast<size_t>(di.twok) + 1);
        u64 acc = 0;
        for (long y = 0; y <= di.twok; ++y) {
            di.offset[static_cast<size_t>(y)] = acc;
            long xm = static_cast<long>((2LL * k * spec.d + 1LL * y * spec.delta) / 2);
            di.xmax[static_cast<size_t>(y)] = xm;
            acc += static_cast<u64>(xm) + 1;
        }
        di.size = acc;
        return di;
    }

    u64 index(long x, long y) const {
        if (y < 0 || y > twok || x < 0 || x > xmax[static_cast<size_t>(y)])
            throw std::logic_error("DilateIndex: point outside dilate");
        return offset[static_cast<size_t>(y)] + static_cast<u64>(x);
    }
};

// small Pascal triangle, enough for n <= 16 exterior indexing
struct BinomTable {
    u64 c[20][20] = {};
    explicit BinomTable(long n) {
        for (long i = 0; i <= n + 1; ++i) {
            c[i][0] = 1;
            for (long j = 1; j <= i; ++j)
                c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
        }
    }
    u64 operator()(long n, long k) const {
        if (k < 0 || k > n) return 0;
        return c[n][k];
    }
};

// colex rank of a strictly increasing tuple: sum_t C(S[t], t+1)
u64 colex_rank(const std::vector<long>& s, const BinomTable& bt) {
    u64 rank = 0;
    for (size_t t = 0; t < s.size(); ++t) rank += bt(s[t], static_cast<long>(t) + 1);
    return rank;
}

// advance a size-m subset of {0..n-1} in colex order; false when exhausted
bool next_colex(std::vector<long>& s, long n) {
    const long m = static_cast<long>(s.size());
    for (long t = 0; t < m; ++t) {
        long limit = (t + 1 < m) ? s[static_cast<size_t>(t) + 1] - 1 : n - 1;
        if (s[static_cast<size_t>(t)] < limit) {
            ++s[static_cast<size_t>(t)];
            for (long i = 0; i < t; ++i) s[static_cast<size_t>(i)] = i;
            return true;
        }
    }
    return false;
}

u64 nnz_estimate(long n, long p, u64 source_monomials, const BinomTable& bt) {
    if (p + 1 > n) return 0;
    return static_cast<u64>(p + 1) * bt(n, p + 1) * source_monomials;
}

// ---- dense elimination over F_p on exact doubles ---------------------------
//
// Entries are integers kept below 2^53 so every double operation is exact;
// rows are reduced mod p lazily. Pivot search tests cells with a scalar fmod.
u64 dense_rank(std::vector<double>& a, size_t R, size_t C, u64 p) {
    if (R == 0 || C == 0) return 0;
    const double dp = static_cast<double>(p);
    std::vector<size_t> rp(R);
    std::iota(rp.begin(), rp.end(), size_t{0});

    const double axpy_gain = static_cast<double>(p - 1) * static_cast<double>(p - 1);
    const u64 reduce_every = std::max<u64>(1, static_cast<u64>(9007199254740992.0 / axpy_gain / 2));
    std::vector<u64> axpy_count(R, 0);

    auto reduce_row = [&](size_t i, size_t from) {
        double* row = a.data() + rp[i] * C;
        for (size_t k = from; k < C; ++k) row[k] = std::fmod(row[k], dp);
        axpy_count[i] = 0;
    };

    const size_t max_rank = std::min(R, C);
    size_t pr = 0;
    u64 rank = 0;
    for (size_t c = 0; c < C && pr < R; ++c) {
        size_t piv = SIZE_MAX;
        for (size_t i = pr; i < R; ++i) {
            double v = a[rp[i] * C + c];
            if (v != 0.0 && std::fmod(v, dp) != 0.0) {
                piv = i;
                break;
            }
        }
        if (piv == SIZE_MAX) continue;
        std::swap(rp[pr], rp[piv]);
        std::swap(axpy_count[pr], axpy_count[piv]);
        reduce_row(pr, c);

        const double* prow = a.data() + rp[pr] * C;
        const u64 pv = static_cast<u64>(prow[c]);
        const u64 pvinv = modinv(pv, p);
        for (size_t i = pr + 1; i < R; ++i) {
            double* row = a.data() + rp[i] * C;
            double vd = std::fmod(row[c], dp);
            if (vd == 0.0) {
                row[c] = 0.0;
                continue;
            }
            const u64 v = static_cast<u64>(vd);
            const u64 f = p - (v * pvinv) % p;
            const double fd = static_cast<double>(f == p ? 0 : f);
            for (size_t k = c; k < C; ++k) row[k] += fd * prow[k];
            if (++axpy_count[i] >= reduce_every) reduce_row(i, c);
        }
        ++pr;
        ++rank;
        if (rank == max_rank) break;
    }
    return rank;
}

// ---- sparse elimination with Markowitz-style pivoting -----------------------
class MarkowitzEliminator {
public:
    MarkowitzEliminator(size_t rows, size_t cols, u64 p) : R_(rows), C_(cols), p_(p) {
        rows_.resize(R_);
        col_nnz_.assign(C_, 0);
        col_rows_.resize(C_);
        row_live_.assign(R_, 1);
        col_live_.assign(C_, 1);
    }

    // entries must arrive sorted by (row, col) with duplicates pre-merged
    void set_row(size_t r, std::vector<std::pair<u32, u32>> cells) {
        for (const auto& [c, v] : cells) {
            ++col_nnz_[c];
            col_rows_[c].push_back(static_cast<u32>(r));
        }
        rows_[r] = std::move(cells);
    }

    u64 eliminate() {
        using QItem = std::pair<u64, u32>;  // (nnz at push time, col)
        std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;
        for (u32 c = 0; c < C_; ++c)
            if (col_nnz_[c] > 0) queue.push({col_nnz_[c], c});

        u64 rank = 0;
        std::vector<std::pair<u32, u32>> merged;
        while (!queue.empty()) {
            auto [cnt, j] = queue.top();
            queue.pop();
            if (!col_live_[j] || col_nnz_[j] == 0 || col_nnz_[j] != cnt) continue;

            // live rows that really contain column j, with their values
            std::vector<std::pair<u32, u32>> cands;  // (row, value at j)
            auto& reg = col_rows_[j];
            for (u32 r : reg) {
                if (!row_live_[r]) continue;
                auto it = find_col(rows_[r], j);
                if (it != rows_[r].end()) cands.emplace_back(r, it->second);
            }
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            reg.clear();
            if (cands.empty()) {
                col_nnz_[j] = 0;
                continue;
            }
            for (const auto& [r, v] : cands) reg.push_back(r);
            col_nnz_[j] = cands.size();

            size_t best = 0;
            for (size_t i = 1; i < cands.size(); ++i)
                if (rows_[cands[i].first].size() < rows_[cands[best].first].size()) best = i;
            const u32 pivot_row = cands[best].first;
            const u64 pvinv = modinv(cands[best].second, p_);
            const auto pivot_cells = rows_[pivot_row];  // copy: merges read it repeatedly

            for (const auto& [r, vj] : cands) {
                if (r == pivot_row) continue;
                u64 f = p_ - (static_cast<u64>(vj) * pvinv) % p_;
                if (f == p_) f = 0;
                merge_row(r, pivot_cells, f, queue);
            }

            // retire pivot row and column
            for (const auto& [c, v] : pivot_cells) {
                --col_nnz_[c];
                if (c != j && col_live_[c]) queue.push({col_nnz_[c], c});
            }
            row_live_[pivot_row] = 0;
            rows_[pivot_row].clear();
            rows_[pivot_row].shrink_to_fit();
            col_live_[j] = 0;
            col_nnz_[j] = 0;
            ++rank;
        }
        return rank;
    }

private:
    using Cells = std::vector<std::pair<u32, u32>>;

    static Cells::iterator find_col(Cells& cells, u32 col) {
        auto it = std::lower_bound(cells.begin(), cells.end(), col,
                                   [](const auto& cell, u32 c) { return cell.first < c; });
        return (it != cells.end() && it->first == col) ? it : cells.end();
    }

    template <typename Queue>
    void merge_row(u32 r, const Cells& pivot, u64 f, Queue& queue) {
        // rows_[r] += f * pivot (mod p), keeping sorted order
        Cells out;
        out.reserve(rows_[r].size() + pivot.size());
        auto a = rows_[r].begin(), ae = rows_[r].end();
        auto b = pivot.begin(), be = pivot.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                out.push_back(*a++);
            } else if (a == ae || b->first < a->first) {
                u64 v = (f * b->second) % p_;
                if (v != 0) {
                    out.emplace_back(b->first, static_cast<u32>(v));
                    ++col_nnz_[b->first];
                    col_rows_[b->first].push_back(r);
                    if (col_live_[b->first]) queue.push({col_nnz_[b->first], b->first});
                }
                ++b;
            } else {
                u64 v = (a->second + f * b->second) % p_;
                if (v != 0) {
                    out.emplace_back(a->first, static_cast<u32>(v));
                } else {
                    --col_nnz_[a->first];
                    if (col_live_[a->first]) queue.push({col_nnz_[a->first], a->first});
                }
                ++a;
                ++b;
            }
        }
        rows_[r] = std::move(out);
    }

    size_t R_, C_;
    u64 p_;
    std::vector<Cells> rows_;
    std::vector<u64> col_nnz_;
    std::vector<std::vector<u32>> col_rows_;
    std::vector<char> row_live_, col_live_;
};

u64 component_rank(const std::vector<SparseMatrix::Entry>& entries, u64 p) {
    // local reindexing
    std::unordered_map<u32, u32> rmap, cmap;
    rmap.reserve(entries.size());
    cmap.reserve(entries.size());
    for (const auto& e : entries) {
        rmap.emplace(e.row, static_cast<u32>(rmap.size()));
        cmap.emplace(e.col, static_cast<u32>(cmap.size()));
    }
    const size_t R = rmap.size(), C = cmap.size();

    if (static_cast<u64>(entries.size()) < kDenseNnzThreshold &&
        static_cast<u64>(R) * C <= kDenseCellCap) {
        std::vector<double> a(R * C, 0.0);
        for (const auto& e : entries) {
            double& cell = a[static_cast<size_t>(rmap[e.row]) * C + cmap[e.col]];
            cell = std::fmod(cell + e.value, static_cast<double>(p));
        }
        return dense_rank(a, R, C, p);
    }

    // sparse path: build merged sorted rows
    std::vector<std::tuple<u32, u32, u32>> cells;
    cells.reserve(entries.size());
    for (const auto& e : entries) cells.emplace_back(rmap[e.row], cmap[e.col], e.value);
    std::sort(cells.begin(), cells.end(),
              [](const auto& x, const auto& y) {
                  return std::tie(std::get<0>(x), std::get<1>(x)) <
                         std::tie(std::get<0>(y), std::get<1>(y));
              });
    MarkowitzEliminator elim(R, C, p);
    size_t i = 0;
    while (i < cells.size()) {
        const u32 r = std::get<0>(cells[i]);
        std::vector<std::pair<u32, u32>> row;
        while (i < cells.size() && std::get<0>(cells[i]) == r) {
            const u32 c = std::get<1>(cells[i]);
            u64 v = 0;
            while (i < cells.size() && std::get<0>(cells[i]) == r && std::get<1>(cells[i]) == c) {
                v = (v + std::get<2>(cells[i])) % p;
                ++i;
            }
            if (v != 0) row.emplace_back(c, static_cast<u32>(v));
        }
        elim.set_row(r, std::move(row));
    }
    return elim.eliminate();
}

struct UnionFind {
    std::vector<u32> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), u32{0}); }
    u32 find(u32 x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(u32 a, u32 b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

}  // namespace

// ---- public surface ---------------------------------------------------------

KoszulStratum stratum(const SurfaceSpec& spec, long p, int q) {
    validate(spec);
    const auto pc = constants(spec);
    if (p < 0 || p > pc.n) throw std::out_of_range("stratum: p must be in 0..n");
    if (q < 0 || q > 3) throw std::out_of_range("stratum: q must be in 0..3");
    BinomTable bt(pc.n);
    auto hdim = [&](int k) -> u64 {
        return k < 0 ? 0 : static_cast<u64>(ehrhart_count(spec, k));
    };
    KoszulStratum s;
    s.spec = spec;
    s.p = p;
    s.q = q;
    s.left_dim = bt(pc.n, p + 1) * hdim(q - 1);
    s.mid_dim = bt(pc.n, p) * hdim(q);
    s.right_dim = (p >= 1 ? bt(pc.n, p - 1) : 0) * hdim(q + 1);
    return s;
}

SparseMatrix koszul_matrix(const SurfaceSpec& spec, long p, int q, std::uint32_t prime) {
    validate(spec);
    check_prime(prime);
    const auto pc = constants(spec);
    const long n = pc.n;
    if (p < 0 || p > n) throw std::out_of_range("koszul_matrix: p must be in 0..n");
    if (q < 0 || q > 3) throw std::out_of_range("koszul_matrix: q must be in 0..3");

    const auto points = lattice_points(spec, 1);
    const auto source = lattice_points(spec, q);      // H^0(qL) monomials
    const DilateIndex target = DilateIndex::build(spec, q + 1);
    const BinomTable bt(n);

    SparseMatrix m;
    m.prime = prime;
    m.cols = bt(n, p + 1) * static_cast<u64>(source.size());
    m.rows = bt(n, p) * target.size;
    if (p + 1 > n || m.cols == 0) return m;

    const u64 nnz = nnz_estimate(n, p, source.size(), bt);
    if (nnz > kStructuralEntryCap)
        throw resource_limit_error("koszul_matrix: differential exceeds the structural entry cap");
    m.entries.reserve(nnz);

    const u64 hq = source.size();
    const u64 hq1 = target.size;
    std::vector<long> tuple(static_cast<size_t>(p) + 1);
    std::iota(tuple.begin(), tuple.end(), 0L);
    std::vector<long> dropped(static_cast<size_t>(p));
    std::vector<u64> drop_rank(static_cast<size_t>(p) + 1);

    u64 tuple_rank = 0;
    do {
        for (long j = 0; j <= p; ++j) {
            dropped.clear();
            for (long t = 0; t <= p; ++t)
                if (t != j) dropped.push_back(tuple[static_cast<size_t>(t)]);
            drop_rank[static_cast<size_t>(j)] = colex_rank(dropped, bt);
        }
        for (size_t mi = 0; mi < source.size(); ++mi) {
            const u64 col = tuple_rank * hq + mi;
            for (long j = 0; j <= p; ++j) {
                const auto& v = points[static_cast<size_t>(tuple[static_cast<size_t>(j)])];
                const u64 row = drop_rank[static_cast<size_t>(j)] * hq1 +
                                target.index(v.x + source[mi].x, v.y + source[mi].y);
                const u32 value = (j % 2 == 0) ? 1u : prime - 1u;
                m.entries.push_back({static_cast<u32>(row), static_cast<u32>(col), value});
            }
        }
        ++tuple_rank;
    } while (next_colex(tuple, n));

    return m;
}

std::uint64_t rank_mod_p(const SparseMatrix& m) {
    check_prime(m.prime);
    if (m.entries.empty()) return 0;
    for (const auto& e : m.entries) {
        if (e.row >= m.rows || e.col >= m.cols)
            throw std::invalid_argument("rank_mod_p: entry index out of range");
        if (e.value == 0 || e.value >= m.prime)
            throw std::invalid_argument("rank_mod_p: entry value not reduced mod prime");
    }

    // split into connected components of the row/column bipartite graph
    const u64 nodes = m.rows + m.cols;
    UnionFind uf(static_cast<size_t>(nodes));
    for (const auto& e : m.entries)
        uf.unite(e.row, static_cast<u32>(m.rows + e.col));

    std::unordered_map<u32, std::vector<SparseMatrix::Entry>> components;
    for (const auto& e : m.entries) components[uf.find(e.row)].push_back(e);

    u64 rank = 0;
    for (auto& [root, entries] : components) rank += component_rank(entries, m.prime);
    return rank;
}

namespace {

// feasibility checks shared by the oracle entry points
void oracle_guards(const SurfaceSpec& spec, const PolytopeConstants& pc,
                   const OracleOptions& options) {
    validate(spec);
    check_prime(options.prime);
    if (pc.r > kOracleMaxR)
        throw resource_limit_error("oracle: r = " + std::to_string(pc.r) +
                                   " exceeds the feasibility guard r <= " +
                                   std::to_string(kOracleMaxR));
}

void entry_guard(const SurfaceSpec& spec, long n, long p, int q, u64 limit,
                 const BinomTable& bt) {
    if (p < 0 || p + 1 > n || q < 0) return;
    const u64 source = static_cast<u64>(ehrhart_count(spec, q));
    const u64 nnz = nnz_estimate(n, p, source, bt);
    if (nnz > limit)
        throw resource_limit_error(
            "oracle: differential at (p=" + std::to_string(p) + ", q=" + std::to_string(q) +
            ") has " + std::to_string(nnz) + " entries, over the limit " + std::to_string(limit));
}

u64 matrix_rank(const SurfaceSpec& spec, long p, int q, u32 prime) {
    if (p < 0 || q < 0) return 0;
    const auto m = koszul_matrix(spec, p, q, prime);
    if (m.cols == 0 || m.rows == 0) return 0;
    return rank_mod_p(m);
}

}  // namespace

std::uint64_t oracle_kpq(const SurfaceSpec& spec, long p, int q, const OracleOptions& options) {
    const auto pc = constants(spec);
    oracle_guards(spec, pc, options);
    if (p < 0 || p > pc.r) throw std::out_of_range("oracle_kpq: p must be in 0..r");
    if (q < 0 || q > 3) throw std::out_of_range("oracle_kpq: q must be in 0..3");

    const BinomTable bt(pc.n);
    entry_guard(spec, pc.n, p, q - 1, options.entry_limit, bt);
    entry_guard(spec, pc.n, p - 1, q, options.entry_limit, bt);

    const u64 mid = bt(pc.n, p) * static_cast<u64>(ehrhart_count(spec, q));
    const u64 rank_left = (q >= 1) ? matrix_rank(spec, p, q - 1, options.prime) : 0;
    const u64 rank_right = (p >= 1) ? matrix_rank(spec, p - 1, q, options.prime) : 0;
    if (rank_left + rank_right > mid)
        throw std::logic_error("oracle_kpq: ranks exceed middle dimension");
    return mid - rank_left - rank_right;
}

OracleResult oracle_table_full(const SurfaceSpec& spec, const OracleOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const auto pc = constants(spec);
    oracle_guards(spec, pc, options);
    const long n = pc.n;
    const BinomTable bt(n);

    // every differential the q <= 3 strata touch: p in 0..n-1, q in 0..3
    struct Job {
        long p;
        int q;
        u64 nnz;
    };
    std::vector<Job> jobs;
    for (int q = 0; q <= 3; ++q)
        for (long p = 0; p + 1 <= n; ++p) {
            const u64 source = static_cast<u64>(ehrhart_count(spec, q));
            const u64 nnz = nnz_estimate(n, p, source, bt);
            if (nnz > options.entry_limit)
                throw resource_limit_error("oracle: differential at (p=" + std::to_string(p) +
                                           ", q=" + std::to_string(q) + ") has " +
                                           std::to_string(nnz) + " entries, over the limit " +
                                           std::to_string(options.entry_limit));
            if (nnz > 0) jobs.push_back({p, q, nnz});
        }
    std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.nnz > b.nnz; });

    std::vector<std::vector<u64>> ranks(static_cast<size_t>(n) + 1,
                                        std::vector<u64>(4, 0));
    unsigned threads = options.threads > 0
                           ? static_cast<unsigned>(options.threads)
                           : std::max(1u, std::min(std::thread::hardware_concurrency(), 4u));
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(jobs.size(), 1)));

    std::atomic<size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto worker = [&]() {
        try {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                const auto& job = jobs[i];
                if (first_error) return;
                ranks[static_cast<size_t>(job.p)][static_cast<size_t>(job.q)] =
                    matrix_rank(spec, job.p, job.q, options.prime);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    auto rank_at = [&](long p, int q) -> u64 {
        if (p < 0 || q < 0 || p + 1 > n) return 0;
        return ranks[static_cast<size_t>(p)][static_cast<size_t>(q)];
    };

    OracleResult result{BettiTable(pc.r, Provenance::Oracle), {}, 0.0};
    result.row3.resize(static_cast<size_t>(pc.r) + 1);
    for (long p = 0; p <= pc.r; ++p) {
        for (int q = 0; q <= 3; ++q) {
            const u64 mid = bt(n, p) * static_cast<u64>(ehrhart_count(spec, q));
            const u64 left = (q >= 1) ? rank_at(p, q - 1) : 0;
            const u64 right = (p >= 1) ? rank_at(p - 1, q) : 0;
            if (left + right > mid)
                throw std::logic_error("oracle_table: ranks exceed middle dimension at (p=" +
                                       std::to_string(p) + ", q=" + std::to_string(q) + ")");
            const u64 k = mid - left - right;
            if (q == 3)
                result.row3[static_cast<size_t>(p)] = Int(static_cast<unsigned long>(k));
            else
                result.table.set(p, q, Int(static_cast<unsigned long>(k)));
        }
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

BettiTable oracle_table(const SurfaceSpec& spec, const OracleOptions& options) {
    auto result = oracle_table_full(spec, options);
    for (size_t p = 0; p < result.row3.size(); ++p)
        if (result.row3[p] != 0)
            throw std::logic_error("oracle_table: row q=3 is nonzero at p=" + std::to_string(p) +
                                   " (value " + result.row3[p].get_str() + ")");
    return std::move(result.table);
}

bool composite_is_zero(const SparseMatrix& second, const SparseMatrix& first) {
    if (second.prime != first.prime)
        throw std::invalid_argument("composite_is_zero: prime mismatch");
    if (second.cols != first.rows)
        throw std::invalid_argument("composite_is_zero: dimension mismatch");
    const u64 p = second.prime;

    std::vector<std::vector<std::pair<u32, u32>>> second_cols(static_cast<size_t>(second.cols));
    for (const auto& e : second.entries) second_cols[e.col].emplace_back(e.row, e.value);

    // group first's entries by column, then push each column through second
    std::vector<SparseMatrix::Entry> entries = first.entries;
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.col < b.col; });

    std::unordered_map<u64, u64> acc;
    size_t i = 0;
    while (i < entries.size()) {
        const u32 col = entries[i].col;
        acc.clear();
        while (i < entries.size() && entries[i].col == col) {
            const auto& e = entries[i];
            for (const auto& [row, val] : second_cols[e.row]) {
                u64& cell = acc[row];
                cell = (cell + static_cast<u64>(val) * e.value) % p;
            }
            ++i;
        }
        for (const auto& [row, val] : acc)
            if (val % p != 0) return false;
    }
    return true;
}

}  // namespace toricsyz
