#include "toricsyz/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "toricsyz/errors.hpp"

namespace toricsyz {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double gauss(double a) { return std::exp(-0.5 * a * a); }

// incremental walk over C(r-2, p) * max{p - n + nu + kappa, 0} for p = 0..r
class Row2Walk {
public:
    Row2Walk(const PolytopeConstants& pc, const FormulaVariant& variant)
        : r_(pc.r), offset_(pc.n - n1_value(pc, variant.n1_interpretation) -
                            variant.q2_max_shift) {
        binom_ = 1;  // C(r-2, 0)
    }

    // value at current p, then advance
    Int value_at(long p) {
        if (p != cursor_) throw std::logic_error("Row2Walk: out-of-order query");
        Int out(0);
        const long coeff = p - offset_;
        if (coeff > 0 && p <= r_ - 2) out = coeff * binom_;
        advance();
        return out;
    }

private:
    void advance() {
        if (cursor_ <= r_ - 3) {
            binom_ *= (r_ - 2 - cursor_);
            mpz_divexact_ui(binom_.get_mpz_t(), binom_.get_mpz_t(),
                            static_cast<unsigned long>(cursor_ + 1));
        }
        ++cursor_;
    }

    long r_;
    long offset_;
    long cursor_ = 0;
    Int binom_;
};

}  // namespace

double effective_a(long r, long p) {
    if (r < 1) throw std::invalid_argument("effective_a: r must be >= 1");
    return (2.0 * static_cast<double>(p) - static_cast<double>(r)) /
           std::sqrt(static_cast<double>(r));
}

ScaleFactor scale_factor_F1(long r) {
    if (r < 1) throw std::invalid_argument("scale_factor_F1: r must be >= 1");
    ScaleFactor f;
    f.log_value = std::log(3.0) + 0.5 * std::log(kTwoPi) -
                  static_cast<double>(r) * std::log(2.0) -
                  0.5 * std::log(static_cast<double>(r));
    f.value = std::exp(f.log_value);
    return f;
}

RowDistribution scaled_row(const SurfaceSpec& spec, int q, const FormulaVariant& variant,
                           const ScaledRowOptions& options) {
    validate(variant);
    if (q != 1 && q != 2) throw std::invalid_argument("scaled_row: q must be 1 or 2");
    const auto pc = constants(spec);
    const long r = pc.r;
    const auto f1 = scale_factor_F1(r);

    RowDistribution dist;
    dist.spec = spec;
    dist.q = q;
    dist.scale_description = "F1(r) = 3*sqrt(2*pi)/(2^r*sqrt(r)); scaled = F1 * k_{p,q}";

    long lo = 0, hi = r;
    const bool windowed = r > options.full_table_r_bound;
    if (windowed) {
        const double w = options.a_window * std::sqrt(static_cast<double>(r));
        lo = std::max(0L, static_cast<long>(std::ceil((r - w) / 2.0)));
        hi = std::min(r, static_cast<long>(std::floor((r + w) / 2.0)));
    }

    auto push = [&](long p, Int raw) {
        RowSample s;
        s.p = p;
        s.a_eff = effective_a(r, p);
        s.scaled = (raw == 0) ? 0.0 : std::exp(f1.log_value + log_of(raw));
        s.raw = std::move(raw);
        dist.samples.push_back(std::move(s));
    };

    if (q == 2) {
        Row2Walk walk(pc, variant);
        for (long p = 0; p <= hi; ++p) {
            Int v = walk.value_at(p);
            if (p >= lo) push(p, std::move(v));
        }
        return dist;
    }

    if (!windowed) {
        const auto table = betti_table(spec, variant);  // propagates negative_betti_error
        for (long p = lo; p <= hi; ++p) push(p, table.entry(p, 1));
        return dist;
    }

    if (lo == 0) push(0, Int(0));  // k_{0,1} = 0 for a nondegenerate embedding
    NumeratorStream stream(spec);
    for (long p = std::max(lo, 1L); p <= hi; ++p) {
        Int value = stream.coefficient(p + 1);
        if (p % 2 != 0) value = -value;
        value += row2(spec, p - 1, variant);
        if (value < 0) throw negative_betti_error(p, value.get_str());
        push(p, std::move(value));
    }
    return dist;
}

CltSample clt_value(long r, long p, long c1, long c2) {
    if (r < 1) throw std::invalid_argument("clt_value: r must be >= 1");
    CltSample s;
    s.r = r;
    s.p = p;
    s.c1 = c1;
    s.c2 = c2;
    const double a = effective_a(r, p);
    s.target = std::exp2(static_cast<double>(c1)) * gauss(a);

    const long n = r + c1, k = p + c2;
    if (n >= 0 && k >= 0 && k <= n) {
        const Int binom = binomial(n, k);
        s.value = std::exp(0.5 * std::log(kTwoPi * static_cast<double>(r)) -
                           static_cast<double>(r + 1) * std::log(2.0) + log_of(binom));
    }
    return s;
}

double lemma_lhs(long r, double a) {
    if (r < 1) throw std::invalid_argument("lemma_lhs: r must be >= 1");
    const double s = std::sqrt(static_cast<double>(r));
    if (std::abs(a) >= s)
        throw std::domain_error("lemma_lhs: |a| must be below sqrt(r)");
    const double x = a / s;
    const double exponent = -(static_cast<double>(r) + a * s) / 2.0 * std::log1p(x) -
                            (static_cast<double>(r) - a * s) / 2.0 * std::log1p(-x);
    return std::exp(exponent);
}

DecayFit decay_fit(const std::vector<std::pair<double, double>>& samples) {
    DecayFit fit;
    for (const auto& [r, err] : samples) {
        if (err > 0.0 && r > 0.0) fit.points.emplace_back(std::log(r), std::log(err));
    }
    if (fit.points.size() < 4)
        throw insufficient_data_error("decay_fit: need at least 4 samples with error > 0");

    const double n = static_cast<double>(fit.points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : fit.points) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

namespace {

struct Row2Shape {
    std::optional<std::pair<long, long>> support;
    long peak_p = 0;
    bool central_zero = true;
};

Row2Shape row2_shape(const SurfaceSpec& spec, const FormulaVariant& variant, double a_window) {
    const auto pc = constants(spec);
    Row2Walk walk(pc, variant);
    Row2Shape shape;
    Int peak(-1);
    const double w = a_window * std::sqrt(static_cast<double>(pc.r));
    const double wlo = (pc.r - w) / 2.0, whi = (pc.r + w) / 2.0;
    for (long p = 0; p <= pc.r; ++p) {
        Int v = walk.value_at(p);
        if (v != 0) {
            if (!shape.support)
                shape.support = {p, p};
            else
                shape.support->second = p;
            if (v > peak) {
                peak = v;
                shape.peak_p = p;
            }
            if (p >= wlo && p <= whi) shape.central_zero = false;
        }
    }
    return shape;
}

}  // namespace

TheoremCheckReport theorem_check(long delta, const std::vector<long>& d_list, double a_window,
                                 const FormulaVariant& variant) {
    validate(variant);
    if (a_window <= 0) throw std::invalid_argument("theorem_check: a_window must be positive");
    for (size_t i = 1; i < d_list.size(); ++i)
        if (d_list[i] < d_list[i - 1])
            throw std::invalid_argument("theorem_check: d_list must be nondecreasing");

    TheoremCheckReport report;
    report.delta = delta;
    report.a_window = a_window;
    report.variant = variant;

    std::vector<std::pair<double, double>> decay_samples;
    for (long d : d_list) {
        const SurfaceSpec spec{delta, d};
        const auto pc = constants(spec);

        ScaledRowOptions opts;
        opts.a_window = a_window;
        const auto row = scaled_row(spec, 1, variant, opts);
        double max_err = 0.0;
        for (const auto& s : row.samples) {
            if (std::abs(s.a_eff) > a_window) continue;
            max_err = std::max(max_err, std::abs(s.scaled - gauss(s.a_eff)));
        }
        report.q1_errors.push_back({d, pc.r, max_err});
        decay_samples.emplace_back(static_cast<double>(pc.r), max_err);

        const auto shape = row2_shape(spec, variant, a_window);
        report.q2_support.push_back({d, pc.r, shape.support, shape.peak_p, shape.central_zero});
    }

    report.q1_errors_decreasing = true;
    for (size_t i = 1; i < report.q1_errors.size(); ++i)
        if (report.q1_errors[i].max_abs_error >= report.q1_errors[i - 1].max_abs_error)
            report.q1_errors_decreasing = false;
    if (decay_samples.size() >= 4) report.q1_decay = decay_fit(decay_samples);

    // smallest d with the row-2 support entirely right of the central window,
    // stable for the next stretch of d (support start grows ~2d, window ~1.5d)
    for (long d = 1; d <= 1'000'000; ++d) {
        bool stable = true;
        for (long dd = d; dd < d + 64 && stable; ++dd) {
            const auto shape = row2_shape(SurfaceSpec{delta, dd}, variant, a_window);
            stable = shape.central_zero;
        }
        if (stable) {
            report.q2_vanishing_threshold_d = d;
            break;
        }
    }
    return report;
}

}  // namespace toricsyz
