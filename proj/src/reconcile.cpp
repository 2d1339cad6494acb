#include "toricsyz/reconcile.hpp"

#include <array>

#include "toricsyz/errors.hpp"

namespace toricsyz {

namespace {

FormulaVariant variant_from_key(const Q2VariantKey& key, int s = 2) {
    return FormulaVariant{s, key.q2_max_shift, key.n1_interpretation};
}

}  // namespace

VariantReport reconcile(const std::vector<SurfaceSpec>& grid, const OracleOptions& options) {
    for (const auto& spec : grid) validate(spec);

    VariantReport report;
    report.tested_grid = grid;
    const auto& keys = VariantReport::q2_keys();
    const auto& pkeys = VariantReport::printed_keys();
    std::array<bool, 6> alive;
    alive.fill(true);

    for (const auto& spec : grid) {
        BettiTable oracle(0, Provenance::Oracle);
        try {
            oracle = oracle_table(spec, options);
        } catch (const resource_limit_error& e) {
            throw oracle_infeasible_error("reconcile: grid member (delta=" +
                                          std::to_string(spec.delta) + ", d=" +
                                          std::to_string(spec.d) + ") is infeasible: " + e.what());
        }
        const auto num = hilbert_numerator(spec);
        const long r = num.r;

        for (long p = 0; p <= r; ++p) {
            Row2Evidence ev;
            ev.spec = spec;
            ev.p = p;
            ev.oracle_value = oracle.entry(p, 2);
            for (size_t k = 0; k < keys.size(); ++k) {
                const auto variant = variant_from_key(keys[k]);
                ev.predicted[k] = row2(spec, p, variant);
                if (ev.predicted[k] != ev.oracle_value) alive[k] = false;

                // whole-table agreement also requires the reconstructed row 1
                if (p >= 1) {
                    try {
                        Int k1 = (p % 2 == 0) ? num.a[static_cast<size_t>(p) + 1]
                                              : Int(-num.a[static_cast<size_t>(p) + 1]);
                        k1 += row2(spec, p - 1, variant);
                        if (k1 < 0 || k1 != oracle.entry(p, 1)) alive[k] = false;
                    } catch (const negative_betti_error&) {
                        alive[k] = false;
                    }
                }
            }
            report.row2_evidence.push_back(std::move(ev));

            PrintedRow1Evidence pev;
            pev.spec = spec;
            pev.p = p;
            pev.oracle_value = oracle.entry(p, 1);
            for (size_t k = 0; k < pkeys.size(); ++k) {
                const FormulaVariant v{pkeys[k].second, 3, pkeys[k].first};
                pev.printed[k] = printed_row1(spec, p, v);
            }
            report.printed_row1_evidence.push_back(std::move(pev));
        }
    }

    for (size_t k = 0; k < keys.size(); ++k) {
        if (!alive[k]) continue;
        report.surviving_q2.push_back(keys[k]);
        for (int s : {1, 2}) report.survivors.push_back(variant_from_key(keys[k], s));
    }
    if (report.surviving_q2.size() == 1) {
        // the q1 shift never enters table construction, so it stays
        // undetermined; report the default
        report.winning_variant = variant_from_key(report.surviving_q2.front());
        report.q1_shift_determined = false;
    }
    return report;
}

}  // namespace toricsyz
