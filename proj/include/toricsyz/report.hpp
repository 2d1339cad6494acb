#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "toricsyz/asymptotics.hpp"
#include "toricsyz/betti.hpp"
#include "toricsyz/koszul.hpp"

namespace toricsyz {

// Fixed 12-significant-digit float formatting; all CSV output is byte-stable
// across runs for identical inputs.
std::string format_double(double x);

void write_betti_table_text(std::ostream& os, const BettiTable& table);
void write_betti_table_csv(std::ostream& os, const BettiTable& table);

void write_row_csv(std::ostream& os, const RowDistribution& row);

// Figure data: both rows for each d, each row normalized by its maximum.
void write_figure_csv(std::ostream& os, long delta, const std::vector<long>& d_list,
                      const FormulaVariant& variant);

void write_clt_csv(std::ostream& os, const std::vector<CltSample>& samples);

void write_reconcile_text(std::ostream& os, const VariantReport& report);
void write_reconcile_csv(std::ostream& os, const VariantReport& report);

void write_theorem_report_text(std::ostream& os, const TheoremCheckReport& report);

}  // namespace toricsyz
