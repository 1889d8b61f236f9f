#ifndef MODFORMS_REPORT_HPP
#define MODFORMS_REPORT_HPP

#include <modforms/caselaw.hpp>

#include <string>
#include <vector>

namespace modforms {

// Smallest concrete wt(g) >= 4 in the residue class (12 for residue 0,
// 14 for residue 2); also the y-position of the class in the figure.
int residue_representative(int wtg_residue);

// CSV with header wtf,wtg_residue,n,dim_relation,theorem_case, rows sorted
// ascending by (wtf, residue, n). Deterministic, byte-stable across runs.
std::string records_csv(std::vector<CaseRecord> records);

// Fixed-width text table of the same rows plus a "<count> classes" footer.
std::string records_table(std::vector<CaseRecord> records);

// Standalone SVG 1.1, 800x600: one circle per record, positioned by
// (wtf, residue representative), radius 3 + 2n px, 5-step grayscale keyed
// to n. Larger circles are emitted first so stacked classes stay visible.
std::string records_svg(std::vector<CaseRecord> records);

} // namespace modforms

#endif
