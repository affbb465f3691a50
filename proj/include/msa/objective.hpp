#pragma once

#include <span>
#include <string_view>

#include "msa/seqcore.hpp"

namespace msa {

/// Scores one alignment column as the sum over all unordered entry pairs.
class ColumnScorer {
public:
    ColumnScorer(const SubstitutionMatrix& matrix, double gap_vs_residue)
        : matrix_(&matrix), gap_vs_residue_(gap_vs_residue) {}

    const SubstitutionMatrix& matrix() const { return *matrix_; }
    double gap_vs_residue() const { return gap_vs_residue_; }

    double pair(char a, char b) const {
        if (a == kGap) {
            return b == kGap ? 0.0 : gap_vs_residue_;
        }
        if (b == kGap) {
            return gap_vs_residue_;
        }
        return matrix_->score(a, b);
    }

private:
    const SubstitutionMatrix* matrix_;
    double gap_vs_residue_;
};

/// Throws InputError for fewer than two entries or an all-gap column.
double column_delta(std::string_view letters, const ColumnScorer& scorer);

/// Substitution scores over residue-residue columns plus an affine penalty per
/// maximal gap run in either row. Columns where both rows are gaps are
/// skipped. Runs touching either end are free under TerminalGaps::free.
double pair_alignment_score(std::string_view row_a, std::string_view row_b, const SubstitutionMatrix& m,
                            const GapModel& g);
double pair_alignment_score(const Alignment& a, const SubstitutionMatrix& m, const GapModel& g);

/// Sum over all row pairs of pair_alignment_score.
double sp_score(const Alignment& a, const SubstitutionMatrix& m, const GapModel& g);

/// Number of columns holding the same residue in both rows.
double ga_cost(std::string_view s, std::string_view t);

/// Sum of ga_cost over all row pairs.
double ga_fitness(const Alignment& a);

/// Fraction of residue pairs aligned in `reference` that are also aligned in
/// `test`. Rows are matched by id; both must hold the same sequences.
double q_score(const Alignment& test, const Alignment& reference);

} // namespace msa
