#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "msa/objective.hpp"
#include "msa/seqcore.hpp"

namespace msa {

struct PairAlignment {
    Alignment alignment;
    double score = 0.0;
};

/// Optimal global alignment under affine gaps (Gotoh). Ties prefer a match
/// column, then a gap in y, then a gap in x.
PairAlignment align_pair_global(const Sequence& x, const Sequence& y, const SubstitutionMatrix& m,
                                const GapModel& g);

struct LocalHit {
    // Half-open, 0-based residue intervals.
    std::size_t x_begin = 0, x_end = 0;
    std::size_t y_begin = 0, y_end = 0;
    double score = 0.0;
    std::size_t rank = 0; // 0 for the best hit
    std::string row_x, row_y;
    std::vector<std::pair<std::size_t, std::size_t>> pairs; // aligned residue positions
};

/// Up to `k` best non-intersecting local alignments: repeated Smith-Waterman,
/// each round forbidding every residue covered by an earlier hit.
std::vector<LocalHit> align_pair_local_topk(const Sequence& x, const Sequence& y, const SubstitutionMatrix& m,
                                            const GapModel& g, std::size_t k);

/// Predecessor moves of the three-sequence recurrence, numbered as in the
/// usual listing: 1 = (i-1,j,k), 2 = (i,j-1,k), 3 = (i,j,k-1),
/// 4 = (i-1,j-1,k), 5 = (i-1,j,k-1), 6 = (i,j-1,k-1), 7 = (i-1,j-1,k-1).
/// Bit (t - 1) enables term t.
inline constexpr std::uint8_t kAllThreeWayMoves = 0x7F;

struct ThreeWayOptions {
    std::size_t memory_budget_bytes = std::size_t{512} << 20;
    std::uint8_t moves = kAllThreeWayMoves;
};

struct ThreeWayResult {
    Alignment alignment;
    double score = 0.0;
};

/// Exact three-sequence alignment over the full (|u|+1)(|v|+1)(|w|+1) table.
/// Ties prefer term 7, then 4, 5, 6, then 1, 2, 3. Throws ResourceError when
/// the table would exceed the memory budget. If the enabled moves cannot
/// reach the far corner the score is -infinity and the alignment is empty.
ThreeWayResult align_three(const Sequence& u, const Sequence& v, const Sequence& w, const ColumnScorer& scorer,
                           const ThreeWayOptions& options = {});

enum class PathStep : std::uint8_t { both, x_only, y_only };

struct MaxSumPath {
    double total = 0.0;
    std::vector<PathStep> steps; // left to right
};

/// Gap-free-cost alignment of an n x m row-major gain table:
/// A(i,j) = max{A(i-1,j-1) + gain(i,j), A(i-1,j), A(i,j-1)} with zero borders.
/// Ties prefer the diagonal, then consuming x alone, then y alone.
MaxSumPath max_sum_path(std::size_t n, std::size_t m, std::span<const double> gain);

/// Lays two gapped strings out along a path.
std::pair<std::string, std::string> rows_from_path(std::string_view x, std::string_view y,
                                                   std::span<const PathStep> steps);

struct EnumerationLimits {
    std::size_t max_pair_length = 7;
    std::size_t max_triple_length = 5;
};

/// Brute force over every gapped arrangement of 2 or 3 sequences without
/// gap-only columns. Returns the best sum of column_delta.
double enumerate_optimal(std::span<const Sequence> xs, const ColumnScorer& scorer, EnumerationLimits limits = {});

/// Same enumeration, scoring each materialized alignment with `objective`.
double enumerate_optimal(std::span<const Sequence> xs, const std::function<double(const Alignment&)>& objective,
                         EnumerationLimits limits = {});

/// Calls `visit` on every arrangement (2 or 3 sequences, within limits).
void enumerate_alignments(std::span<const Sequence> xs, const std::function<void(const Alignment&)>& visit,
                          EnumerationLimits limits = {});

} // namespace msa
