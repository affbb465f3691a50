#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "msa/guidetree.hpp"
#include "msa/progressive.hpp"
#include "msa/seqcore.hpp"

namespace msa {

enum class Termination { all_edges_clean, max_iterations, rounds_exhausted };

const char* termination_name(Termination t);

struct RefineReport {
    std::size_t iterations = 0; // sweeps or rounds run
    std::size_t accepted = 0;
    std::size_t edges_visited = 0;
    // Objective of the starting alignment, then after each accepted move.
    // Always-accept random refinement records the merge's DP score instead
    // (the start entry is then 0).
    std::vector<double> trajectory;
    Termination termination = Termination::max_iterations;
};

/// "step<TAB>score" rows, step 0 being the start.
std::string refine_report_to_tsv(const RefineReport& r);

struct RefineResult {
    Alignment alignment;
    RefineReport report;
};

/// Child node of every tree edge in visiting order: deepest first, ties by
/// the child's leaf list.
std::vector<int> refinement_edge_order(const GuideTree& tree);

/// Row r of `a` must be leaf r of the tree. Each sweep cuts every edge, realigns
/// the two sides with PSP profile alignment and keeps the result only when
/// the SP score goes up. Stops after a sweep with no accepted move or after
/// `max_iterations` sweeps.
RefineResult bipartition_refine(const Alignment& a, const GuideTree& tree, const SubstitutionMatrix& m,
                                const GapModel& g, std::size_t max_iterations,
                                const ProfileAlignOptions& options = {});

/// Rows of `a` must be in input order (the table looks sequences up by row).
/// Each round splits the rows by fair coin flips, redrawing until both sides
/// are non-empty, and realigns the two sides. Without `objective` every
/// realignment is kept; with it, only strict improvements are.
RefineResult random_partition_refine(const Alignment& a, const ColumnTable& table, const GapModel& g,
                                     const SubstitutionMatrix& m, std::size_t rounds, std::uint64_t seed,
                                     const std::function<double(const Alignment&)>& objective = {},
                                     const ProfileAlignOptions& options = {});

} // namespace msa
