#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "msa/consistlib.hpp"
#include "msa/guidetree.hpp"
#include "msa/pairhmm.hpp"
#include "msa/seqcore.hpp"

namespace msa {

/// Column frequencies of a sub-alignment. Residue slots follow the matrix's
/// padded layout (the unknown residue has its own slot), so each column has
/// `stride` entries. `seq_index[r]` is the input index of member row r.
struct Profile {
    Alignment members;
    std::vector<std::size_t> seq_index;
    std::size_t stride = 0;
    std::vector<double> freq; // width x stride
    std::vector<double> gap;  // width

    std::size_t width() const { return members.width(); }
    std::span<const double> column(std::size_t c) const { return {freq.data() + c * stride, stride}; }
};

/// Weights must be non-negative with a positive sum; empty means uniform.
Profile build_profile(const Alignment& a, std::span<const std::size_t> seq_index, const SubstitutionMatrix& m,
                      std::span<const double> weights = {});

/// sum_i sum_j f1_i f2_j S_ij
double psp_score(std::span<const double> col1, std::span<const double> col2, const SubstitutionMatrix& m);

/// Row-major width1 x width2 table of column-pair scores.
using ColumnTable = std::function<std::vector<double>(const Profile&, const Profile&)>;

ColumnTable psp_table(const SubstitutionMatrix& m);
/// Average library weight over member row pairs.
ColumnTable library_table(const ConstraintLibrary& lib);
/// Summed posteriors over member row pairs.
ColumnTable posterior_table(const PosteriorSet& posteriors);

struct ProfileAlignOptions {
    // Scale gap penalties against a column by (1 - its gap frequency).
    bool scale_gaps = true;
};

struct ProfileMerge {
    Alignment alignment; // rows of p1 then rows of p2
    std::vector<std::size_t> seq_index;
    double score = 0.0;
};

/// Global DP over profile columns. With a zero gap model this is the
/// max-sum recurrence; otherwise affine with the same terminal rules and tie
/// order as align_pair_global.
ProfileMerge profile_align(const Profile& p1, const Profile& p2, const ColumnTable& table, const GapModel& g,
                           const ProfileAlignOptions& options = {});

struct ProgressiveResult {
    Alignment alignment;              // rows in input order
    std::vector<Alignment> nodes;     // per tree node, rows in leaf order
    std::vector<std::vector<std::size_t>> node_rows; // input index of each row
    std::size_t realigned = 0;        // internal nodes aligned afresh
};

/// Alignments of unchanged subtrees from an earlier run, keyed by leaf set.
struct SubtreeReuse {
    const ProgressiveResult* previous = nullptr;
    const GuideTree* previous_tree = nullptr;
    std::set<int> changed; // nodes of the new tree that must be realigned
};

ProgressiveResult progressive_align(std::span<const Sequence> seqs, const GuideTree& tree, const ColumnTable& table,
                                    const GapModel& g, const SubstitutionMatrix& m,
                                    const ProfileAlignOptions& options = {}, const SubtreeReuse* reuse = nullptr);

} // namespace msa
