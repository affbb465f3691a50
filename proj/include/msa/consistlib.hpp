#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "msa/seqcore.hpp"

namespace msa {

/// Weighted residue-pair constraints between sequences. Keys are
/// (A, B, i, j) with sequence indices A < B and 1-based positions; absent
/// pairs weigh zero and only positive weights are stored.
class ConstraintLibrary {
public:
    struct Key {
        std::uint32_t a, b, i, j;
        auto operator<=>(const Key&) const = default;
    };

    struct Partner {
        std::uint32_t seq;
        std::uint32_t pos; // 1-based
        double weight;
    };

    ConstraintLibrary() = default;
    ConstraintLibrary(std::vector<std::string> ids, std::vector<std::size_t> lengths);
    static ConstraintLibrary for_sequences(std::span<const Sequence> seqs);

    std::size_t num_sequences() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::vector<std::size_t>& lengths() const { return lengths_; }

    /// Adds `w` to the weight of residue i of sequence a paired with residue
    /// j of sequence b (either order). Non-positive weights are ignored.
    void add(std::size_t a, std::size_t i, std::size_t b, std::size_t j, double w);
    double weight(std::size_t a, std::size_t i, std::size_t b, std::size_t j) const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::map<Key, double>& entries() const { return entries_; }

    bool same_universe(const ConstraintLibrary& other) const {
        return ids_ == other.ids_ && lengths_ == other.lengths_;
    }

    /// Per residue, all partners in other sequences sorted by (seq, pos):
    /// index [seq][pos - 1].
    std::vector<std::vector<std::vector<Partner>>> partners() const;

private:
    std::vector<std::string> ids_;
    std::vector<std::size_t> lengths_;
    std::map<Key, double> entries_;
};

/// 100 x fractional identity of a two-row alignment.
double pair_weight(const Alignment& pair);

/// Adds every aligned residue pair of the two rows with the given weight.
void add_alignment_pairs(ConstraintLibrary& lib, std::size_t a, std::string_view row_a, std::size_t b,
                         std::string_view row_b, double weight);

/// Sum weights on shared keys, union otherwise. Throws on universe mismatch.
ConstraintLibrary merge_libraries(const ConstraintLibrary& x, const ConstraintLibrary& y);

struct PrimaryLibraries {
    ConstraintLibrary global;
    ConstraintLibrary local;
    ConstraintLibrary merged;
    /// Fractional identity of each pair's global alignment, [a][b].
    std::vector<std::vector<double>> global_identity;
};

/// One global and up to `topk` local alignments per sequence pair, each
/// weighted by pair_weight.
PrimaryLibraries build_primary_libraries(std::span<const Sequence> seqs, const SubstitutionMatrix& m,
                                         const GapModel& g, std::size_t topk);
ConstraintLibrary build_primary_library(std::span<const Sequence> seqs, const SubstitutionMatrix& m,
                                        const GapModel& g, std::size_t topk = 10);

struct ExtensionStats {
    std::uint64_t triplet_visits = 0; // (A_i, C_k, B_j) combinations examined
};

/// One round of triplet extension: each pair (A_i, B_j) gets its primary
/// weight plus, over every intermediate residue C_k linked to both, the
/// smaller of W(A_i, C_k) and W(C_k, B_j). Pairs first created through an
/// intermediate are included.
ConstraintLibrary extend_library(const ConstraintLibrary& lib, ExtensionStats* stats = nullptr);

std::string library_to_text(const ConstraintLibrary& lib);
ConstraintLibrary library_from_text(std::string_view text);

} // namespace msa
