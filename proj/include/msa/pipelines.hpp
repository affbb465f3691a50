#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msa/exactdp.hpp"
#include "msa/guidetree.hpp"
#include "msa/progressive.hpp"
#include "msa/refine.hpp"
#include "msa/stochastic.hpp"

namespace msa {

enum class Strategy { exact3, muscle, tcoffee, probcons, ga, sa };
enum class TreeMethod { upgma, nj };

/// Accepts exact3, progressive-muscle (or muscle), tcoffee, probcons, ga, sa.
Strategy parse_strategy(std::string_view name);
const char* strategy_name(Strategy s);
TreeMethod parse_tree_method(std::string_view name);
const char* tree_method_name(TreeMethod t);

struct PipelineConfig {
    Strategy strategy = Strategy::probcons;
    GapModel gap{};
    std::uint64_t seed = 1;

    // MUSCLE-style
    TreeMethod tree = TreeMethod::upgma;
    std::size_t kmer_length = 4;
    std::size_t stage2_max_iterations = 2;
    std::size_t refine_sweeps = 16;
    bool scale_profile_gaps = true;

    // T-Coffee-style
    std::size_t local_hits = 10;

    // ProbCons-style
    double hmm_gap_open = 0.02;
    double hmm_gap_extend = 0.6;
    double hmm_end = 1e-3;
    double posterior_epsilon = 0.01;
    std::size_t consistency_rounds = 1;
    std::size_t refine_rounds = 100;
    bool refine_accept_if_improved = false; // SP objective when set

    // Exact three-way
    std::size_t exact_memory_budget = std::size_t{512} << 20;

    GaParams ga{};
    SaParams sa{};
    // Optional contact term for sa; not part of canonical().
    std::shared_ptr<const ContactScorer> sa_contacts;
    ContactMaps sa_contact_maps;

    /// Canonical "key=value" lines covering every field, used for digests.
    std::string canonical() const;
};

struct PipelineResult {
    Alignment alignment; // rows in input order
    GuideTree tree;      // final guide tree (absent for exact3/ga/sa)
    bool has_tree = false;
    std::optional<double> score; // objective reported by exact3 and sa
    std::size_t stage2_iterations = 0;
    std::vector<std::size_t> stage2_changed;
    RefineReport refine;
    bool has_refine = false;
    std::string trace_tsv; // refinement or search trajectory
};

PipelineResult muscle_pipeline(std::span<const Sequence> seqs, const SubstitutionMatrix& m, const PipelineConfig& cfg);
PipelineResult tcoffee_pipeline(std::span<const Sequence> seqs, const SubstitutionMatrix& m,
                                const PipelineConfig& cfg);
PipelineResult probcons_pipeline(std::span<const Sequence> seqs, const SubstitutionMatrix& m,
                                 const PipelineConfig& cfg);

/// Dispatches on cfg.strategy. Throws InputError when the strategy does not
/// fit the number of sequences (exact3 needs 3, sa needs 2, others >= 2).
PipelineResult run_pipeline(std::span<const Sequence> seqs, const SubstitutionMatrix& m, const PipelineConfig& cfg);

/// Guide tree a strategy would use for the input (muscle stage 1,
/// tcoffee NJ, probcons similarity clustering).
GuideTree strategy_tree(std::span<const Sequence> seqs, const SubstitutionMatrix& m, const PipelineConfig& cfg);

} // namespace msa
