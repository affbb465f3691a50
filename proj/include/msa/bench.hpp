#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msa/pipelines.hpp"

namespace msa {

struct BenchCase {
    std::string id;
    std::string tier; // text before the first '-' of the id
    std::vector<Sequence> seqs;
    Alignment reference;
};

/// Every <id>.fa in `dir` with its <id>.ref.fa, sorted by id. Throws
/// InputError for an empty corpus or a missing reference.
std::vector<BenchCase> load_corpus(const std::string& dir, const Alphabet& alphabet);

struct BenchRecord {
    std::string case_id;
    std::string tier;
    std::string strategy;
    double q = 0.0;
    double wall_seconds = 0.0;
    std::string digest;
};

/// Strategies that apply to a case: sa only on pairs, exact3 only on triples.
bool strategy_applies(Strategy s, std::size_t n);

/// Also checks every output against the alignment invariants.
std::vector<BenchRecord> run_bench(std::span<const BenchCase> cases, std::span<const Strategy> strategies,
                                   const SubstitutionMatrix& m, const PipelineConfig& cfg);

/// Rows padded with uniformly placed gaps to a width of 1.25 x the longest.
Alignment random_gap_alignment(std::span<const Sequence> seqs, std::uint64_t seed);
std::vector<BenchRecord> random_baseline(std::span<const BenchCase> cases, std::uint64_t seed);

struct BenchSummary {
    std::string strategy;
    std::string tier; // "all" for the overall mean
    double mean_q = 0.0;
    std::size_t cases = 0;
};

std::vector<BenchSummary> summarize(std::span<const BenchRecord> records);

/// Records then summaries as tab-separated text. Wall times are printed
/// only when `timing` is set, so the default output is reproducible.
std::string bench_to_tsv(std::span<const BenchRecord> records, bool timing);

std::string fnv1a_hex(std::string_view text);

} // namespace msa
