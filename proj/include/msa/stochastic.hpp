#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "msa/rng.hpp"
#include "msa/seqcore.hpp"

namespace msa {

using Objective = std::function<double(const Alignment&)>;

struct GaParams {
    std::size_t population = 100;
    std::size_t generations = 2000;
    double crossover_prob = 0.8;
    double mutation_prob = 0.5; // per offspring
    std::size_t elitism = 2;
    std::size_t slack = 4; // extra columns allowed at initialization
    std::uint64_t seed = 1;

    void validate() const;
};

struct Individual {
    Alignment candidate;
    double fitness = 0.0;
};

/// Random gap placement padding every row to a shared width drawn from
/// [longest, longest + slack].
std::vector<Individual> ga_init(std::span<const Sequence> seqs, const GaParams& params, const Objective& objective,
                                Rng& rng);

/// Two roulette-wheel draws (with replacement) proportional to fitness,
/// shifted up when some fitness is negative; uniform if all are zero.
std::pair<std::size_t, std::size_t> ga_select(std::span<const Individual> population, Rng& rng);

/// Columns where both parents are gap-free and every row has used the same
/// number of residues in both; one is picked and the suffixes from it are
/// swapped. Parents are cloned when no such column exists.
std::vector<std::size_t> crossover_points(const Alignment& a, const Alignment& b);
std::pair<Alignment, Alignment> ga_crossover(const Alignment& a, const Alignment& b, Rng& rng);

/// Moves the residue at `column` into an adjacent gap of the same row (a
/// random side when both are gaps). Unchanged if neither neighbor is a gap.
std::string shift_residue(std::string_view row, std::size_t column, Rng& rng);

/// shift_residue on a random residue of a random row, then drops any
/// column left without residues.
Alignment ga_mutate(const Alignment& a, Rng& rng);

struct GaGeneration {
    std::size_t generation = 0;
    double best = 0.0; // best ever so far
    double mean = 0.0; // current population
};

struct GaResult {
    Individual best;
    std::vector<GaGeneration> trajectory; // entry 0 is the initial population
};

GaResult ga_run(std::span<const Sequence> seqs, const GaParams& params, const Objective& objective);
std::string ga_trajectory_to_tsv(std::span<const GaGeneration> t);

/// Score for a contact (xa, xb) in x aligned onto a contact (ya, yb) in y.
class ContactScorer {
public:
    virtual ~ContactScorer() = default;
    virtual double score(char xa, char xb, char ya, char yb) const = 0;
};

/// 400 x 400 table over ordered residue pairs. The text has a header row
/// of the 400 two-letter pair labels and one row per label.
class ContactTable : public ContactScorer {
public:
    static ContactTable parse(std::string_view text);
    double score(char xa, char xb, char ya, char yb) const override;

private:
    std::vector<double> table_; // (pair x) * 400 + (pair y)
    std::array<int, 256> index_{};
};

/// Residue contacts of each sequence as 0-based position pairs.
struct ContactMaps {
    std::vector<std::pair<std::size_t, std::size_t>> x;
    std::vector<std::pair<std::size_t, std::size_t>> y;
};

/// Lines "x i j" or "y i j" with 1-based positions; '#' starts a comment.
ContactMaps parse_contact_maps(std::string_view text);

struct SaParams {
    double t0 = 10.0;
    double alpha = 0.95;               // T <- alpha T after each block
    std::size_t steps_per_block = 0;   // 0 means 100 (n + m)
    std::size_t max_blocks = 100000;
    double w = 0.0;                    // contact weight
    double c = 0.0;                    // contact constant
    double p = 11.0;                   // gap open penalty
    double q = 1.0;                    // gap extension penalty
    double r = 0.0;                    // penalty per broken contact
    TerminalGaps terminal = TerminalGaps::free;
    bool random_start = false;
    std::uint64_t seed = 1;

    GapModel gaps() const { return GapModel{-p, -q, terminal}; }
    void validate() const;
};

/// -(sequence score + w (sum of contact scores + c) - r * broken contacts).
/// The contact part is present only when both a scorer and maps are given.
double sa_energy(const Alignment& a, const SubstitutionMatrix& m, const SaParams& params,
                 const ContactScorer* contacts = nullptr, const ContactMaps* maps = nullptr);

bool metropolis_accept(double dE, double T, Rng& rng);

/// One random move: shift a residue into an adjacent gap, split a residue
/// pair column into two gapped columns (while width < n + m), or merge two
/// adjacent complementary gapped columns.
Alignment sa_perturb(const Alignment& state, Rng& rng);

struct SaBlock {
    std::size_t block = 0;
    double temperature = 0.0;
    double energy = 0.0;      // at the end of the block
    double best_energy = 0.0;
    std::size_t accepted = 0;
};

struct SaResult {
    Alignment best;
    double best_energy = 0.0;
    double initial_energy = 0.0;
    std::vector<SaBlock> trajectory;
    std::size_t accepted = 0;
    std::string termination; // "unchanged-3-blocks", "frozen" or "max-blocks"
};

SaResult sa_run(const Sequence& x, const Sequence& y, const SubstitutionMatrix& m, const SaParams& params,
                const ContactScorer* contacts = nullptr, const ContactMaps* maps = nullptr);
std::string sa_trajectory_to_tsv(std::span<const SaBlock> t);

} // namespace msa
