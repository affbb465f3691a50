#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msa/seqcore.hpp"

namespace msa {

struct MutationRates {
    double substitution = 0.03;
    double insertion = 0.005; // per ancestral position
    double deletion = 0.005;
};

struct SynthCase {
    std::string id;
    std::vector<Sequence> seqs;
    Alignment reference; // the generating alignment
};

/// Star phylogeny: every sequence is a mutated copy of one random ancestor
/// drawn from the matrix background. Inserted residues get columns of their
/// own, so the reference aligns exactly the residues sharing an ancestor.
SynthCase synth_case(const std::string& id, std::size_t n, std::size_t ancestor_length, const MutationRates& rates,
                     const SubstitutionMatrix& m, std::uint64_t seed);

struct SynthTier {
    std::string name;
    MutationRates rates;
};

/// easy (about 3% substitutions), medium and hard.
std::vector<SynthTier> default_tiers();

/// The bundled corpus: per tier one pair, one triple and two five-sequence
/// cases.
std::vector<SynthCase> default_corpus(const SubstitutionMatrix& m, std::uint64_t seed = 20240601);

/// Writes <id>.fa and <id>.ref.fa into `dir`.
void write_corpus(const std::vector<SynthCase>& cases, const std::string& dir);

} // namespace msa
