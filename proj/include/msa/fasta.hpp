#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "msa/seqcore.hpp"

namespace msa {

enum class AlignmentFormat { aligned_fasta, clustal };

AlignmentFormat parse_format_name(std::string_view name);

/// Records in input order; residues are uppercased and whitespace dropped.
/// Throws InputError on an empty record, a residue outside `alphabet`
/// (other than 'X'), a gap symbol, or a repeated id.
std::vector<Sequence> parse_fasta(std::string_view text, const Alphabet& alphabet);

/// Gapped FASTA ('.' is read as a gap). Rows must share one width.
Alignment parse_aligned_fasta(std::string_view text, const Alphabet& alphabet);

/// Block format written by emit_alignment(..., clustal).
Alignment parse_clustal(std::string_view text, const Alphabet& alphabet);

/// Picks the parser from the first non-blank character.
Alignment parse_alignment(std::string_view text, const Alphabet& alphabet);

/// Aligned FASTA puts each row on one line. The clustal-like format writes a
/// header line, then blocks of 60 columns: id padded to the longest id, two
/// spaces, the row slice; blocks are separated by a blank line.
std::string emit_alignment(const Alignment& a, AlignmentFormat format);

inline constexpr std::size_t kClustalBlockWidth = 60;

} // namespace msa
