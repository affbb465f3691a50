#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace msa {

inline constexpr char kGap = '-';
inline constexpr char kUnknownResidue = 'X';

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input.
class InputError : public Error {
public:
    using Error::Error;
};

// A configured resource limit (memory budget, enumeration bound) was hit.
class ResourceError : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    using Error::Error;
};

/// Ordered residue alphabet. 'X' is always accepted as an unknown residue
/// that scores 0 against everything; it is never one of the symbols.
class Alphabet {
public:
    explicit Alphabet(std::string symbols);

    static const Alphabet& protein();
    static const Alphabet& nucleotide();

    const std::string& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }

    /// Index of `c` in the alphabet, or -1 for 'X' and anything unknown.
    int index(char c) const { return lookup_[static_cast<unsigned char>(c)]; }
    bool accepts(char c) const { return index(c) >= 0 || c == kUnknownResidue; }

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::string symbols_;
    std::array<std::int16_t, 256> lookup_{};
};

struct Sequence {
    std::string id;
    std::string residues;

    Sequence() = default;
    Sequence(std::string id_, std::string residues_);

    std::size_t length() const { return residues.size(); }
    bool operator==(const Sequence&) const = default;
};

/// Removes gap symbols. Throws InputError when nothing is left.
std::string degap(std::string_view row);

/// Rectangular array of gapped rows. Construction only checks the shape;
/// gap-only columns are allowed transiently and removed by
/// `without_gap_columns`. `check_alignment` verifies the full invariant set.
class Alignment {
public:
    Alignment() = default;
    Alignment(std::vector<std::string> ids, std::vector<std::string> rows);

    std::size_t num_rows() const { return rows_.size(); }
    std::size_t width() const { return rows_.empty() ? 0 : rows_.front().size(); }

    const std::string& row(std::size_t k) const { return rows_[k]; }
    const std::string& id(std::size_t k) const { return ids_[k]; }
    const std::vector<std::string>& rows() const { return rows_; }
    const std::vector<std::string>& ids() const { return ids_; }

    bool column_is_gap_only(std::size_t col) const;
    bool has_gap_only_columns() const;
    Alignment without_gap_columns() const;

    /// Sub-alignment of the given rows (in the given order) with gap-only
    /// columns removed.
    Alignment project(std::span<const std::size_t> row_indices) const;

    /// Same rows reordered so that ids follow `order`.
    Alignment reordered(std::span<const std::string> order) const;

    std::vector<Sequence> sources() const;

    bool operator==(const Alignment&) const = default;

private:
    std::vector<std::string> ids_;
    std::vector<std::string> rows_;
};

/// Throws InputError unless `a` has one row per source (matching ids, in
/// order), every row degaps to its source, and no column is gap-only.
void check_alignment(const Alignment& a, std::span<const Sequence> sources);

enum class TerminalGaps { penalized, free };

/// Affine gap scores: a maximal run of L gaps scores open + (L - 1) * extend.
struct GapModel {
    double open = -11.0;
    double extend = -1.0;
    TerminalGaps terminal = TerminalGaps::free;

    static GapModel linear(double per_gap, TerminalGaps terminal = TerminalGaps::penalized) {
        return GapModel{per_gap, per_gap, terminal};
    }
    static GapModel zero() { return GapModel{0.0, 0.0, TerminalGaps::penalized}; }

    double run_cost(std::size_t length) const {
        return length == 0 ? 0.0 : open + static_cast<double>(length - 1) * extend;
    }
    void validate() const;
};

/// Symmetric residue-pair scores with background and joint frequencies.
///
/// Scores are also kept in a padded dense table of `stride()` columns where
/// slot `size()` stands for the unknown residue (all zeros), so profile code
/// can run the dot/axpy kernels straight over rows.
class SubstitutionMatrix {
public:
    /// `joint` may be empty, in which case p_ij is derived from the scores as
    /// p_i p_j exp(lambda S_ij), normalized to sum to one.
    SubstitutionMatrix(Alphabet alphabet, std::vector<double> scores, std::vector<double> background,
                       std::vector<double> joint = {});

    static SubstitutionMatrix blosum62();
    /// Whitespace table: header row of residue letters, then one row per
    /// residue starting with its letter. '#' starts a comment. Columns for
    /// 'X' and '*' are ignored. Background is uniform.
    static SubstitutionMatrix from_table(std::string_view text);
    static SubstitutionMatrix match_mismatch(const Alphabet& alphabet, double match, double mismatch);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return alphabet_.size(); }
    std::size_t stride() const { return stride_; }

    double score(int a, int b) const {
        return (a < 0 || b < 0) ? 0.0 : padded_[static_cast<std::size_t>(a) * stride_ + static_cast<std::size_t>(b)];
    }
    double score(char a, char b) const { return score(alphabet_.index(a), alphabet_.index(b)); }

    /// Slot in the padded layout: alphabet index, or size() for unknowns.
    std::size_t slot(char c) const {
        int i = alphabet_.index(c);
        return i < 0 ? size() : static_cast<std::size_t>(i);
    }
    std::span<const double> padded_row(std::size_t slot) const {
        return {padded_.data() + slot * stride_, stride_};
    }

    double background(int i) const { return background_[static_cast<std::size_t>(i)]; }
    double joint(int i, int j) const { return joint_[static_cast<std::size_t>(i) * size() + static_cast<std::size_t>(j)]; }
    /// Scale used when joint frequencies were derived (0 when supplied).
    double lambda() const { return lambda_; }
    bool integral() const { return integral_; }

private:
    Alphabet alphabet_;
    std::size_t stride_ = 0;
    std::vector<double> padded_;
    std::vector<double> background_;
    std::vector<double> joint_;
    double lambda_ = 0.0;
    bool integral_ = false;
};

/// "BLOSUM62" (case-insensitive) or a path to a matrix table file.
SubstitutionMatrix load_substitution_matrix(std::string_view name_or_path);

std::string read_file(const std::string& path);

/// Shortest decimal text that reads back to the same double.
std::string format_number(double v);
void write_file(const std::string& path, std::string_view content);

} // namespace msa
