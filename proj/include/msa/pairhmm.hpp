#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "msa/seqcore.hpp"

namespace msa {

/// Three-state pair HMM: M emits an aligned pair, Ix emits x_i against a gap,
/// Iy emits y_j against a gap. There are no Ix <-> Iy transitions.
struct PairHmmParams {
    enum State : int { M = 0, Ix = 1, Iy = 2, Begin = 3 };

    /// trans[from][to] for from in {M, Ix, Iy, Begin}, to in {M, Ix, Iy};
    /// to_end[from] for the three emitting states.
    std::array<std::array<double, 3>, 4> trans{};
    std::array<double, 3> to_end{};

    const Alphabet* alphabet = nullptr;
    std::vector<double> match;  // K x K, symmetric
    std::vector<double> insert; // K

    std::size_t size() const { return insert.size(); }
    /// Throws InputError when a row does not sum to one or a value is outside [0, 1].
    void validate() const;
};

/// Emissions from the matrix's joint and background frequencies; transitions
/// from the gap-open and gap-extend probabilities and a small end probability.
PairHmmParams default_params(const SubstitutionMatrix& m, double gap_open = 0.02, double gap_extend = 0.6,
                             double end = 1e-3);

/// Sparse |x| by |y| posterior match probabilities; 0-based positions. Only
/// entries above `epsilon` are stored, each row sorted by column.
class PosteriorMatrix {
public:
    struct Entry {
        std::uint32_t col;
        double p;
    };

    PosteriorMatrix() = default;
    PosteriorMatrix(std::size_t rows, std::size_t cols, double epsilon)
        : rows_(rows), cols_(cols), epsilon_(epsilon), data_(rows) {}

    /// Keeps entries of a row-major dense table that exceed `epsilon`, clamped to 1.
    static PosteriorMatrix from_dense(std::size_t rows, std::size_t cols, std::span<const double> dense,
                                      double epsilon);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double epsilon() const { return epsilon_; }

    const std::vector<Entry>& row(std::size_t i) const { return data_[i]; }
    double at(std::size_t i, std::size_t j) const;
    std::size_t nonzeros() const;

    std::vector<double> to_dense() const;
    PosteriorMatrix transposed() const;

    void push(std::size_t i, std::uint32_t j, double p) { data_[i].push_back(Entry{j, p}); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    double epsilon_ = 0.0;
    std::vector<std::vector<Entry>> data_;
};

struct ForwardBackward {
    PosteriorMatrix posterior;
    double log_forward = 0.0;  // total log-probability from the forward pass
    double log_backward = 0.0; // same quantity from the backward pass
    std::vector<double> dense; // unthresholded posteriors, row-major
};

/// Log-space forward and backward passes. Throws NumericError if the total
/// probability is not finite.
ForwardBackward forward_backward(const Sequence& x, const Sequence& y, const PairHmmParams& params,
                                 double epsilon = 0.01);

struct MeaResult {
    Alignment alignment;
    double sum = 0.0;               // posterior mass of the aligned pairs
    double expected_accuracy = 0.0; // sum / min(|x|, |y|)
};

MeaResult mea_align(const PosteriorMatrix& p, const Sequence& x, const Sequence& y);

/// Posteriors for every unordered pair of a sequence set. `at(a, b)` is
/// oriented with a's residues as rows.
class PosteriorSet {
public:
    PosteriorSet() = default;
    explicit PosteriorSet(std::vector<std::size_t> lengths);

    std::size_t num_sequences() const { return lengths_.size(); }
    const std::vector<std::size_t>& lengths() const { return lengths_; }

    void set(std::size_t a, std::size_t b, PosteriorMatrix p);
    bool has(std::size_t a, std::size_t b) const;
    /// Throws InputError when the pair is missing.
    const PosteriorMatrix& upper(std::size_t a, std::size_t b) const;
    PosteriorMatrix at(std::size_t a, std::size_t b) const;

private:
    std::size_t index(std::size_t a, std::size_t b) const;
    std::vector<std::size_t> lengths_;
    std::vector<PosteriorMatrix> pairs_;
    std::vector<char> present_;
};

PosteriorSet compute_posteriors(std::span<const Sequence> seqs, const PairHmmParams& params, double epsilon);

/// P'_xy = (1/|S|) sum over z in S of P_xz P_zy, with P_xx the identity,
/// repeated `rounds` times. Entries at or below epsilon are dropped after
/// each round and the rest clamped to 1.
PosteriorSet consistency_transform(const PosteriorSet& in, double epsilon, std::size_t rounds = 1);

/// E(x, y) from mea_align of each pair; the diagonal is 1.
std::vector<std::vector<double>> expected_accuracy_table(const PosteriorSet& posteriors,
                                                         std::span<const Sequence> seqs);
std::vector<std::vector<double>> expected_accuracy_table(std::span<const Sequence> seqs,
                                                         const PairHmmParams& params, double epsilon = 0.01);

/// "POSTERIOR rows cols epsilon" header then "i j p" lines, 1-based.
std::string posterior_to_text(const PosteriorMatrix& p);
PosteriorMatrix posterior_from_text(std::string_view text);

} // namespace msa
