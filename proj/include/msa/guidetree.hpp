#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msa/seqcore.hpp"

namespace msa {

/// Symmetric, non-negative, zero-diagonal distances.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) {
        d_[i * n_ + j] = v;
        d_[j * n_ + i] = v;
    }
    /// Throws InputError if any invariant fails.
    void validate() const;

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

/// Rooted binary tree. Nodes 0..n-1 are leaves (node i holds sequence i);
/// internal nodes follow in creation order and the root is the last one.
struct GuideTree {
    struct Node {
        int left = -1;
        int right = -1;
        int parent = -1;
        double height = 0.0;
        double branch = 0.0; // length of the edge to the parent
        bool is_leaf() const { return left < 0; }
    };

    std::vector<Node> nodes;
    int root = -1;

    std::size_t num_leaves() const { return (nodes.size() + 1) / 2; }

    /// Leaves under `node`, ascending.
    std::vector<int> leaves_under(int node) const;
    /// Internal nodes children-first.
    std::vector<int> postorder() const;
    /// Number of edges between the root and `node`.
    int depth(int node) const;

    /// Throws InputError unless the tree has n leaves, n - 1 binary internal
    /// nodes and consistent parent links.
    void validate(std::size_t n) const;
};

/// Two-leaf tree, or a leaf-only tree when n = 1.
GuideTree trivial_tree(std::size_t n, double distance = 0.0);

double kmer_similarity(std::string_view x, std::string_view y, std::size_t k);
double fractional_identity(std::string_view row_a, std::string_view row_b);
double fractional_identity(const Alignment& pair);

/// d = -ln(1 - p - p^2/5) with p = 1 - D, clamped where the argument falls
/// to 0.05 or below.
double kimura_distance(double identity);
double similarity_to_distance(double similarity);

DistanceMatrix kmer_distances(std::span<const Sequence> seqs, std::size_t k);
/// Kimura distances from the pairwise projections of a multiple alignment.
DistanceMatrix kimura_distances(const Alignment& a);

GuideTree upgma(const DistanceMatrix& d);
/// Neighbor joining, rooted at the midpoint of the longest leaf-to-leaf path.
GuideTree neighbor_joining(const DistanceMatrix& d);

/// Agglomerates by highest similarity; cluster similarity is the size-weighted
/// average of member similarities. Node height is 1 - similarity.
GuideTree similarity_clustering(const std::vector<std::vector<double>>& similarity);

/// Internal nodes of `fresh` whose subtree differs from every subtree of
/// `old` (compared as leaf-set partitions, ignoring child order).
std::set<int> compare_trees(const GuideTree& old, const GuideTree& fresh);

/// Edges of the unrooted tree keyed by the leaf set on the side not holding
/// leaf 0 (ascending leaf list); the two root edges are merged.
std::map<std::vector<int>, double> unrooted_splits(const GuideTree& t);

/// Rooted clades (leaf sets) of all internal nodes.
std::set<std::vector<int>> clades(const GuideTree& t);

std::string to_newick(const GuideTree& t, std::span<const std::string> names);

std::string distances_to_tsv(const DistanceMatrix& d, std::span<const std::string> names);
DistanceMatrix distances_from_tsv(std::string_view text, std::vector<std::string>* names = nullptr);

} // namespace msa
