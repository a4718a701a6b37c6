#pragma once

#include "monicrep/exactlin.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monicrep::quiver {

struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;
};

// Finite directed multigraph. Loops and parallel arrows are representable;
// operations that need acyclicity check it themselves.
class Quiver {
public:
    Quiver(std::vector<std::string> vertex_labels, std::vector<Arrow> arrows);

    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::string& vertex_label(std::size_t i) const { return labels_[i]; }
    std::size_t vertex_index(const std::string& label) const;
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(std::size_t i) const { return arrows_[i]; }
    std::size_t arrow_index(const std::string& name) const;

    // Arrow indices with the given endpoint, sorted by arrow name.
    std::vector<std::size_t> arrows_into(std::size_t vertex) const;
    std::vector<std::size_t> arrows_out_of(std::size_t vertex) const;

    bool operator==(const Quiver& o) const;

private:
    std::vector<std::string> labels_;
    std::vector<Arrow> arrows_;
};

// Composable arrow sequence, first-applied first; a trivial path is an empty
// sequence pinned to its vertex.
class Path {
public:
    static Path trivial(const Quiver& q, std::size_t vertex);
    Path(const Quiver& q, std::vector<std::size_t> arrow_indices);

    std::size_t length() const { return arrows_.size(); }
    bool is_trivial() const { return arrows_.empty(); }
    std::size_t source() const { return source_; }
    std::size_t target() const { return target_; }
    const std::vector<std::size_t>& arrow_indices() const { return arrows_; }

    // p.then(alpha): extend by one arrow at the target end.
    Path then(const Quiver& q, std::size_t arrow_index) const;
    // Composition q_path after this (this first); targets/sources must meet.
    Path composed_with(const Quiver& q, const Path& later) const;

    std::vector<std::string> arrow_names(const Quiver& q) const;
    std::string display(const Quiver& q) const;

    bool operator==(const Path& o) const {
        return source_ == o.source_ && target_ == o.target_ && arrows_ == o.arrows_;
    }
    bool operator<(const Path& o) const {
        if (arrows_.size() != o.arrows_.size()) return arrows_.size() < o.arrows_.size();
        if (arrows_ != o.arrows_) return arrows_ < o.arrows_;
        return source_ < o.source_;
    }

private:
    Path() = default;
    std::size_t source_ = 0, target_ = 0;
    std::vector<std::size_t> arrows_;
};

// A k-combination of parallel paths (all terms share source and target).
struct RelationElement {
    struct Term {
        exactlin::Scalar coeff;
        Path path;
    };
    std::vector<Term> terms;

    RelationElement(const Quiver& q, std::vector<Term> terms); // checks parallelism
};

bool is_acyclic(const Quiver& q);

// Relabeling perm[old] = new (0-based) with label(source) > label(target) for
// every arrow; the last vertex is a source. Throws CyclicQuiver.
std::vector<std::size_t> topological_label(const Quiver& q);
bool is_topologically_labeled(const Quiver& q);
// Quiver with vertices reordered so that index i holds the vertex with new
// label i under perm.
Quiver apply_vertex_permutation(const Quiver& q, const std::vector<std::size_t>& perm);

// All paths j -> i in lexicographic arrow-name order (trivial path included
// when i == j). Unbounded enumeration requires acyclicity.
std::vector<Path> paths_between(const Quiver& q, std::size_t j, std::size_t i,
                                std::optional<std::size_t> max_len = std::nullopt);

// counts[j][i] = number of paths j -> i; requires acyclicity.
std::vector<std::vector<long long>> path_count_matrix(const Quiver& q);

struct TensorQuiverResult {
    Quiver product;
    std::vector<RelationElement> relations;
    // index maps: vertex (i, t') and the two arrow families
    std::vector<std::vector<std::size_t>> vertex_index;       // [i][t']
    std::vector<std::vector<std::size_t>> left_arrow_index;   // [alpha][t']
    std::vector<std::vector<std::size_t>> right_arrow_index;  // [i][beta']
};

// Product quiver with one commutativity relation per arrow pair; optional
// bound presentations contribute their lifted generators.
TensorQuiverResult tensor_quiver(const Quiver& q, const Quiver& q2,
                                 const std::vector<RelationElement>* rel_q = nullptr,
                                 const std::vector<RelationElement>* rel_q2 = nullptr,
                                 const exactlin::Field* lift_field = nullptr);

// The tensor of two bound quivers is hereditary iff one factor is a pure
// vertex set and the other carries no relations.
bool tensor_hereditary_check(const Quiver& qa, const std::vector<RelationElement>& rel_a,
                             const Quiver& qb, const std::vector<RelationElement>& rel_b);

} // namespace monicrep::quiver
