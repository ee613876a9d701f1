#pragma once

#include <span>
#include <vector>

#include "quasi/suffix_array.hpp"
#include "quasi/types.hpp"

namespace quasi {

using NodeId = Index;
inline constexpr NodeId kNoNode = -1;

/// Suffix tree of u with explicit nodes only, built from the suffix array and
/// LCP array. Every node v covers the rank interval [lb(v), rb(v)] of the
/// suffix array, so LL(v) = { SUF[r] : lb(v) <= r <= rb(v) }.
///
/// No terminator is stored. A suffix that is a prefix of another suffix ends
/// at a leaf whose depth equals its parent's depth; every other edge strictly
/// increases the string depth.
class SuffixTree {
public:
    explicit SuffixTree(const Text& u);
    SuffixTree(const Text& u, SuffixArrayBundle sa);

    Index text_size() const noexcept { return n_; }
    Index node_count() const noexcept { return static_cast<Index>(depth_.size()); }
    NodeId root() const noexcept { return 0; }

    NodeId parent(NodeId v) const { return parent_[at(v)]; }
    Index depth(NodeId v) const { return depth_[at(v)]; }
    Index lb(NodeId v) const { return lb_[at(v)]; }
    Index rb(NodeId v) const { return rb_[at(v)]; }
    Index leaf_count(NodeId v) const { return rb_[at(v)] - lb_[at(v)] + 1; }
    Index first(NodeId v) const { return first_[at(v)]; }
    Index last(NodeId v) const { return last_[at(v)]; }

    bool is_leaf(NodeId v) const { return first_child_[at(v)] == kNoNode; }
    /// Start position of the suffix ending at leaf v; 0 for internal nodes.
    Index suffix(NodeId v) const { return is_leaf(v) ? sa_.SUF[lb(v)] : 0; }

    NodeId first_child(NodeId v) const { return first_child_[at(v)]; }
    NodeId next_sibling(NodeId v) const { return next_sibling_[at(v)]; }
    /// Children in lexicographic order of their edge labels.
    std::vector<NodeId> children(NodeId v) const;

    NodeId leaf_of_rank(Index r) const { return leaf_of_rank_[static_cast<std::size_t>(r)]; }
    NodeId leaf_of_suffix(Index p) const { return leaf_of_rank(sa_.rank[p]); }

    /// Nodes with every child listed before its parent; the root comes last.
    std::span<const NodeId> postorder() const noexcept { return postorder_; }

    /// Sorted leaf list LL(v). O(leaf_count log leaf_count).
    std::vector<Index> leaf_list(NodeId v) const;

    /// The shortest explicit node w such that s is a prefix of w.
    /// Occ(s) = LL(w). O(tree depth).
    NodeId locus(FactorRef s) const;

    const SuffixArrayBundle& suffix_array() const noexcept { return sa_; }

private:
    std::size_t at(NodeId v) const;
    NodeId add_node(Index depth, Index lb);

    Index n_ = 0;
    SuffixArrayBundle sa_;
    std::vector<NodeId> parent_, first_child_, last_child_, next_sibling_;
    std::vector<Index> depth_, lb_, rb_, first_, last_;
    std::vector<NodeId> leaf_of_rank_;
    std::vector<NodeId> postorder_;
};

/// A heaviest path from a subtree root together with its hanging subtrees.
struct HeaviestPath {
    std::vector<NodeId> path;     // root of the subtree first, ends at a leaf
    std::vector<NodeId> hanging;  // roots of subtrees attached to path nodes
};

/// Descends from v, each time into the child with most leaves (the first in
/// lexicographic order on ties). Each hanging subtree has at most half of
/// the leaves of v.
HeaviestPath heaviest_path(const SuffixTree& t, NodeId v);

} // namespace quasi
