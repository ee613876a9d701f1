#include "quasi/suffix_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace quasi {

SuffixTree::SuffixTree(const Text& u) : SuffixTree(u, quasi::suffix_array(u)) {}

SuffixTree::SuffixTree(const Text& u, SuffixArrayBundle sa) : n_(u.size()), sa_(std::move(sa)) {
    if (sa_.SUF.size() != n_ || sa_.LCP.size() != n_)
        throw std::invalid_argument("suffix array does not match text");
    const auto cap = 2 * static_cast<std::size_t>(n_);
    for (auto* v : {&parent_, &first_child_, &last_child_, &next_sibling_, &depth_, &lb_, &rb_})
        v->reserve(cap);
    postorder_.reserve(cap);
    leaf_of_rank_.assign(static_cast<std::size_t>(n_) + 1, kNoNode);

    auto attach = [&](NodeId p, NodeId c) {
        parent_[c] = p;
        if (first_child_[p] == kNoNode) first_child_[p] = c;
        else next_sibling_[last_child_[p]] = c;
        last_child_[p] = c;
        postorder_.push_back(c);
    };

    // scan ranks left to right keeping the rightmost root-to-leaf path on a stack
    std::vector<NodeId> stack{add_node(0, 1)};
    for (Index r = 1; r <= n_; ++r) {
        NodeId last = add_node(n_ - sa_.SUF[r] + 1, r);
        leaf_of_rank_[r] = last;
        const Index h = r < n_ ? sa_.LCP[r + 1] : 0;
        while (depth_[stack.back()] > h) {
            const NodeId v = stack.back();
            stack.pop_back();
            attach(v, last);
            rb_[v] = r;
            last = v;
        }
        if (depth_[stack.back()] == h) {
            attach(stack.back(), last);
        } else {
            const NodeId v = add_node(h, lb_[last]);
            attach(v, last);
            stack.push_back(v);
        }
    }
    rb_[0] = n_;
    postorder_.push_back(0);

    first_.assign(depth_.size(), 0);
    last_.assign(depth_.size(), 0);
    for (NodeId v : postorder_) {
        if (first_child_[v] == kNoNode) {
            first_[v] = last_[v] = sa_.SUF[lb_[v]];
            continue;
        }
        Index lo = n_ + 1, hi = 0;
        for (NodeId c = first_child_[v]; c != kNoNode; c = next_sibling_[c]) {
            lo = std::min(lo, first_[c]);
            hi = std::max(hi, last_[c]);
        }
        first_[v] = lo;
        last_[v] = hi;
    }
}

NodeId SuffixTree::add_node(Index depth, Index lb) {
    const auto id = static_cast<NodeId>(depth_.size());
    parent_.push_back(kNoNode);
    first_child_.push_back(kNoNode);
    last_child_.push_back(kNoNode);
    next_sibling_.push_back(kNoNode);
    depth_.push_back(depth);
    lb_.push_back(lb);
    rb_.push_back(lb);
    return id;
}

std::size_t SuffixTree::at(NodeId v) const {
    if (v < 0 || v >= node_count()) throw std::out_of_range("node id out of range");
    return static_cast<std::size_t>(v);
}

std::vector<NodeId> SuffixTree::children(NodeId v) const {
    std::vector<NodeId> out;
    for (NodeId c = first_child(v); c != kNoNode; c = next_sibling_[c]) out.push_back(c);
    return out;
}

std::vector<Index> SuffixTree::leaf_list(NodeId v) const {
    std::vector<Index> out;
    out.reserve(static_cast<std::size_t>(leaf_count(v)));
    for (Index r = lb(v); r <= rb(v); ++r) out.push_back(sa_.SUF[r]);
    std::sort(out.begin(), out.end());
    return out;
}

NodeId SuffixTree::locus(FactorRef s) const {
    if (s.start < 1 || s.len < 1 || s.end() > n_) throw std::invalid_argument("factor out of range");
    NodeId w = leaf_of_suffix(s.start);
    while (parent_[w] != kNoNode && depth_[parent_[w]] >= s.len) w = parent_[w];
    return w;
}

HeaviestPath heaviest_path(const SuffixTree& t, NodeId v) {
    HeaviestPath hp;
    hp.path.push_back(v);
    while (!t.is_leaf(v)) {
        NodeId heavy = t.first_child(v);
        for (NodeId c = t.next_sibling(heavy); c != kNoNode; c = t.next_sibling(c))
            if (t.leaf_count(c) > t.leaf_count(heavy)) heavy = c;
        for (NodeId c = t.first_child(v); c != kNoNode; c = t.next_sibling(c))
            if (c != heavy) hp.hanging.push_back(c);
        hp.path.push_back(heavy);
        v = heavy;
    }
    return hp;
}

} // namespace quasi
