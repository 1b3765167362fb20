#pragma once

// Crystal structures B_e (finite e) and B_inf via the signature rule on
// addable/removable i-nodes.

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "fock.hpp"

namespace fockcb {

/// The reduced i-signature: p leading addables then q trailing removables,
/// both ascending under <_s.
struct ReducedWord {
    std::vector<Node> addable;
    std::vector<Node> removable;
};

inline ReducedWord reduced_word(const Multipartition& lam, Modulus e, int i, const Multicharge& s) {
    struct Letter {
        Node node;
        bool addable;
    };
    std::vector<Letter> word;
    for (const auto& g : addable_nodes(lam, s, e, i)) word.push_back({g, true});
    for (const auto& g : removable_nodes(lam, s, e, i)) word.push_back({g, false});
    std::sort(word.begin(), word.end(), [&](const Letter& a, const Letter& b) { return node_less(a.node, b.node, s); });

    // A removable immediately followed by an addable cancels; a stack does
    // the repeated deletion in one pass.
    std::vector<Letter> stack;
    for (const auto& l : word) {
        if (l.addable && !stack.empty() && !stack.back().addable)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    ReducedWord w;
    for (const auto& l : stack) (l.addable ? w.addable : w.removable).push_back(l.node);
    return w;
}

/// Rightmost addable node of the reduced word.
inline std::optional<Node> good_node(const Multipartition& lam, Modulus e, int i, const Multicharge& s) {
    auto w = reduced_word(lam, e, i, s);
    if (w.addable.empty()) return std::nullopt;
    return w.addable.back();
}

/// Leftmost removable node of the reduced word; removing it inverts good_node.
inline std::optional<Node> good_removable_node(const Multipartition& lam, Modulus e, int i, const Multicharge& s) {
    auto w = reduced_word(lam, e, i, s);
    if (w.removable.empty()) return std::nullopt;
    return w.removable.front();
}

/// Number of trailing removables of the reduced word.
inline int epsilon(const Multipartition& lam, Modulus e, int i, const Multicharge& s) {
    return static_cast<int>(reduced_word(lam, e, i, s).removable.size());
}

inline int phi(const Multipartition& lam, Modulus e, int i, const Multicharge& s) {
    return static_cast<int>(reduced_word(lam, e, i, s).addable.size());
}

/// Kashiwara f~_i; nullopt where undefined.
inline std::optional<Multipartition> crystal_f(const Multipartition& lam, Modulus e, int i, const Multicharge& s) {
    auto g = good_node(lam, e, i, s);
    if (!g) return std::nullopt;
    return add_node(lam, *g);
}

inline std::optional<Multipartition> crystal_e(const Multipartition& lam, Modulus e, int i, const Multicharge& s) {
    auto g = good_removable_node(lam, e, i, s);
    if (!g) return std::nullopt;
    return remove_node(lam, *g);
}

/// The connected component of the empty multipartition, up to max_rank.
class CrystalGraph {
public:
    struct Edge {
        Multipartition source;
        int residue;
        Multipartition target;
    };

    CrystalGraph(Modulus e, Multicharge s, int max_rank) : e_(e), s_(std::move(s)), max_rank_(max_rank) {}

    Modulus modulus() const { return e_; }
    const Multicharge& charge() const { return s_; }
    int max_rank() const { return max_rank_; }

    /// Vertices of rank n in the deterministic total order (largest first).
    const std::vector<Multipartition>& vertices(int n) const { return layers_.at(static_cast<std::size_t>(n)); }
    bool contains(const Multipartition& lam) const { return members_.count(lam) != 0; }
    std::size_t size() const { return members_.size(); }

    /// Target of the i-edge out of lam, if any.
    std::optional<Multipartition> edge(const Multipartition& lam, int i) const {
        auto it = edges_.find({lam, i});
        if (it == edges_.end()) return std::nullopt;
        return it->second;
    }
    /// Edges in deterministic order: by source (total order), then residue.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int n = 0; n < max_rank_; ++n)
            for (const auto& lam : vertices(n))
                for (int i : residue_alphabet(e_, s_, max_rank_))
                    if (auto t = edge(lam, i)) out.push_back({lam, i, *t});
        return out;
    }

private:
    friend CrystalGraph generate_component(Modulus e, const Multicharge& s, int max_rank);
    Modulus e_;
    Multicharge s_;
    int max_rank_;
    std::vector<std::vector<Multipartition>> layers_;
    std::set<Multipartition> members_;
    std::map<std::pair<Multipartition, int>, Multipartition> edges_;
};

/// Breadth-first closure of the empty multipartition under good-node additions.
inline CrystalGraph generate_component(Modulus e, const Multicharge& s, int max_rank) {
    if (max_rank < 0) throw InvalidArgument("generate_component: max_rank must be >= 0");
    if (s.level() < 1) throw InvalidArgument("generate_component: empty multicharge");
    CrystalGraph g(e, s, max_rank);
    const auto alphabet = residue_alphabet(e, s, max_rank);
    g.layers_.push_back({Multipartition::empty(s.level())});
    g.members_.insert(g.layers_[0][0]);
    for (int n = 0; n < max_rank; ++n) {
        std::set<Multipartition> next;
        for (const auto& lam : g.layers_[static_cast<std::size_t>(n)]) {
            for (int i : alphabet) {
                if (auto mu = crystal_f(lam, e, i, s)) {
                    g.edges_.emplace(std::make_pair(lam, i), *mu);
                    next.insert(*mu);
                }
            }
        }
        std::vector<Multipartition> layer(next.begin(), next.end());
        sort_descending(layer, s);
        g.members_.insert(layer.begin(), layer.end());
        g.layers_.push_back(std::move(layer));
    }
    return g;
}

inline std::string to_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    os << "  // e=" << g.modulus().str() << " charge=" << to_string(g.charge()) << " rank<=" << g.max_rank() << "\n";
    for (int n = 0; n <= g.max_rank(); ++n)
        for (const auto& lam : g.vertices(n)) os << "  \"" << to_string(lam) << "\";\n";
    for (const auto& ed : g.edges())
        os << "  \"" << to_string(ed.source) << "\" -> \"" << to_string(ed.target) << "\" [label=\"" << ed.residue
           << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace fockcb
