#pragma once

// The level-l Fock space: sparse vectors over multipartitions with
// coefficients in Z[v, v^-1], and the Chevalley actions for finite e and
// for e = infinity.

#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "laurent.hpp"

namespace fockcb {

class FockVector {
public:
    using EntryMap = std::map<Multipartition, LaurentPoly>;

    explicit FockVector(Multicharge s) : s_(std::move(s)) {}
    static FockVector basis(const Multipartition& lam, const Multicharge& s) {
        FockVector x(s);
        x.add(lam, 1);
        return x;
    }
    static FockVector vacuum(const Multicharge& s) { return basis(Multipartition::empty(s.level()), s); }

    const Multicharge& charge() const { return s_; }
    std::size_t level() const { return s_.level(); }
    const EntryMap& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    LaurentPoly coeff(const Multipartition& lam) const {
        auto it = entries_.find(lam);
        return it == entries_.end() ? LaurentPoly() : it->second;
    }

    void add(const Multipartition& lam, const LaurentPoly& c) {
        if (c.is_zero()) return;
        if (lam.level() != s_.level()) throw InvalidArgument("FockVector: multipartition level differs from charge level");
        auto [it, inserted] = entries_.try_emplace(lam, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }
    /// this += c * x
    void add_scaled(const FockVector& x, const LaurentPoly& c) {
        if (c.is_zero()) return;
        for (const auto& [lam, p] : x.entries_) add(lam, c * p);
    }

    FockVector& operator+=(const FockVector& x) {
        add_scaled(x, 1);
        return *this;
    }
    FockVector& operator-=(const FockVector& x) {
        add_scaled(x, -1);
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const LaurentPoly& c, const FockVector& x) {
        FockVector r(x.s_);
        r.add_scaled(x, c);
        return r;
    }
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.s_ == b.s_ && a.entries_ == b.entries_;
    }

    /// Support in the deterministic total order, largest first.
    std::vector<Multipartition> sorted_support() const {
        std::vector<Multipartition> v;
        for (const auto& [lam, p] : entries_) v.push_back(lam);
        sort_descending(v, s_);
        return v;
    }

    /// Transform every coefficient.
    template <class F>
    FockVector map_coefficients(F&& f) const {
        FockVector r(s_);
        for (const auto& [lam, p] : entries_) r.add(lam, f(p));
        return r;
    }

private:
    Multicharge s_;
    EntryMap entries_;
};

// ---------------------------------------------------------------------------
// Node counts.

struct NodeCounts {
    int n_above = 0; ///< N_i^>(lambda, mu)
    int n_below = 0; ///< N_i^<(lambda, mu)
    int n_total = 0; ///< N_i(lambda)
};

/// N_i(lambda) = #addable i-nodes - #removable i-nodes.
inline int weight_count(const Multipartition& lam, const Multicharge& s, Modulus e, int i) {
    return static_cast<int>(addable_nodes(lam, s, e, i).size()) - static_cast<int>(removable_nodes(lam, s, e, i).size());
}

/// Requires [mu] = [lambda] + {gamma} with gamma an i-node.
inline NodeCounts count_N(const Multipartition& lam, const Multipartition& mu, const Node& gamma, Modulus e, int i,
                          const Multicharge& s) {
    if (!e.matches(content(gamma, s), i)) throw InvalidPair("count_N: gamma is not an i-node");
    const auto adds = addable_nodes(lam, s, e, i);
    if (std::find(adds.begin(), adds.end(), gamma) == adds.end() || add_node(lam, gamma) != mu)
        throw InvalidPair("count_N: mu is not lambda plus gamma");
    const auto rems = removable_nodes(mu, s, e, i);
    NodeCounts n;
    for (const auto& g : adds) {
        if (node_less(gamma, g, s)) ++n.n_above;
        if (node_less(g, gamma, s)) ++n.n_below;
    }
    for (const auto& g : rems) {
        if (node_less(gamma, g, s)) --n.n_above;
        if (node_less(g, gamma, s)) --n.n_below;
    }
    n.n_total = weight_count(lam, s, e, i);
    return n;
}

// ---------------------------------------------------------------------------
// Actions. For finite e these are f_i, e_i, t_i with i in Z/eZ; for e = inf
// the same functions give F_j, E_j, T_j with j the content.

inline FockVector apply_f(const FockVector& x, Modulus e, int i) {
    const auto& s = x.charge();
    FockVector out(s);
    for (const auto& [lam, p] : x.entries()) {
        const auto adds = addable_nodes(lam, s, e, i);
        for (std::size_t a = 0; a < adds.size(); ++a) {
            Multipartition mu = add_node(lam, adds[a]);
            const auto rems = removable_nodes(mu, s, e, i);
            // addables are sorted, so those above gamma are the tail
            int n_above = static_cast<int>(adds.size() - a - 1);
            for (const auto& g : rems)
                if (node_less(adds[a], g, s)) --n_above;
            out.add(mu, p.shifted(n_above));
        }
    }
    return out;
}

inline FockVector apply_e(const FockVector& x, Modulus e, int i) {
    const auto& s = x.charge();
    FockVector out(s);
    for (const auto& [lam, p] : x.entries()) {
        const auto rems = removable_nodes(lam, s, e, i);
        for (std::size_t r = 0; r < rems.size(); ++r) {
            Multipartition mu = remove_node(lam, rems[r]);
            // N^<(mu, lambda): addable i-nodes of mu below gamma minus removable i-nodes of lambda below gamma
            int n_below = -static_cast<int>(r);
            for (const auto& g : addable_nodes(mu, s, e, i))
                if (node_less(g, rems[r], s)) ++n_below;
            out.add(mu, p.shifted(-n_below));
        }
    }
    return out;
}

/// t_i (power = 1) or t_i^-1 (power = -1), or any integer power.
inline FockVector apply_t(const FockVector& x, Modulus e, int i, int power = 1) {
    const auto& s = x.charge();
    FockVector out(s);
    for (const auto& [lam, p] : x.entries()) out.add(lam, p.shifted(power * weight_count(lam, s, e, i)));
    return out;
}

/// f_i^(u) = f_i^u / [u]!
inline FockVector apply_f_divided(const FockVector& x, Modulus e, int i, int u) {
    if (u < 1) throw InvalidArgument("apply_f_divided: u must be >= 1");
    FockVector y = x;
    for (int k = 0; k < u; ++k) y = apply_f(y, e, i);
    if (u == 1) return y;
    const LaurentPoly fact = qfactorial(u);
    return y.map_coefficients([&](const LaurentPoly& p) { return exact_div(p, fact); });
}

// ---------------------------------------------------------------------------
// Compatibility of the two module structures:
//   f_i = sum_{j = i mod e} (prod_{r>=1} T_{j+re}) F_j
//   e_i = sum_{j = i mod e} (prod_{r>=1} T_{j-re}^-1) E_j
//   t_i = prod_{j = i mod e} T_j

/// Finite-e actions under test; defaults to the library's own.
struct FiniteActions {
    std::function<FockVector(const FockVector&, Modulus, int)> f = [](const FockVector& x, Modulus e, int i) {
        return apply_f(x, e, i);
    };
    std::function<FockVector(const FockVector&, Modulus, int)> e = [](const FockVector& x, Modulus m, int i) {
        return apply_e(x, m, i);
    };
    std::function<FockVector(const FockVector&, Modulus, int)> t = [](const FockVector& x, Modulus m, int i) {
        return apply_t(x, m, i);
    };
};

struct ContentWindow {
    int lo = 0;
    int hi = 0;
};

/// Contents of every addable or removable node of multipartitions of rank
/// <= (max rank in supp(x)) + 1 lie in this window.
inline ContentWindow content_window(const FockVector& x) {
    int n = 0;
    for (const auto& [lam, p] : x.entries()) n = std::max(n, lam.rank());
    return {x.charge().min() - n - 1, x.charge().max() + n + 1};
}

namespace detail {
inline int first_congruent_at_or_above(int lo, int i, int e) {
    int r = ((lo - i) % e + e) % e;
    return r == 0 ? lo : lo + (e - r);
}

inline FockVector compat_f(const FockVector& x, Modulus e, int i, ContentWindow w) {
    const Modulus inf = Modulus::infinite();
    FockVector total(x.charge());
    const int step = e.value();
    for (int j = first_congruent_at_or_above(w.lo - step, i, step); j <= w.hi + step; j += step) {
        FockVector y = apply_f(x, inf, j);
        for (int k = j + step; k <= w.hi + step; k += step) y = apply_t(y, inf, k);
        total += y;
    }
    return total;
}

inline FockVector compat_e(const FockVector& x, Modulus e, int i, ContentWindow w) {
    const Modulus inf = Modulus::infinite();
    FockVector total(x.charge());
    const int step = e.value();
    for (int j = first_congruent_at_or_above(w.lo - step, i, step); j <= w.hi + step; j += step) {
        FockVector y = apply_e(x, inf, j);
        for (int k = j - step; k >= w.lo - step; k -= step) y = apply_t(y, inf, k, -1);
        total += y;
    }
    return total;
}

inline FockVector compat_t(const FockVector& x, Modulus e, int i, ContentWindow w) {
    const Modulus inf = Modulus::infinite();
    FockVector y = x;
    const int step = e.value();
    for (int j = first_congruent_at_or_above(w.lo - step, i, step); j <= w.hi + step; j += step)
        y = apply_t(y, inf, j);
    return y;
}
} // namespace detail

/// True iff the finite-e actions of f_i, e_i, t_i on x agree with their
/// expressions through the e = inf operators. The infinite sums and products
/// are truncated to content_window(x); the check is repeated with the window
/// widened by e and both truncations must agree.
inline bool check_compatibility(const FockVector& x, Modulus e, int i, const FiniteActions& actions = {}) {
    if (e.is_infinite()) throw InvalidArgument("check_compatibility needs a finite e");
    const ContentWindow w = content_window(x);
    const ContentWindow wide{w.lo - e.value(), w.hi + e.value()};

    const FockVector f_lhs = actions.f(x, e, i);
    const FockVector f_rhs = detail::compat_f(x, e, i, w);
    if (!(f_rhs == detail::compat_f(x, e, i, wide))) return false;
    if (!(f_lhs == f_rhs)) return false;

    const FockVector e_lhs = actions.e(x, e, i);
    const FockVector e_rhs = detail::compat_e(x, e, i, w);
    if (!(e_rhs == detail::compat_e(x, e, i, wide))) return false;
    if (!(e_lhs == e_rhs)) return false;

    const FockVector t_rhs = detail::compat_t(x, e, i, w);
    if (!(t_rhs == detail::compat_t(x, e, i, wide))) return false;
    return actions.t(x, e, i) == t_rhs;
}

/// Residues that can act nontrivially up to rank max_rank: Z/eZ, or the
/// content window [min s - max_rank, max s + max_rank] for e = inf.
inline std::vector<int> residue_alphabet(Modulus e, const Multicharge& s, int max_rank) {
    std::vector<int> out;
    if (e.is_infinite()) {
        for (int j = s.min() - max_rank; j <= s.max() + max_rank; ++j) out.push_back(j);
    } else {
        for (int i = 0; i < e.value(); ++i) out.push_back(i);
    }
    return out;
}

} // namespace fockcb
