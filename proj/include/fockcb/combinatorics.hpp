#pragma once

// Multipartitions, nodes, residues and the e-independent dominance order.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace fockcb {

using Partition = std::vector<int>;

/// An l-tuple of partitions. Parts are positive and weakly decreasing.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components) : comps_(std::move(components)) {
        for (const auto& p : comps_) {
            for (std::size_t a = 0; a < p.size(); ++a) {
                if (p[a] <= 0) throw InvalidArgument("multipartition parts must be positive");
                if (a > 0 && p[a] > p[a - 1]) throw InvalidArgument("multipartition parts must be weakly decreasing");
            }
        }
    }
    static Multipartition empty(std::size_t level) { return Multipartition(std::vector<Partition>(level)); }

    std::size_t level() const { return comps_.size(); }
    const Partition& operator[](std::size_t c) const { return comps_[c]; }
    const std::vector<Partition>& components() const { return comps_; }

    int rank() const {
        int n = 0;
        for (const auto& p : comps_) n = std::accumulate(p.begin(), p.end(), n);
        return n;
    }
    bool is_empty() const {
        return std::all_of(comps_.begin(), comps_.end(), [](const Partition& p) { return p.empty(); });
    }
    /// Length of row a (1-based) of component c (0-based), 0 beyond the last row.
    int row(std::size_t c, int a) const {
        const auto& p = comps_[c];
        return a >= 1 && a <= static_cast<int>(p.size()) ? p[a - 1] : 0;
    }

    friend auto operator<=>(const Multipartition&, const Multipartition&) = default;
    friend bool operator==(const Multipartition&, const Multipartition&) = default;

private:
    std::vector<Partition> comps_;
};

/// A box (row, column, component). Rows and columns are 1-based, the
/// component index is 0-based internally and printed 1-based.
struct Node {
    int row = 1;
    int col = 1;
    int comp = 0;
    friend auto operator<=>(const Node&, const Node&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Node& n) {
    return os << "(" << n.row << "," << n.col << "," << n.comp + 1 << ")";
}

/// s = (s_1, ..., s_l).
struct Multicharge {
    std::vector<int> s;

    Multicharge() = default;
    Multicharge(std::initializer_list<int> v) : s(v) {}
    explicit Multicharge(std::vector<int> v) : s(std::move(v)) {}

    std::size_t level() const { return s.size(); }
    int operator[](std::size_t c) const { return s[c]; }
    int min() const { return *std::min_element(s.begin(), s.end()); }
    int max() const { return *std::max_element(s.begin(), s.end()); }
    int sum() const { return std::accumulate(s.begin(), s.end(), 0); }
    friend bool operator==(const Multicharge&, const Multicharge&) = default;
};

/// e in {2, 3, ...} or infinity. Residues are taken in [0, e) for finite e
/// and are plain contents for e = infinity.
class Modulus {
public:
    static Modulus infinite() { return Modulus(0); }
    static Modulus finite(int e) {
        if (e < 2) throw InvalidArgument("modulus e must be >= 2 or inf");
        return Modulus(e);
    }
    bool is_infinite() const { return e_ == 0; }
    int value() const { return e_; }

    /// Residue class of a content.
    int residue(int content) const {
        if (is_infinite()) return content;
        int r = content % e_;
        return r < 0 ? r + e_ : r;
    }
    bool matches(int content, int i) const { return residue(content) == i; }

    std::string str() const { return is_infinite() ? "inf" : std::to_string(e_); }
    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    explicit Modulus(int e) : e_(e) {}
    int e_;
};

inline int content(const Node& g, const Multicharge& s) { return g.col - g.row + s[static_cast<std::size_t>(g.comp)]; }

/// gamma_1 <_s gamma_2: smaller content, or equal content in an earlier component.
inline bool node_less(const Node& a, const Node& b, const Multicharge& s) {
    const int ca = content(a, s), cb = content(b, s);
    return ca < cb || (ca == cb && a.comp < b.comp);
}

inline Multipartition add_node(const Multipartition& lam, const Node& g) {
    auto comps = lam.components();
    auto& p = comps[static_cast<std::size_t>(g.comp)];
    if (g.row == static_cast<int>(p.size()) + 1)
        p.push_back(1);
    else
        ++p[static_cast<std::size_t>(g.row - 1)];
    return Multipartition(std::move(comps));
}

inline Multipartition remove_node(const Multipartition& lam, const Node& g) {
    auto comps = lam.components();
    auto& p = comps[static_cast<std::size_t>(g.comp)];
    if (--p[static_cast<std::size_t>(g.row - 1)] == 0) p.pop_back();
    return Multipartition(std::move(comps));
}

/// All addable nodes, unsorted.
inline std::vector<Node> all_addable(const Multipartition& lam) {
    std::vector<Node> out;
    for (std::size_t c = 0; c < lam.level(); ++c) {
        const auto& p = lam[c];
        for (int a = 1; a <= static_cast<int>(p.size()) + 1; ++a) {
            const int len = lam.row(c, a);
            if (a == 1 || lam.row(c, a - 1) > len) out.push_back({a, len + 1, static_cast<int>(c)});
        }
    }
    return out;
}

inline std::vector<Node> all_removable(const Multipartition& lam) {
    std::vector<Node> out;
    for (std::size_t c = 0; c < lam.level(); ++c) {
        const auto& p = lam[c];
        for (int a = 1; a <= static_cast<int>(p.size()); ++a)
            if (lam.row(c, a) > lam.row(c, a + 1)) out.push_back({a, lam.row(c, a), static_cast<int>(c)});
    }
    return out;
}

namespace detail {
inline std::vector<Node> filter_sorted(std::vector<Node> nodes, const Multicharge& s, Modulus e, int i) {
    std::erase_if(nodes, [&](const Node& g) { return !e.matches(content(g, s), i); });
    std::sort(nodes.begin(), nodes.end(), [&](const Node& a, const Node& b) { return node_less(a, b, s); });
    return nodes;
}
} // namespace detail

/// Addable i-nodes (residue i for finite e, content i for e = inf), ascending under <_s.
inline std::vector<Node> addable_nodes(const Multipartition& lam, const Multicharge& s, Modulus e, int i) {
    return detail::filter_sorted(all_addable(lam), s, e, i);
}

inline std::vector<Node> removable_nodes(const Multipartition& lam, const Multicharge& s, Modulus e, int i) {
    return detail::filter_sorted(all_removable(lam), s, e, i);
}

/// Partitions of n in reverse lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(left, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, left - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// ---------------------------------------------------------------------------
// Dominance order.
//
// gamma(lambda) is the multiset { lambda^(i)_j - j + s_i - alpha_i } sorted
// descending, with alpha_i = (l+1-i)/(l+1) and j = 1..rank + max(s_i,0) + pad.
// Entries are stored multiplied by (l+1) so they are integers.

struct GammaSequence {
    std::vector<std::int64_t> scaled;
    std::int64_t denominator = 1;
    friend bool operator==(const GammaSequence&, const GammaSequence&) = default;
};

inline GammaSequence gamma_sequence(const Multipartition& lam, const Multicharge& s, int pad = 0) {
    const auto l = static_cast<std::int64_t>(s.level());
    if (lam.level() != s.level()) throw InvalidArgument("gamma_sequence: level mismatch");
    const int n = lam.rank();
    GammaSequence g;
    g.denominator = l + 1;
    for (std::size_t i = 0; i < s.level(); ++i) {
        const int count = n + std::max(s[i], 0) + pad;
        const std::int64_t alpha = l - static_cast<std::int64_t>(i); // (l+1-i') with i' = i+1
        for (int j = 1; j <= count; ++j)
            g.scaled.push_back((static_cast<std::int64_t>(lam.row(i, j)) - j + s[i]) * (l + 1) - alpha);
    }
    std::sort(g.scaled.begin(), g.scaled.end(), std::greater<>());
    return g;
}

enum class Dominance { Greater, Less, Equal, Incomparable };

inline std::string to_string(Dominance d) {
    switch (d) {
    case Dominance::Greater: return "Greater";
    case Dominance::Less: return "Less";
    case Dominance::Equal: return "Equal";
    case Dominance::Incomparable: return "Incomparable";
    }
    return "?";
}

/// Partial-sum comparison of two equal-length descending sequences.
inline Dominance compare_sequences(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& w) {
    if (u == w) return Dominance::Equal;
    std::int64_t su = 0, sw = 0;
    bool ge = true, le = true;
    for (std::size_t a = 0; a < u.size(); ++a) {
        su += u[a];
        sw += w[a];
        if (su < sw) ge = false;
        if (su > sw) le = false;
    }
    if (ge) return Dominance::Greater;
    if (le) return Dominance::Less;
    return Dominance::Incomparable;
}

/// lambda vs mu in the dominance order. Takes no modulus: the order is the
/// same for every e.
inline Dominance compare_dominance(const Multipartition& lam, const Multipartition& mu, const Multicharge& s,
                                   int pad = 0) {
    if (lam.rank() != mu.rank()) throw RankMismatch("compare_dominance: ranks differ");
    if (lam == mu) return Dominance::Equal;
    return compare_sequences(gamma_sequence(lam, s, pad).scaled, gamma_sequence(mu, s, pad).scaled);
}

/// Strict "lambda before mu" in the deterministic total order: descending
/// lexicographic on gamma sequences (a linear extension of the dominance order).
class GammaLexOrder {
public:
    explicit GammaLexOrder(Multicharge s) : s_(std::move(s)) {}
    /// true if a is lex-greater than b
    bool greater(const Multipartition& a, const Multipartition& b) const {
        if (a.rank() != b.rank()) return a.rank() > b.rank();
        return gamma_sequence(a, s_).scaled > gamma_sequence(b, s_).scaled;
    }
    bool operator()(const Multipartition& a, const Multipartition& b) const { return greater(a, b); }
    const Multicharge& charge() const { return s_; }

private:
    Multicharge s_;
};

/// Sorts into the deterministic total order (largest first).
inline void sort_descending(std::vector<Multipartition>& v, const Multicharge& s) {
    std::vector<std::pair<std::vector<std::int64_t>, Multipartition>> keyed;
    keyed.reserve(v.size());
    for (auto& m : v) keyed.emplace_back(gamma_sequence(m, s).scaled, std::move(m));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = std::move(keyed[k].second);
}

/// Pi_{l,n}, in descending gamma-lex order for charge s.
inline std::vector<Multipartition> enumerate_multipartitions(std::size_t l, int n, const Multicharge& s) {
    if (l < 1) throw InvalidArgument("level must be >= 1");
    std::vector<Multipartition> out;
    std::vector<Partition> cur(l);
    auto rec = [&](auto&& self, std::size_t c, int left) -> void {
        if (c + 1 == l) {
            for (auto& p : enumerate_partitions(left)) {
                cur[c] = p;
                out.emplace_back(cur);
            }
            return;
        }
        for (int k = left; k >= 0; --k)
            for (auto& p : enumerate_partitions(k)) {
                cur[c] = p;
                self(self, c + 1, left - k);
            }
    };
    rec(rec, 0, n);
    sort_descending(out, s);
    return out;
}

inline std::vector<Multipartition> enumerate_multipartitions(std::size_t l, int n) {
    return enumerate_multipartitions(l, n, Multicharge(std::vector<int>(l, 0)));
}

// ---------------------------------------------------------------------------
// Text syntax: components joined by "|", parts by ".", empty component "-".

inline std::string to_string(const Multipartition& lam) {
    std::string out;
    for (std::size_t c = 0; c < lam.level(); ++c) {
        if (c) out += '|';
        if (lam[c].empty()) {
            out += '-';
            continue;
        }
        for (std::size_t a = 0; a < lam[c].size(); ++a) {
            if (a) out += '.';
            out += std::to_string(lam[c][a]);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Multipartition& lam) { return os << to_string(lam); }

/// Display label, e.g. "(-,(2.1))" rendered as "(∅,(2.1))".
inline std::string display_label(const Multipartition& lam) {
    std::string out = "(";
    for (std::size_t c = 0; c < lam.level(); ++c) {
        if (c) out += ',';
        if (lam[c].empty()) {
            out += "∅";
            continue;
        }
        out += '(';
        for (std::size_t a = 0; a < lam[c].size(); ++a) {
            if (a) out += '.';
            out += std::to_string(lam[c][a]);
        }
        out += ')';
    }
    return out + ")";
}

namespace detail {
inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}
inline int parse_int(const std::string& tok, const std::string& context) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("bad integer '" + tok + "' in '" + context + "'");
    }
    if (used != tok.size()) throw ParseError("bad integer '" + tok + "' in '" + context + "'");
    return v;
}
} // namespace detail

inline Multipartition parse_multipartition(const std::string& text) {
    if (text.empty()) throw ParseError("empty multipartition text");
    std::vector<Partition> comps;
    for (const auto& tok : detail::split(text, '|')) {
        Partition p;
        if (tok != "-") {
            if (tok.empty()) throw ParseError("empty component in '" + text + "' (use '-')");
            for (const auto& part : detail::split(tok, '.')) p.push_back(detail::parse_int(part, text));
        }
        comps.push_back(std::move(p));
    }
    try {
        return Multipartition(std::move(comps));
    } catch (const InvalidArgument& ex) {
        throw ParseError(std::string(ex.what()) + " in '" + text + "'");
    }
}

inline std::string to_string(const Multicharge& s) {
    std::string out;
    for (std::size_t c = 0; c < s.level(); ++c) {
        if (c) out += ',';
        out += std::to_string(s[c]);
    }
    return out;
}

inline Multicharge parse_multicharge(const std::string& text) {
    if (text.empty()) throw ParseError("empty multicharge");
    std::vector<int> v;
    for (const auto& tok : detail::split(text, ',')) v.push_back(detail::parse_int(tok, text));
    return Multicharge(std::move(v));
}

inline Modulus parse_modulus(const std::string& text) {
    if (text == "inf" || text == "infinity") return Modulus::infinite();
    const int e = detail::parse_int(text, text);
    if (e < 2) throw ParseError("e must be >= 2 or 'inf'");
    return Modulus::finite(e);
}

} // namespace fockcb
