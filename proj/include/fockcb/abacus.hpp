#pragma once

// Beta-numbers and the folding of a one-runner abacus onto l runners.

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"

namespace fockcb {

struct BeadPosition {
    int c = 1;   ///< in [1, e]
    int d = 1;   ///< runner, in [1, l]
    int m = 0;
    int phi = 0; ///< c + e*m, the position on runner d
};

namespace detail {
inline int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
inline int floor_mod(int a, int b) { return a - b * floor_div(a, b); }
} // namespace detail

/// k = c + e(d-1) + e*l*m with c in [1,e], d in [1,l].
inline BeadPosition split_bead(int k, int e, int l) {
    const int el = e * l;
    BeadPosition b;
    b.m = detail::floor_div(k - 1, el);
    const int rem = detail::floor_mod(k - 1, el);
    b.c = rem % e + 1;
    b.d = rem / e + 1;
    b.phi = b.c + e * b.m;
    return b;
}

/// Inverse of split_bead on runner d.
inline int join_bead(int phi, int d, int e, int l) {
    const int c = detail::floor_mod(phi - 1, e) + 1;
    const int m = (phi - c) / e;
    return c + e * (d - 1) + e * l * m;
}

struct AbacusData {
    int e = 2;
    int l = 1;
    std::vector<int> k;
    std::vector<int> w;
    std::vector<int> c, d, m, phi; ///< indexed like k
    std::vector<int> a;            ///< c sorted ascending
    std::vector<int> b;            ///< runners in reading order
    std::vector<int> zeta;         ///< positions in reading order
};

/// Per-bead data and the reading word: runners l down to 1, and on each
/// runner beads from right to left (decreasing phi).
inline AbacusData reading_word(const std::vector<int>& k, int e, int l) {
    if (e < 1 || l < 1) throw InvalidArgument("reading_word: e and l must be positive");
    AbacusData out;
    out.e = e;
    out.l = l;
    out.k = k;
    std::vector<BeadPosition> pos;
    for (int x : k) {
        const auto p = split_bead(x, e, l);
        pos.push_back(p);
        out.c.push_back(p.c);
        out.d.push_back(p.d);
        out.m.push_back(p.m);
        out.phi.push_back(p.phi);
    }
    std::vector<std::size_t> order(k.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (pos[x].d != pos[y].d) return pos[x].d > pos[y].d;
        return pos[x].phi > pos[y].phi;
    });
    for (auto i : order) {
        out.w.push_back(k[i]);
        out.b.push_back(pos[i].d);
        out.zeta.push_back(pos[i].phi);
    }
    out.a = out.c;
    std::sort(out.a.begin(), out.a.end());
    return out;
}

namespace detail {
/// The r largest beads of the one-runner preimage of (lam, s).
inline std::vector<int> top_beads(const Multipartition& lam, const Multicharge& s, int e, int r) {
    const int l = static_cast<int>(lam.level());
    std::vector<int> ks;
    // on each runner k grows with phi, so the r largest overall are among
    // the r largest of each runner
    for (int d = 1; d <= l; ++d)
        for (int i = 1; i <= r; ++i)
            ks.push_back(join_bead(lam.row(static_cast<std::size_t>(d - 1), i) + s[static_cast<std::size_t>(d - 1)] + 1 - i,
                                   d, e, l));
    std::sort(ks.begin(), ks.end(), std::greater<>());
    ks.resize(static_cast<std::size_t>(r));
    return ks;
}

/// k_r equals s + 1 - r exactly when the r-th part of the level-one
/// partition vanishes.
inline bool window_ok(const std::vector<int>& k, int total_charge) {
    const int r = static_cast<int>(k.size());
    return r >= 1 && k.back() == total_charge + 1 - r;
}
} // namespace detail

/// Smallest r for which the truncation to r beads loses no nonzero part.
inline int minimal_r(const Multipartition& lam, const Multicharge& s, int e) {
    const int total = s.sum();
    for (int r = 1;; ++r)
        if (detail::window_ok(detail::top_beads(lam, s, e, r), total)) return r;
}

/// First r beta-numbers of the one-runner preimage of (lam, s), with all
/// derived sequences.
inline AbacusData tau_inverse(const Multipartition& lam, const Multicharge& s, int e, int r) {
    if (e < 2) throw InvalidArgument("tau_inverse: e must be >= 2");
    if (lam.level() != s.level()) throw InvalidArgument("tau_inverse: level of multipartition and charge differ");
    if (r < 0) throw InvalidArgument("tau_inverse: r must be >= 0");
    const int l = static_cast<int>(s.level());
    auto k = detail::top_beads(lam, s, e, r);
    const bool ok = r == 0 ? detail::window_ok(detail::top_beads(lam, s, e, 1), s.sum())
                           : detail::window_ok(k, s.sum());
    if (!ok) {
        const int need = minimal_r(lam, s, e);
        throw RTooSmall("tau_inverse: r = " + std::to_string(r) + " truncates nonzero parts; use r >= " +
                            std::to_string(need),
                        need);
    }
    return reading_word(k, e, l);
}

/// Decodes r beads (with the implicit tail k_r - 1, k_r - 2, ...) into an
/// l-multipartition and multicharge.
inline std::pair<Multipartition, Multicharge> tau_forward(const std::vector<int>& k, int e, int l) {
    if (e < 2 || l < 1) throw InvalidArgument("tau_forward: need e >= 2 and l >= 1");
    if (k.empty()) throw InvalidArgument("tau_forward: empty bead sequence");
    for (std::size_t i = 1; i < k.size(); ++i)
        if (k[i] >= k[i - 1]) throw InvalidArgument("tau_forward: k must be strictly decreasing");
    const int el = e * l;
    const int kr = k.back();
    const int m0 = detail::floor_div(kr - 1, el) - 1;
    const int x = e * m0 + e; // every position <= x is occupied on every runner
    std::vector<int> beads = k;
    for (int t = kr - 1; t >= kr - 3 * el; --t) beads.push_back(t);

    std::vector<std::vector<int>> above(static_cast<std::size_t>(l));
    for (int kk : beads) {
        const auto p = split_bead(kk, e, l);
        if (p.phi > x) above[static_cast<std::size_t>(p.d - 1)].push_back(p.phi);
    }
    std::vector<Partition> parts;
    std::vector<int> charge;
    for (auto& runner : above) {
        std::sort(runner.begin(), runner.end(), std::greater<>());
        const int sd = x + static_cast<int>(runner.size());
        Partition p;
        for (std::size_t i = 0; i < runner.size(); ++i) {
            const int part = runner[i] - sd - 1 + static_cast<int>(i + 1);
            if (part > 0) p.push_back(part);
        }
        parts.push_back(std::move(p));
        charge.push_back(sd);
    }
    return {Multipartition(std::move(parts)), Multicharge(std::move(charge))};
}

/// Smallest admissible r for both e and e_prime whose last bead k_r has
/// 1 - k_r divisible by l * lcm(e, e_prime): the window then ends at a
/// common cell boundary and zeta, b agree for the two moduli.
inline int stable_r(const Multipartition& lam, const Multicharge& s, int e, int e_prime) {
    if (e < 2 || e_prime < 2) throw InvalidArgument("stable_r: e and e' must be >= 2");
    const int l = static_cast<int>(s.level());
    const int period = l * std::lcm(e, e_prime);
    const int total = s.sum();
    int r = std::max(minimal_r(lam, s, e), minimal_r(lam, s, e_prime));
    // with the window admissible, k_r = total + 1 - r, so 1 - k_r = r - total
    while (detail::floor_mod(r - total, period) != 0) ++r;
    return r;
}

/// The l-runner abacus of the r beads: one row per runner, "o" for a bead
/// and "." for a gap, columns labelled by position.
inline std::string render_abacus(const AbacusData& data) {
    std::ostringstream os;
    if (data.k.empty()) return "(no beads)\n";
    std::set<std::pair<int, int>> occupied;
    int lo = data.phi[0], hi = data.phi[0];
    for (std::size_t i = 0; i < data.k.size(); ++i) {
        occupied.insert({data.d[i], data.phi[i]});
        lo = std::min(lo, data.phi[i]);
        hi = std::max(hi, data.phi[i]);
    }
    int width = 1;
    for (int p = lo; p <= hi; ++p) width = std::max<int>(width, static_cast<int>(std::to_string(p).size()));
    const std::string head = "runner ";
    const int label_width = static_cast<int>(head.size() + std::to_string(data.l).size());
    os << std::string(static_cast<std::size_t>(label_width), ' ');
    for (int p = lo; p <= hi; ++p) os << ' ' << std::setw(width) << p;
    os << '\n';
    for (int d = 1; d <= data.l; ++d) {
        os << head << std::setw(label_width - static_cast<int>(head.size())) << d;
        for (int p = lo; p <= hi; ++p) os << ' ' << std::setw(width) << (occupied.count({d, p}) ? "o" : ".");
        os << '\n';
    }
    return os.str();
}

} // namespace fockcb
