#pragma once

// Canonical bases of the highest weight modules V_e(s) and V_inf(s) inside
// the Fock space, computed rank by rank from bar-invariant divided-power
// vectors followed by triangular elimination.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "crystal.hpp"
#include "fock.hpp"
#include "laurent.hpp"
#include "parallel.hpp"

namespace fockcb {

struct PeelStep {
    int residue = 0;
    int multiplicity = 0;
    friend bool operator==(const PeelStep&, const PeelStep&) = default;
};

/// Outermost operator first: A = f_{i1}^(u1) ... f_{it}^(ut) . empty.
using PeelingSequence = std::vector<PeelStep>;

inline std::string to_string(const PeelingSequence& seq) {
    std::ostringstream os;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (k) os << " ";
        os << "f" << seq[k].residue << "^(" << seq[k].multiplicity << ")";
    }
    return os.str();
}

/// Repeated maximal good-node peeling: i is the first residue (in
/// residue_alphabet order) with a good removable node, u = epsilon_i.
inline PeelingSequence peeling_sequence(const Multipartition& lam, Modulus e, const Multicharge& s) {
    PeelingSequence seq;
    Multipartition cur = lam;
    const auto alphabet = residue_alphabet(e, s, lam.rank());
    while (!cur.is_empty()) {
        bool peeled = false;
        for (int i : alphabet) {
            const int u = epsilon(cur, e, i, s);
            if (u == 0) continue;
            for (int k = 0; k < u; ++k) cur = *crystal_e(cur, e, i, s);
            seq.push_back({i, u});
            peeled = true;
            break;
        }
        if (!peeled)
            throw NotInCrystal("peeling_sequence: " + to_string(lam) + " is not in the component of the empty multipartition");
    }
    return seq;
}

/// f_{i1}^(u1) ... f_{it}^(ut) applied to the vacuum of charge s.
inline FockVector apply_sequence(const PeelingSequence& seq, Modulus e, const Multicharge& s) {
    FockVector x = FockVector::vacuum(s);
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) x = apply_f_divided(x, e, it->residue, it->multiplicity);
    return x;
}

/// The divided-power monomial along the peeling sequence of lam; its
/// coefficient at lam must be 1.
inline FockVector build_A(const Multipartition& lam, Modulus e, const Multicharge& s) {
    FockVector a = apply_sequence(peeling_sequence(lam, e, s), e, s);
    if (!a.coeff(lam).is_one())
        throw PeelingUnitriangularityViolated("build_A: coefficient of " + to_string(lam) + " is " +
                                              to_string(a.coeff(lam)));
    return a;
}

/// Where the bar-invariant starting vector for a basis element came from.
enum class SeedKind {
    Monomial,       ///< build_A along the peeling sequence
    PeeledCanonical, ///< f_i^(eps) G(e~_i^eps lambda)
    Pool,           ///< some f_i^(u) G(mu) with mu of lower rank
};

inline std::string to_string(SeedKind k) {
    switch (k) {
    case SeedKind::Monomial: return "monomial";
    case SeedKind::PeeledCanonical: return "peeled-canonical";
    case SeedKind::Pool: return "pool";
    }
    return "?";
}

struct CanonicalBasisElement {
    Multipartition label;
    FockVector vector;        ///< G(label)
    PeelingSequence peeling;
    FockVector monomial;      ///< A(label), the divided-power monomial along `peeling`
    SeedKind seed = SeedKind::Monomial;
    std::string seed_detail;
};

/// Monomial A(lambda, s) transported to a non-dominant charge v, with its
/// coordinates in the canonical basis of V_e(v).
struct TransportedMonomial {
    Multipartition dominant_label;
    PeelingSequence peeling;
    FockVector monomial;
    std::vector<std::pair<Multipartition, LaurentPoly>> coordinates;
};

class CanonicalBasisSet {
public:
    CanonicalBasisSet(Modulus e, Multicharge s, int rank) : e_(e), s_(std::move(s)), rank_(rank), dominant_(s_) {}

    Modulus modulus() const { return e_; }
    const Multicharge& charge() const { return s_; }
    int rank() const { return rank_; }

    /// In the deterministic total order of labels (largest first).
    const std::vector<CanonicalBasisElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    std::vector<Multipartition> labels() const {
        std::vector<Multipartition> out;
        for (const auto& el : elements_) out.push_back(el.label);
        return out;
    }
    bool contains(const Multipartition& lam) const { return index_.count(lam) != 0; }
    const CanonicalBasisElement& at(const Multipartition& lam) const {
        auto it = index_.find(lam);
        if (it == index_.end()) throw NotInCrystal("no canonical basis element labelled " + to_string(lam));
        return elements_[it->second];
    }
    const FockVector& vector(const Multipartition& lam) const { return at(lam).vector; }

    const Multicharge& dominant_charge() const { return dominant_; }
    const std::vector<TransportedMonomial>& transported() const { return transported_; }

    void push_back(CanonicalBasisElement el) {
        index_[el.label] = elements_.size();
        elements_.push_back(std::move(el));
    }
    void set_transport(Multicharge dominant, std::vector<TransportedMonomial> t) {
        dominant_ = std::move(dominant);
        transported_ = std::move(t);
    }

private:
    Modulus e_;
    Multicharge s_;
    int rank_;
    std::vector<CanonicalBasisElement> elements_;
    std::map<Multipartition, std::size_t> index_;
    Multicharge dominant_;
    std::vector<TransportedMonomial> transported_;
};

/// Position of each rank-n multipartition in the total order (0 = largest).
class OrderIndex {
public:
    OrderIndex(std::size_t level, int n, const Multicharge& s) {
        auto all = enumerate_multipartitions(level, n, s);
        for (std::size_t k = 0; k < all.size(); ++k) pos_.emplace(std::move(all[k]), k);
    }
    std::size_t position(const Multipartition& lam) const { return pos_.at(lam); }
    /// Largest element of the support, or nullopt for zero.
    std::optional<Multipartition> leading(const FockVector& x) const {
        std::optional<Multipartition> best;
        std::size_t best_pos = 0;
        for (const auto& [lam, p] : x.entries()) {
            const std::size_t q = position(lam);
            if (!best || q < best_pos) {
                best = lam;
                best_pos = q;
            }
        }
        return best;
    }

private:
    std::map<Multipartition, std::size_t> pos_;
};

/// Computes and caches canonical bases of V_e(s) for ranks 0..max_rank.
class CanonicalBasisComputer {
public:
    CanonicalBasisComputer(Modulus e, Multicharge s, int max_rank, unsigned threads = 1)
        : e_(e), s_(std::move(s)), max_rank_(max_rank), threads_(threads),
          crystal_(generate_component(e_, s_, max_rank_)) {}

    Modulus modulus() const { return e_; }
    const Multicharge& charge() const { return s_; }
    const CrystalGraph& crystal() const { return crystal_; }

    const CanonicalBasisSet& rank(int n) {
        if (n < 0 || n > max_rank_) throw InvalidArgument("rank out of range for this computer");
        while (static_cast<int>(sets_.size()) <= n) compute_next();
        return sets_[static_cast<std::size_t>(n)];
    }

private:
    struct Candidate {
        FockVector vector;
        Multipartition lead;
        std::string detail;
    };

    const FockVector& known(const Multipartition& mu) const {
        return sets_.at(static_cast<std::size_t>(mu.rank())).vector(mu);
    }

    void compute_next() {
        const int n = static_cast<int>(sets_.size());
        CanonicalBasisSet set(e_, s_, n);
        if (n == 0) {
            const auto empty = Multipartition::empty(s_.level());
            set.push_back({empty, FockVector::vacuum(s_), {}, FockVector::vacuum(s_), SeedKind::Monomial, ""});
            sets_.push_back(std::move(set));
            return;
        }
        const auto& verts = crystal_.vertices(n);
        const OrderIndex order(s_.level(), n, s_);
        const auto alphabet = residue_alphabet(e_, s_, max_rank_);

        std::vector<PeelingSequence> seqs(verts.size());
        std::vector<std::optional<FockVector>> monomials(verts.size());
        detail::parallel_for(verts.size(), threads_, [&](std::size_t k) {
            seqs[k] = peeling_sequence(verts[k], e_, s_);
            monomials[k] = apply_sequence(seqs[k], e_, s_);
        });

        std::map<Multipartition, FockVector> done;
        std::optional<std::vector<Candidate>> pool;
        std::vector<std::optional<CanonicalBasisElement>> elements(verts.size());

        auto accepts = [&](const FockVector& x, const Multipartition& lam) {
            auto lead = order.leading(x);
            return lead && *lead == lam && x.coeff(lam).is_one();
        };

        // Ascending: every G(mu) with mu below lambda is ready when needed.
        for (std::size_t k = verts.size(); k-- > 0;) {
            const Multipartition& lam = verts[k];
            CanonicalBasisElement el{lam, FockVector(s_), seqs[k], *monomials[k], SeedKind::Monomial, ""};
            std::optional<FockVector> seed;
            if (accepts(*monomials[k], lam)) {
                seed = *monomials[k];
                el.seed_detail = to_string(seqs[k]);
            }
            for (int i : alphabet) {
                if (seed) break;
                const int u = epsilon(lam, e_, i, s_);
                if (u == 0) continue;
                Multipartition below = lam;
                for (int t = 0; t < u; ++t) below = *crystal_e(below, e_, i, s_);
                FockVector x = apply_f_divided(known(below), e_, i, u);
                if (accepts(x, lam)) {
                    seed = std::move(x);
                    el.seed = SeedKind::PeeledCanonical;
                    el.seed_detail = "f" + std::to_string(i) + "^(" + std::to_string(u) + ") G(" + to_string(below) + ")";
                }
            }
            if (!seed) {
                if (!pool) pool = build_pool(n, alphabet, order);
                for (const auto& c : *pool) {
                    if (c.lead == lam && c.vector.coeff(lam).is_one()) {
                        seed = c.vector;
                        el.seed = SeedKind::Pool;
                        el.seed_detail = c.detail;
                        break;
                    }
                }
            }
            if (!seed)
                throw PeelingUnitriangularityViolated("no bar-invariant seed with leading term " + to_string(lam));

            el.vector = eliminate(std::move(*seed), lam, order, done);
            done.emplace(lam, el.vector);
            elements[k] = std::move(el);
        }
        for (auto& el : elements) set.push_back(std::move(*el));
        sets_.push_back(std::move(set));
    }

    std::vector<Candidate> build_pool(int n, const std::vector<int>& alphabet, const OrderIndex& order) const {
        std::vector<Candidate> pool;
        for (int u = 1; u <= n; ++u)
            for (const auto& mu : crystal_.vertices(n - u))
                for (int i : alphabet) {
                    FockVector x = apply_f_divided(known(mu), e_, i, u);
                    if (x.is_zero()) continue;
                    auto lead = *order.leading(x);
                    pool.push_back({std::move(x), std::move(lead),
                                    "f" + std::to_string(i) + "^(" + std::to_string(u) + ") G(" + to_string(mu) + ")"});
                }
        return pool;
    }

    /// Subtracts bar-invariant multiples of known G(mu) until every
    /// coefficient other than the one at lam lies in vZ[v].
    FockVector eliminate(FockVector x, const Multipartition& lam, const OrderIndex& order,
                         const std::map<Multipartition, FockVector>& done) const {
        const std::size_t lam_pos = order.position(lam);
        std::size_t guard = 0;
        while (true) {
            std::optional<Multipartition> worst;
            std::size_t worst_pos = 0;
            for (const auto& [mu, p] : x.entries()) {
                if (mu == lam || p.in_vZv()) continue;
                const std::size_t q = order.position(mu);
                if (!worst || q < worst_pos) {
                    worst = mu;
                    worst_pos = q;
                }
            }
            if (!worst) return x;
            if (worst_pos <= lam_pos)
                throw OrderViolation("coefficient of " + to_string(*worst) + " in the vector for " + to_string(lam) +
                                     " is not in vZ[v] but is not below it");
            auto it = done.find(*worst);
            if (it == done.end())
                throw MissingPredecessor("elimination for " + to_string(lam) + " needs G(" + to_string(*worst) +
                                         "), which is not a crystal vertex");
            const LaurentPoly m = bar_symmetric_part(x.coeff(*worst));
            x.add_scaled(it->second, -m);
            if (++guard > 100000) throw NonTermination("elimination does not terminate");
        }
    }

    Modulus e_;
    Multicharge s_;
    int max_rank_;
    unsigned threads_;
    CrystalGraph crystal_;
    std::vector<CanonicalBasisSet> sets_;
};

inline CanonicalBasisSet canonical_basis(Modulus e, const Multicharge& s, int n, unsigned threads = 1) {
    CanonicalBasisComputer comp(e, s, n, threads);
    return comp.rank(n);
}

struct ReducedCharge {
    Multicharge s;
    bool dominant = false; ///< input was already the representative
};

/// Representative with 0 <= s_1 <= ... <= s_l < e (components reduced mod e
/// then sorted); for e = inf the components are only sorted.
inline ReducedCharge reduce_charge(const Multicharge& v, Modulus e) {
    std::vector<int> s = v.s;
    if (!e.is_infinite())
        for (auto& x : s) x = e.residue(x);
    std::sort(s.begin(), s.end());
    Multicharge rep(std::move(s));
    return {rep, rep == v};
}

/// Canonical basis of V_e(v) for an arbitrary charge. The monomials built
/// from peeling sequences at the dominant representative are transported to
/// charge v and each is expanded in the basis, with the requirement that
/// every coordinate is a bar-invariant Laurent polynomial.
inline CanonicalBasisSet canonical_basis_any_charge(Modulus e, const Multicharge& v, int n, unsigned threads = 1) {
    const ReducedCharge red = reduce_charge(v, e);
    CanonicalBasisSet basis = canonical_basis(e, v, n, threads);
    if (red.dominant) {
        basis.set_transport(red.s, {});
        return basis;
    }
    const CrystalGraph dom = generate_component(e, red.s, n);
    const auto& dom_verts = dom.vertices(n);
    if (dom_verts.size() != basis.size())
        throw InconsistentSystem("crystal sizes differ between charge " + to_string(v) + " and its representative " +
                                 to_string(red.s));
    const OrderIndex order(v.level(), n, v);
    std::vector<TransportedMonomial> transported;
    for (const auto& lam : dom_verts) {
        TransportedMonomial t{lam, peeling_sequence(lam, e, red.s), FockVector(v), {}};
        t.monomial = apply_sequence(t.peeling, e, v);
        FockVector rest = t.monomial;
        std::size_t guard = 0;
        while (auto lead = order.leading(rest)) {
            if (!basis.contains(*lead))
                throw MissingPredecessor("transported monomial has leading term " + to_string(*lead) +
                                         " outside the crystal");
            const LaurentPoly c = rest.coeff(*lead);
            if (!c.is_bar_invariant())
                throw InconsistentSystem("transported monomial has a coordinate that is not bar-invariant");
            rest.add_scaled(basis.vector(*lead), -c);
            t.coordinates.emplace_back(*lead, c);
            if (++guard > basis.size() + 1) throw NonTermination("transport expansion does not terminate");
        }
        transported.push_back(std::move(t));
    }
    basis.set_transport(red.s, std::move(transported));
    return basis;
}

} // namespace fockcb
