#pragma once

// Decomposition matrices D_e, D_inf and the relative matrix D_inf^e with
// D_e = D_inf * D_inf^e.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "combinatorics.hpp"
#include "fock.hpp"
#include "laurent.hpp"
#include "parallel.hpp"

namespace fockcb {

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::vector<Multipartition> rows, std::vector<Multipartition> cols)
        : rows_(std::move(rows)), cols_(std::move(cols)), entries_(rows_.size() * cols_.size()) {
        for (std::size_t r = 0; r < rows_.size(); ++r) row_index_[rows_[r]] = r;
        for (std::size_t c = 0; c < cols_.size(); ++c) col_index_[cols_[c]] = c;
    }

    const std::vector<Multipartition>& row_labels() const { return rows_; }
    const std::vector<Multipartition>& col_labels() const { return cols_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_.size(); }

    LaurentPoly& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_.size() + c); }
    const LaurentPoly& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_.size() + c); }

    std::optional<std::size_t> row_of(const Multipartition& lam) const {
        auto it = row_index_.find(lam);
        if (it == row_index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<std::size_t> col_of(const Multipartition& lam) const {
        auto it = col_index_.find(lam);
        if (it == col_index_.end()) return std::nullopt;
        return it->second;
    }
    /// Entry by labels; zero when the row label is absent.
    LaurentPoly get(const Multipartition& row, const Multipartition& col) const {
        auto r = row_of(row);
        auto c = col_of(col);
        if (!c) throw InvalidArgument("PolyMatrix: unknown column " + to_string(col));
        if (!r) return {};
        return at(*r, *c);
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::vector<Multipartition> rows_;
    std::vector<Multipartition> cols_;
    std::vector<LaurentPoly> entries_;
    std::map<Multipartition, std::size_t> row_index_;
    std::map<Multipartition, std::size_t> col_index_;
};

inline PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.col_labels() != b.row_labels()) throw InvalidArgument("PolyMatrix product: inner labels differ");
    PolyMatrix out(a.row_labels(), b.col_labels());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b.at(k, j).is_zero()) out.at(i, j) += x * b.at(k, j);
        }
    return out;
}

/// Integer matrix obtained by setting v = 1.
inline std::vector<std::vector<BigInt>> evaluate_at_one(const PolyMatrix& m) {
    std::vector<std::vector<BigInt>> out(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c).eval_at_one();
    return out;
}

inline std::vector<std::vector<BigInt>> multiply(const std::vector<std::vector<BigInt>>& a,
                                                 const std::vector<std::vector<BigInt>>& b) {
    const std::size_t n = a.size();
    const std::size_t inner = b.size();
    const std::size_t m = inner ? b[0].size() : 0;
    std::vector<std::vector<BigInt>> out(n, std::vector<BigInt>(m));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != inner) throw InvalidArgument("integer product: shape mismatch");
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
    return out;
}

/// Standard-basis matrix of a canonical basis: rows Pi_{l,n}, columns the
/// crystal vertices, both in the deterministic total order.
inline PolyMatrix decomposition_matrix(const CanonicalBasisSet& g) {
    const auto& s = g.charge();
    PolyMatrix m(enumerate_multipartitions(s.level(), g.rank(), s), g.labels());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [mu, p] : g.vector(m.col_labels()[c]).entries()) m.at(*m.row_of(mu), c) = p;
    return m;
}

/// Relative matrix, rows B_inf(s), columns B_e(s): the coordinates of each
/// G_e(lambda) in the e = inf canonical basis, peeled off from the top.
inline PolyMatrix extract_relative(const CanonicalBasisSet& ge, const CanonicalBasisSet& ginf, unsigned threads = 1) {
    if (ge.charge() != ginf.charge() || ge.rank() != ginf.rank())
        throw InvalidArgument("extract_relative: bases have different charge or rank");
    if (ge.modulus().is_infinite() || !ginf.modulus().is_infinite())
        throw InvalidArgument("extract_relative: expects a finite-e basis and an e = inf basis");
    const auto& s = ge.charge();
    const OrderIndex order(s.level(), ge.rank(), s);
    const std::size_t guard = enumerate_multipartitions(s.level(), ge.rank(), s).size();
    PolyMatrix d(ginf.labels(), ge.labels());

    detail::parallel_for(d.cols(), threads, [&](std::size_t c) {
        FockVector residual = ge.vector(d.col_labels()[c]);
        std::size_t iterations = 0;
        while (auto lead = order.leading(residual)) {
            if (++iterations > guard) throw NonTermination("extract_relative: iteration guard exceeded");
            auto r = d.row_of(*lead);
            if (!r) throw NotInBInfinity("extract_relative: " + to_string(*lead) + " is not in B_inf");
            const LaurentPoly coeff = residual.coeff(*lead);
            d.at(*r, c) = coeff;
            residual.add_scaled(ginf.vector(*lead), -coeff);
        }
    });
    return d;
}

/// Independent solver of dinf * X = de. The columns of dinf are assumed
/// unitriangular: each column label is its own row with entry 1, and the
/// other nonzero entries of that column sit in strictly lower rows.
inline PolyMatrix back_substitution_oracle(const PolyMatrix& de, const PolyMatrix& dinf) {
    if (de.row_labels() != dinf.row_labels()) throw InvalidArgument("back_substitution_oracle: row labels differ");
    PolyMatrix x(dinf.col_labels(), de.col_labels());
    // pivot row of each dinf column, in row order
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    for (std::size_t k = 0; k < dinf.cols(); ++k) {
        auto r = dinf.row_of(dinf.col_labels()[k]);
        if (!r) throw InconsistentSystem("back_substitution_oracle: column label missing from rows");
        pivots.emplace_back(*r, k);
    }
    std::sort(pivots.begin(), pivots.end());

    for (std::size_t j = 0; j < de.cols(); ++j) {
        for (const auto& [prow, k] : pivots) {
            LaurentPoly rhs = de.at(prow, j);
            for (std::size_t kk = 0; kk < dinf.cols(); ++kk)
                if (kk != k && !x.at(kk, j).is_zero()) rhs -= dinf.at(prow, kk) * x.at(kk, j);
            try {
                x.at(k, j) = exact_div(rhs, dinf.at(prow, k));
            } catch (const Error&) {
                throw InconsistentSystem("back_substitution_oracle: no exact quotient in row " +
                                         to_string(dinf.row_labels()[prow]));
            }
        }
        for (std::size_t r = 0; r < de.rows(); ++r) {
            LaurentPoly sum;
            for (std::size_t k = 0; k < dinf.cols(); ++k)
                if (!x.at(k, j).is_zero()) sum += dinf.at(r, k) * x.at(k, j);
            if (!(sum == de.at(r, j)))
                throw InconsistentSystem("back_substitution_oracle: row " + to_string(de.row_labels()[r]) +
                                         " of column " + to_string(de.col_labels()[j]) + " is not satisfied");
        }
    }
    return x;
}

struct CheckResult {
    std::string check;
    bool pass = true;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> items;
    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
};

namespace detail {
inline std::string cell_name(const PolyMatrix& m, std::size_t r, std::size_t c) {
    return "(" + to_string(m.row_labels()[r]) + ", " + to_string(m.col_labels()[c]) + ")";
}
} // namespace detail

/// Checks on a factorization triple:
///   product     de == dinf * drel exactly
///   unitriangular  drel has 1 at (lambda, lambda) and vZ[v] elsewhere
///   dominance   drel(nu, lambda) != 0 implies lambda >= nu
///   positivity  every entry of drel has nonnegative coefficients
///   at_one      the v = 1 integer matrices satisfy the same product
inline VerificationReport verify(const PolyMatrix& de, const PolyMatrix& dinf, const PolyMatrix& drel,
                                 const Multicharge& s) {
    VerificationReport rep;
    const bool shapes = dinf.col_labels() == drel.row_labels() && de.col_labels() == drel.col_labels() &&
                        de.row_labels() == dinf.row_labels();
    if (!shapes) {
        rep.items.push_back({"product", false, "incompatible shapes"});
        rep.items.push_back({"at_one", false, "incompatible shapes"});
        return rep;
    }
    CheckResult product{"product", true, "D_e = D_inf * D_rel"};
    const PolyMatrix prod = dinf * drel;
    for (std::size_t r = 0; r < de.rows() && product.pass; ++r)
        for (std::size_t c = 0; c < de.cols(); ++c)
            if (!(prod.at(r, c) == de.at(r, c))) {
                product.pass = false;
                product.detail = "mismatch at " + detail::cell_name(de, r, c) + ": expected " +
                                 to_string(de.at(r, c)) + ", product gives " + to_string(prod.at(r, c));
                break;
            }
    rep.items.push_back(product);

    CheckResult tri{"unitriangular", true, "diagonal 1, off-diagonal in vZ[v]"};
    for (std::size_t c = 0; c < drel.cols() && tri.pass; ++c) {
        const auto& lam = drel.col_labels()[c];
        auto rr = drel.row_of(lam);
        if (!rr || !drel.at(*rr, c).is_one()) {
            tri.pass = false;
            tri.detail = "diagonal entry of " + to_string(lam) + " is not 1";
            break;
        }
        for (std::size_t r = 0; r < drel.rows(); ++r)
            if (r != *rr && !drel.at(r, c).in_vZv()) {
                tri.pass = false;
                tri.detail = "entry " + detail::cell_name(drel, r, c) + " is not in vZ[v]";
                break;
            }
    }
    rep.items.push_back(tri);

    CheckResult dom{"dominance", true, "nonzero entries only at lambda >= nu"};
    for (std::size_t c = 0; c < drel.cols() && dom.pass; ++c)
        for (std::size_t r = 0; r < drel.rows(); ++r) {
            if (drel.at(r, c).is_zero()) continue;
            const auto rel = compare_dominance(drel.col_labels()[c], drel.row_labels()[r], s);
            if (rel != Dominance::Greater && rel != Dominance::Equal) {
                dom.pass = false;
                dom.detail = "nonzero entry " + detail::cell_name(drel, r, c) + " with relation " + to_string(rel);
                break;
            }
        }
    rep.items.push_back(dom);

    CheckResult pos{"positivity", true, "entries in N[v]"};
    for (std::size_t r = 0; r < drel.rows() && pos.pass; ++r)
        for (std::size_t c = 0; c < drel.cols(); ++c)
            if (!drel.at(r, c).has_nonnegative_coefficients()) {
                pos.pass = false;
                pos.detail = "negative coefficient at " + detail::cell_name(drel, r, c);
                break;
            }
    rep.items.push_back(pos);

    CheckResult one{"at_one", true, "D_e(1) = D_inf(1) * D_rel(1)"};
    if (multiply(evaluate_at_one(dinf), evaluate_at_one(drel)) != evaluate_at_one(de)) {
        one.pass = false;
        one.detail = "integer product differs at v = 1";
    }
    rep.items.push_back(one);
    return rep;
}

} // namespace fockcb
