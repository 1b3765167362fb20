#pragma once

// Text, CSV, LaTeX and JSON renderings of the library's values.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "abacus.hpp"
#include "canonical.hpp"
#include "combinatorics.hpp"
#include "crystal.hpp"
#include "factorize.hpp"
#include "fock.hpp"
#include "laurent.hpp"

namespace fockcb {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON

/// [[exponent, coefficient], ...] in increasing exponent order. Coefficients
/// that do not fit in int64 are written as decimal strings.
inline Json to_json(const LaurentPoly& p) {
    Json out = Json::array();
    for (const auto& [exp, c] : p.terms()) {
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
            out.push_back(Json::array({exp, static_cast<std::int64_t>(c)}));
        else
            out.push_back(Json::array({exp, c.str()}));
    }
    return out;
}

inline LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("Laurent polynomial JSON must be an array of [exponent, coefficient]");
    LaurentPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
            throw ParseError("bad Laurent term in JSON");
        const int exp = term[0].get<int>();
        if (term[1].is_string())
            p.add_term(exp, BigInt(term[1].get<std::string>()));
        else if (term[1].is_number_integer())
            p.add_term(exp, BigInt(term[1].get<std::int64_t>()));
        else
            throw ParseError("bad Laurent coefficient in JSON");
    }
    return p;
}

inline Json to_json(const FockVector& x) {
    Json out = Json::array();
    for (const auto& lam : x.sorted_support())
        out.push_back({{"multipartition", to_string(lam)}, {"coeff", to_json(x.coeff(lam))}});
    return out;
}

inline Json to_json(const PolyMatrix& m) {
    Json rows = Json::array(), cols = Json::array(), entries = Json::array();
    for (const auto& r : m.row_labels()) rows.push_back(to_string(r));
    for (const auto& c : m.col_labels()) cols.push_back(to_string(c));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
        entries.push_back(std::move(row));
    }
    return {{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

inline PolyMatrix matrix_from_json(const Json& j) {
    try {
        std::vector<Multipartition> rows, cols;
        for (const auto& r : j.at("rows")) rows.push_back(parse_multipartition(r.get<std::string>()));
        for (const auto& c : j.at("cols")) cols.push_back(parse_multipartition(c.get<std::string>()));
        PolyMatrix m(rows, cols);
        const auto& entries = j.at("entries");
        if (entries.size() != m.rows()) throw ParseError("matrix JSON: row count differs from labels");
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (entries[r].size() != m.cols()) throw ParseError("matrix JSON: column count differs from labels");
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = laurent_from_json(entries[r][c]);
        }
        return m;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("matrix JSON: ") + ex.what());
    }
}

inline Json to_json(const CrystalGraph& g) {
    Json vertices = Json::array(), edges = Json::array();
    for (int n = 0; n <= g.max_rank(); ++n)
        for (const auto& lam : g.vertices(n)) vertices.push_back({{"label", to_string(lam)}, {"rank", n}});
    for (const auto& ed : g.edges())
        edges.push_back({{"source", to_string(ed.source)}, {"residue", ed.residue}, {"target", to_string(ed.target)}});
    return {{"e", g.modulus().str()},
            {"charge", g.charge().s},
            {"max_rank", g.max_rank()},
            {"vertices", vertices},
            {"edges", edges}};
}

inline Json to_json(const PeelingSequence& seq) {
    Json out = Json::array();
    for (const auto& st : seq) out.push_back(Json::array({st.residue, st.multiplicity}));
    return out;
}

inline Json to_json(const VerificationReport& rep) {
    Json out = Json::array();
    for (const auto& item : rep.items) out.push_back({{"check", item.check}, {"pass", item.pass}, {"detail", item.detail}});
    return out;
}

inline Json to_json(const AbacusData& a) {
    return {{"e", a.e}, {"l", a.l}, {"k", a.k},   {"w", a.w}, {"c", a.c},         {"d", a.d},
            {"m", a.m}, {"phi", a.phi}, {"a", a.a}, {"b", a.b}, {"zeta", a.zeta}};
}

// ---------------------------------------------------------------------------
// Matrix tables

/// Comma-separated; the first column holds row labels, cells use the
/// "c*v^k" grammar with "." for zero.
inline std::string to_csv(const PolyMatrix& m) {
    std::ostringstream os;
    os << "label";
    for (const auto& c : m.col_labels()) os << ',' << to_string(c);
    os << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << to_string(m.row_labels()[r]);
        for (std::size_t c = 0; c < m.cols(); ++c) os << ',' << to_cell(m.at(r, c));
        os << '\n';
    }
    return os.str();
}

inline PolyMatrix matrix_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw ParseError("CSV matrix: missing header");
    auto head = detail::split(line, ',');
    if (head.empty() || head[0] != "label") throw ParseError("CSV matrix: header must start with 'label'");
    std::vector<Multipartition> cols, rows;
    for (std::size_t k = 1; k < head.size(); ++k) cols.push_back(parse_multipartition(head[k]));
    std::vector<std::vector<std::string>> cells;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto tok = detail::split(line, ',');
        if (tok.size() != head.size()) throw ParseError("CSV matrix: ragged row '" + line + "'");
        rows.push_back(parse_multipartition(tok[0]));
        cells.emplace_back(tok.begin() + 1, tok.end());
    }
    PolyMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) m.at(r, c) = parse_cell(cells[r][c]);
    return m;
}

namespace detail {
inline std::size_t display_width(const std::string& s) {
    // count code points, not bytes
    std::size_t n = 0;
    for (unsigned char ch : s)
        if ((ch & 0xC0) != 0x80) ++n;
    return n;
}
inline std::string pad_left(const std::string& s, std::size_t w) {
    const std::size_t n = display_width(s);
    return n >= w ? s : std::string(w - n, ' ') + s;
}
} // namespace detail

inline std::string to_text(const PolyMatrix& m) {
    std::vector<std::string> row_names, col_names;
    for (const auto& r : m.row_labels()) row_names.push_back(display_label(r));
    for (const auto& c : m.col_labels()) col_names.push_back(display_label(c));
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    std::size_t label_w = 0;
    for (const auto& n : row_names) label_w = std::max(label_w, detail::display_width(n));
    std::vector<std::size_t> w(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) w[c] = detail::display_width(col_names[c]);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            cells[r][c] = m.at(r, c).is_zero() ? "." : to_string(m.at(r, c));
            w[c] = std::max(w[c], detail::display_width(cells[r][c]));
        }
    std::ostringstream os;
    os << std::string(label_w, ' ');
    for (std::size_t c = 0; c < m.cols(); ++c) os << "  " << detail::pad_left(col_names[c], w[c]);
    os << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << detail::pad_left(row_names[r], label_w);
        for (std::size_t c = 0; c < m.cols(); ++c) os << "  " << detail::pad_left(cells[r][c], w[c]);
        os << '\n';
    }
    return os.str();
}

inline std::string latex_label(const Multipartition& lam) {
    std::string out = "(";
    for (std::size_t c = 0; c < lam.level(); ++c) {
        if (c) out += ",";
        if (lam[c].empty()) {
            out += "\\emptyset";
            continue;
        }
        out += "(";
        for (std::size_t a = 0; a < lam[c].size(); ++a) {
            if (a) out += ".";
            out += std::to_string(lam[c][a]);
        }
        out += ")";
    }
    return out + ")";
}

inline std::string latex_poly(const LaurentPoly& p) {
    if (p.is_zero()) return ".";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const int exp = it->first;
        BigInt c = it->second;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        first = false;
        const bool unit = c == 1;
        if (exp == 0) {
            out += c.str();
            continue;
        }
        if (!unit) out += c.str();
        out += exp == 1 ? "v" : "v^{" + std::to_string(exp) + "}";
    }
    return out;
}

inline std::string to_latex(const PolyMatrix& m) {
    std::ostringstream os;
    os << "\\begin{array}{c|" << std::string(m.cols(), 'c') << "}\n";
    for (const auto& c : m.col_labels()) os << " & " << latex_label(c);
    os << " \\\\\n\\hline\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << latex_label(m.row_labels()[r]);
        for (std::size_t c = 0; c < m.cols(); ++c) os << " & " << latex_poly(m.at(r, c));
        os << " \\\\\n";
    }
    os << "\\end{array}\n";
    return os.str();
}

inline std::string to_text(const CrystalGraph& g) {
    std::ostringstream os;
    os << "crystal e=" << g.modulus().str() << " charge=" << to_string(g.charge()) << " rank<=" << g.max_rank() << '\n';
    for (int n = 0; n <= g.max_rank(); ++n) {
        os << "rank " << n << " (" << g.vertices(n).size() << "):";
        for (const auto& lam : g.vertices(n)) os << ' ' << display_label(lam);
        os << '\n';
    }
    for (const auto& ed : g.edges())
        os << display_label(ed.source) << " -" << ed.residue << "-> " << display_label(ed.target) << '\n';
    return os.str();
}

inline std::string to_csv(const CrystalGraph& g) {
    std::ostringstream os;
    os << "source,residue,target\n";
    for (const auto& ed : g.edges()) os << to_string(ed.source) << ',' << ed.residue << ',' << to_string(ed.target) << '\n';
    return os.str();
}

inline std::string to_text(const AbacusData& a) {
    auto seq = [](const std::vector<int>& v) {
        std::string out = "(";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
        return out + ")";
    };
    std::ostringstream os;
    os << "e=" << a.e << " l=" << a.l << " r=" << a.k.size() << '\n';
    os << "k    = " << seq(a.k) << '\n';
    os << "w    = " << seq(a.w) << '\n';
    os << "c    = " << seq(a.c) << '\n';
    os << "d    = " << seq(a.d) << '\n';
    os << "m    = " << seq(a.m) << '\n';
    os << "phi  = " << seq(a.phi) << '\n';
    os << "a    = " << seq(a.a) << '\n';
    os << "b    = " << seq(a.b) << '\n';
    os << "zeta = " << seq(a.zeta) << '\n';
    os << '\n' << render_abacus(a);
    return os.str();
}

inline std::string to_text(const VerificationReport& rep) {
    std::ostringstream os;
    for (const auto& item : rep.items)
        os << (item.pass ? "PASS " : "FAIL ") << item.check << ": " << item.detail << '\n';
    return os.str();
}

} // namespace fockcb
