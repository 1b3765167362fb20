#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <fockcb/fockcb.hpp>

namespace {

using namespace fockcb;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string e = "2";
    std::string charge = "0";
    int rank = 0;
    std::string format = "text";
    unsigned threads = 1;
    int guard = 12;
};

struct Parsed {
    Modulus e = Modulus::finite(2);
    Multicharge s;
};

Parsed parse_config(const RunConfig& cfg) {
    Parsed p;
    p.e = parse_modulus(cfg.e);
    p.s = parse_multicharge(cfg.charge);
    if (cfg.rank < 0) throw UsageError("--rank must be >= 0");
    if (cfg.rank > cfg.guard)
        throw LimitError("rank " + std::to_string(cfg.rank) + " exceeds the guard " + std::to_string(cfg.guard) +
                         " (raise it with --guard)");
    return p;
}

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (fmt == a) return;
    throw UsageError("format '" + fmt + "' is not available for this command");
}

std::string emit_matrix(const PolyMatrix& m, const std::string& fmt) {
    if (fmt == "csv") return to_csv(m);
    if (fmt == "latex") return to_latex(m);
    if (fmt == "json") return to_json(m).dump(2) + "\n";
    return to_text(m);
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--e", cfg.e, "modulus: integer >= 2 or 'inf'")->required();
    cmd->add_option("--charge", cfg.charge, "multicharge, comma separated (e.g. 0,0)")->required();
    cmd->add_option("--rank", cfg.rank, "rank n")->required();
    cmd->add_option("--format", cfg.format, "json|csv|latex|text|dot");
    cmd->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--guard", cfg.guard, "largest rank accepted");
}

int cmd_crystal(const RunConfig& cfg) {
    require_format(cfg.format, {"json", "csv", "text", "dot"});
    const auto p = parse_config(cfg);
    const auto g = generate_component(p.e, p.s, cfg.rank);
    if (cfg.format == "json")
        std::cout << to_json(g).dump(2) << "\n";
    else if (cfg.format == "csv")
        std::cout << to_csv(g);
    else if (cfg.format == "dot")
        std::cout << to_dot(g);
    else
        std::cout << to_text(g);
    return kExitOk;
}

int cmd_canonical(const RunConfig& cfg, bool via_dominant) {
    require_format(cfg.format, {"json", "csv", "latex", "text"});
    const auto p = parse_config(cfg);
    const auto basis = via_dominant ? canonical_basis_any_charge(p.e, p.s, cfg.rank, cfg.threads)
                                    : canonical_basis(p.e, p.s, cfg.rank, cfg.threads);
    const auto m = decomposition_matrix(basis);
    if (cfg.format != "json") {
        std::cout << emit_matrix(m, cfg.format);
        return kExitOk;
    }
    Json elements = Json::array();
    for (const auto& el : basis.elements())
        elements.push_back({{"label", to_string(el.label)},
                            {"peeling", to_json(el.peeling)},
                            {"seed", to_string(el.seed)},
                            {"seed_detail", el.seed_detail},
                            {"vector", to_json(el.vector)}});
    Json out = {{"e", p.e.str()},
                {"charge", p.s.s},
                {"rank", cfg.rank},
                {"dominant_charge", basis.dominant_charge().s},
                {"matrix", to_json(m)},
                {"basis", elements}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

PolyMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return matrix_from_json(Json::parse(text));
        } catch (const nlohmann::json::exception& ex) {
            throw ParseError(std::string("bad JSON in ") + path + ": " + ex.what());
        }
    }
    return matrix_from_csv(text);
}

CheckResult compare_expected(const PolyMatrix& got, const PolyMatrix& expected) {
    CheckResult res{"expected", true, "D_rel matches the expected matrix"};
    if (got.row_labels() != expected.row_labels() || got.col_labels() != expected.col_labels()) {
        // labels may be listed in another order; compare by label
        bool same_sets = got.rows() == expected.rows() && got.cols() == expected.cols();
        for (const auto& r : expected.row_labels()) same_sets = same_sets && got.row_of(r).has_value();
        for (const auto& c : expected.col_labels()) same_sets = same_sets && got.col_of(c).has_value();
        if (!same_sets) return {"expected", false, "row or column labels differ from the expected matrix"};
    }
    for (const auto& r : expected.row_labels())
        for (const auto& c : expected.col_labels())
            if (!(got.get(r, c) == expected.get(r, c)))
                return {"expected", false,
                        "entry (" + to_string(r) + ", " + to_string(c) + "): expected " +
                            to_cell(expected.get(r, c)) + ", computed " + to_cell(got.get(r, c))};
    return res;
}

int cmd_factorize(const RunConfig& cfg, const std::string& expect_path) {
    require_format(cfg.format, {"json", "csv", "latex", "text"});
    const auto p = parse_config(cfg);
    if (p.e.is_infinite()) throw UsageError("factorize needs a finite --e");
    const auto ge = canonical_basis(p.e, p.s, cfg.rank, cfg.threads);
    const auto ginf = canonical_basis(Modulus::infinite(), p.s, cfg.rank, cfg.threads);
    const auto de = decomposition_matrix(ge);
    const auto dinf = decomposition_matrix(ginf);
    const auto drel = extract_relative(ge, ginf, cfg.threads);
    auto report = verify(de, dinf, drel, p.s);

    CheckResult oracle{"oracle", true, "back-substitution agrees with extraction"};
    try {
        if (!(back_substitution_oracle(de, dinf) == drel)) {
            oracle.pass = false;
            oracle.detail = "back-substitution differs from extraction";
        }
    } catch (const Error& ex) {
        oracle.pass = false;
        oracle.detail = ex.what();
    }
    report.items.push_back(oracle);
    if (!expect_path.empty()) report.items.push_back(compare_expected(drel, load_matrix(expect_path)));

    if (cfg.format == "json") {
        Json out = {{"e", p.e.str()},   {"charge", p.s.s},       {"rank", cfg.rank},       {"D_e", to_json(de)},
                    {"D_inf", to_json(dinf)}, {"D_rel", to_json(drel)}, {"report", to_json(report)}};
        std::cout << out.dump(2) << "\n";
    } else {
        const char* hash = cfg.format == "latex" ? "% " : "# ";
        std::cout << hash << "D_e\n" << emit_matrix(de, cfg.format) << "\n";
        std::cout << hash << "D_inf\n" << emit_matrix(dinf, cfg.format) << "\n";
        std::cout << hash << "D_rel\n" << emit_matrix(drel, cfg.format) << "\n";
        std::cout << hash << "report\n";
        for (const auto& item : report.items)
            std::cout << hash << (item.pass ? "PASS " : "FAIL ") << item.check << ": " << item.detail << "\n";
    }
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_abacus(const std::string& lam_text, const std::string& charge_text, int e, int r, int stable_for,
               const std::string& fmt) {
    require_format(fmt, {"json", "text"});
    if (e < 2) throw UsageError("--e must be an integer >= 2");
    const auto lam = parse_multipartition(lam_text);
    const auto s = parse_multicharge(charge_text);
    if (lam.level() != s.level()) throw UsageError("multipartition and charge have different levels");
    if ((r >= 0) == (stable_for >= 0)) throw UsageError("give exactly one of --r and --stable-for");
    if (stable_for >= 0 && stable_for < 2) throw UsageError("--stable-for needs e' >= 2");
    const int rr = stable_for >= 0 ? stable_r(lam, s, e, stable_for) : r;
    AbacusData data;
    try {
        data = tau_inverse(lam, s, e, rr);
    } catch (const RTooSmall& ex) {
        throw LimitError(std::string(ex.what()) + " (suggested --r " + std::to_string(ex.suggested_r) + ")");
    }
    if (fmt == "json") {
        Json out = to_json(data);
        if (stable_for >= 0) {
            out["stable_for"] = stable_for;
            out["lowest_bead"] = data.k.empty() ? Json() : Json(data.k.back());
        }
        std::cout << out.dump(2) << "\n";
    } else {
        if (stable_for >= 0)
            std::cout << "stable for e'=" << stable_for << ": r=" << rr << ", beads >= " << data.k.back() << "\n";
        std::cout << to_text(data);
    }
    return kExitOk;
}

int cmd_order(const std::string& a, const std::string& b, const std::string& charge, int pad, const std::string& fmt) {
    require_format(fmt, {"json", "text"});
    const auto lam = parse_multipartition(a);
    const auto mu = parse_multipartition(b);
    const auto s = parse_multicharge(charge);
    if (lam.level() != s.level() || mu.level() != s.level())
        throw UsageError("multipartitions and charge must have the same level");
    if (pad < 0) throw UsageError("--pad must be >= 0");
    const auto rel = compare_dominance(lam, mu, s, pad);
    if (fmt == "json")
        std::cout << Json{{"lambda", to_string(lam)}, {"mu", to_string(mu)}, {"relation", to_string(rel)}}.dump(2)
                  << "\n";
    else
        std::cout << to_string(rel) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical bases of Fock space modules and their decomposition matrices"};
    app.require_subcommand(1);

    RunConfig crystal_cfg, canonical_cfg, factorize_cfg;
    crystal_cfg.format = "text";
    auto* crystal = app.add_subcommand("crystal", "crystal graph of the empty multipartition");
    add_common(crystal, crystal_cfg);

    bool via_dominant = false;
    auto* canonical = app.add_subcommand("canonical", "canonical basis as a standard-basis matrix");
    add_common(canonical, canonical_cfg);
    canonical->add_flag("--via-dominant", via_dominant, "also verify the monomials transported from the dominant charge");

    std::string expect_path;
    auto* factorize = app.add_subcommand("factorize", "D_e, D_inf, the relative matrix and their verification");
    add_common(factorize, factorize_cfg);
    factorize->add_option("--expect", expect_path, "expected relative matrix (JSON or CSV); mismatch fails");

    std::string ab_lam, ab_charge, ab_format = "text";
    int ab_e = 2, ab_r = -1, ab_stable = -1;
    auto* abacus = app.add_subcommand("abacus", "beta-numbers, reading word and the l-runner abacus");
    abacus->add_option("--multipartition", ab_lam, "e.g. 1.1|1.1|1 ('-' for an empty component)")->required();
    abacus->add_option("--charge", ab_charge, "multicharge")->required();
    abacus->add_option("--e", ab_e, "modulus >= 2")->required();
    abacus->add_option("--r", ab_r, "number of beads");
    abacus->add_option("--stable-for", ab_stable, "e' for the common stable window");
    abacus->add_option("--format", ab_format, "json|text");

    std::string ord_lam, ord_mu, ord_charge, ord_format = "text";
    int ord_pad = 0;
    auto* order = app.add_subcommand("order", "compare two multipartitions in the dominance order");
    order->add_option("--lambda", ord_lam, "first multipartition")->required();
    order->add_option("--mu", ord_mu, "second multipartition")->required();
    order->add_option("--charge", ord_charge, "multicharge")->required();
    order->add_option("--pad", ord_pad, "extra entries per component in the gamma sequences");
    order->add_option("--format", ord_format, "json|text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return kExitUsage;
    }

    try {
        if (*crystal) return cmd_crystal(crystal_cfg);
        if (*canonical) return cmd_canonical(canonical_cfg, via_dominant);
        if (*factorize) return cmd_factorize(factorize_cfg, expect_path);
        if (*abacus) return cmd_abacus(ab_lam, ab_charge, ab_e, ab_r, ab_stable, ab_format);
        if (*order) return cmd_order(ord_lam, ord_mu, ord_charge, ord_pad, ord_format);
    } catch (const UsageError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const fockcb::ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const fockcb::InvalidArgument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const LimitError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitLimit;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
