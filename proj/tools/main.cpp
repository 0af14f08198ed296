// Command-line front end: classify / det / rank / trop / transfer /
// theorems / hyper / fuzzy over bundled systems and .sys/.hyp/matrix files.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "tsys/analysis.hpp"
#include "tsys/builtins.hpp"
#include "tsys/io.hpp"
#include "tsys/matrix.hpp"
#include "tsys/puiseux.hpp"
#include "tsys/sympoly.hpp"

using namespace tsys;

namespace {

struct Opts {
    int bound = 12;
    int pool_cap = 512;
    int samples = 1000;
    uint64_t seed = 20260823;
    std::string format = "text";
    bool machine() const { return format == "machine"; }
};

bool ends_with(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

[[noreturn]] void die(int code, const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(code);
}

System& load_system_arg(const std::string& arg) {
    register_builtins();
    if (ends_with(arg, ".sys")) {
        std::ifstream in(arg);
        if (!in) die(1, "cannot open '" + arg + "'");
        FiniteSystem* s = nullptr;
        try {
            s = &load_sys(in, arg);
        } catch (const parse_error& e) {
            die(1, arg + ": " + e.what());
        }
        VerifyReport r = s->verify();
        if (!r.ok) {
            for (const auto& m : r.errors) std::cerr << arg << ": " << m << "\n";
            std::exit(2);
        }
        return *s;
    }
    if (ends_with(arg, ".hyp")) {
        std::ifstream in(arg);
        if (!in) die(1, "cannot open '" + arg + "'");
        try {
            Hypergroup h = load_hyp(in, arg);
            return powerset_system(h);
        } catch (const parse_error& e) {
            die(1, arg + ": " + e.what());
        } catch (const std::exception& e) {
            std::cerr << arg << ": " << e.what() << "\n";
            std::exit(2);
        }
    }
    try {
        return builtin(arg);
    } catch (const std::exception& e) {
        die(1, e.what());
    }
}

KV classification_kv(const System& S, const Opts& o) {
    KV kv;
    kv.put("system", S.name);
    if (S.enumerable) {
        Classification c = classify(S, o.bound);
        kv.put("kind", c.kind);
        kv.put("characteristic", c.characteristic);
        kv.put("height", c.height);
        kv.put("meta_tangible", c.meta_tangible);
        kv.put("neg_bipotent", c.neg_bipotent);
        kv.put("idempotent", c.idempotent);
        kv.put("unique_quasi_negatives", c.unique_quasi_negatives);
        kv.put("t_reversible", c.t_reversible);
        kv.put("t_strongly_negated", c.t_strongly_negated);
        kv.put("strongly_negated", c.strongly_negated);
        kv.put("fuzzy_property", c.fuzzy_property);
        kv.put("circ_ub", c.circ_ub);
        if (!c.e.empty()) kv.put("e", c.e);
        if (!c.e_prime.empty()) kv.put("e_prime", c.e_prime);
        kv.put("case", c.case_label);
        std::string abs;
        for (const auto& a : c.absorbing_elements) abs += (abs.empty() ? "" : "; ") + a;
        kv.put("absorbing_elements", abs.empty() ? "none" : abs);
        for (const auto& [k, w] : c.witnesses) kv.put("witness." + k, w);
    } else {
        auto pool = sample_pool(S);
        bool first = true, second = true, idem = true, mt = true;
        int height = 0;
        for (const Elem& a : pool) {
            if (S.tangible(a)) (S.neg(a) == a ? second : first) = false;
            if (!(S.add(a, a) == a)) idem = false;
            int h = S.height(a, o.bound);
            height = h < 0 ? -1 : std::max(height, h);
            for (const Elem& b : pool) {
                if (!S.tangible(a) || !S.tangible(b)) continue;
                Elem s = S.add(a, b);
                if (!S.tangible(s) && !S.quasi_zero(s)) mt = false;
            }
        }
        kv.put("kind", first && second ? "first" : first ? "second" : "mixed");
        kv.put("characteristic", idem ? 1 : 0);
        kv.put("height", height);
        kv.put("meta_tangible", mt);
        kv.put("idempotent", idem);
        kv.put("note", "sampled-grid answers; remaining attributes not computed");
    }
    return kv;
}

PuiseuxSeries parse_series(const std::string& s) {
    PuiseuxSeries f;
    if (detail::strip(s) == "0") return f;
    int depth = 0;
    std::vector<std::string> terms;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '+' && depth == 0) {
            terms.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    terms.push_back(cur);
    for (const std::string& raw : terms) {
        std::string t = detail::strip(raw);
        if (t.empty()) throw std::invalid_argument("empty series term");
        Rat coeff(1), exp(0);
        size_t tp = t.find("t^(");
        if (tp == std::string::npos) {
            coeff = parse_rat(t);
        } else {
            if (t.back() != ')') throw std::invalid_argument("bad exponent in '" + t + "'");
            exp = parse_rat(t.substr(tp + 3, t.size() - tp - 4));
            std::string head = detail::strip(t.substr(0, tp));
            if (!head.empty() && head.back() == '*') head = detail::strip(head.substr(0, head.size() - 1));
            if (!head.empty()) coeff = parse_rat(head);
        }
        f.push(exp, coeff);
    }
    f.normalize();
    return f;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"systems with a negation map: classification, matrices, "
                 "tropicalization, transfer certificates"};
    app.require_subcommand(1);
    Opts o;
    app.add_option("--bound", o.bound, "height/characteristic search bound")->check(CLI::PositiveNumber);
    app.add_option("--pool-cap", o.pool_cap, "dependence-search pool cap")->check(CLI::PositiveNumber);
    app.add_option("--samples", o.samples, "sample count for randomized checks")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--format", o.format, "text | machine")
        ->check(CLI::IsMember({"text", "machine"}));

    std::string sys_arg, file_arg, series_arg, target_arg, identity_arg;
    std::vector<std::string> ids;
    int n_arg = 2;
    bool trop_check = false, hyper_from_system = false;

    auto* c_classify = app.add_subcommand("classify", "classify a system");
    c_classify->add_option("system", sys_arg)->required();

    auto* c_det = app.add_subcommand("det", "determinant of a matrix file");
    c_det->add_option("matrix", file_arg)->required();

    auto* c_rank = app.add_subcommand("rank", "ranks of a matrix file");
    c_rank->add_option("matrix", file_arg)->required();

    auto* c_trop = app.add_subcommand("trop", "tropicalize a Puiseux series");
    c_trop->add_option("series", series_arg);
    c_trop->add_option("target", target_arg);
    c_trop->add_flag("--check", trop_check, "run the seeded morphism check instead");

    auto* c_transfer = app.add_subcommand("transfer", "symbolic identity certificates");
    c_transfer->add_option("identity", identity_arg, "det_mult | adj_mult | laplace_adj")->required();
    c_transfer->add_option("--n", n_arg, "matrix dimension")->check(CLI::Range(2, 4));

    auto* c_theorems = app.add_subcommand("theorems", "run the named theorem checks");
    c_theorems->add_option("system", sys_arg)->required();
    c_theorems->add_option("ids", ids, "theorem ids (default: all)");

    auto* c_hyper = app.add_subcommand("hyper", "power-set construction / hypergroup extraction");
    c_hyper->add_option("input", sys_arg)->required();
    c_hyper->add_flag("--from-system", hyper_from_system,
                      "convert a system to its tangible hypergroup");

    auto* c_fuzzy = app.add_subcommand("fuzzy", "fuzzy-ring data and round trip");
    c_fuzzy->add_option("system", sys_arg)->required();

    CLI11_PARSE(app, argc, argv);
    register_builtins();

    try {
        if (c_classify->parsed()) {
            System& S = load_system_arg(sys_arg);
            std::cout << classification_kv(S, o).render(o.machine());
        } else if (c_det->parsed()) {
            std::ifstream in(file_arg);
            if (!in) die(1, "cannot open '" + file_arg + "'");
            Matrix m = load_matrix(in, [](const std::string& nm) -> const System* {
                register_builtins();
                return find_system(nm);
            });
            KV kv;
            Elem d = det(m);
            auto [even, odd] = det_parts(m);
            kv.put("det", m.S->str(d));
            kv.put("det_even_part", m.S->str(even));
            kv.put("det_odd_part", m.S->str(odd));
            kv.put("singularity", sing_name(singularity_class(m)));
            std::cout << kv.render(o.machine());
        } else if (c_rank->parsed()) {
            std::ifstream in(file_arg);
            if (!in) die(1, "cannot open '" + file_arg + "'");
            Matrix m = load_matrix(in, [](const std::string& nm) -> const System* {
                register_builtins();
                return find_system(nm);
            });
            bool complete = false;
            auto pool = default_pool(*m.S, m, (size_t)o.pool_cap, &complete);
            KV kv;
            kv.put("row_rank", row_rank(m, pool));
            kv.put("column_rank", column_rank(m, pool));
            kv.put("submatrix_rank", submatrix_rank(m));
            kv.put("pool_size", (int)pool.size());
            kv.put("pool_complete", complete);
            std::cout << kv.render(o.machine());
        } else if (c_trop->parsed()) {
            if (trop_check) {
                MorphismReport rep = check_morphism(o.seed, o.samples);
                std::cout << rep.text;
                return rep.violations == 0 ? 0 : 1;
            }
            if (series_arg.empty() || target_arg.empty())
                die(1, "trop needs a series and a target (or --check)");
            PuiseuxSeries f = parse_series(series_arg);
            for (const auto& tgt : trop_targets())
                if (tgt.name == target_arg) {
                    std::cout << tgt.S->str(tgt.map(*tgt.S, f)) << "\n";
                    return 0;
                }
            die(1, "unknown target '" + target_arg + "'");
        } else if (c_transfer->parsed()) {
            SymIdentityReport rep = symbolic_det_identity(n_arg, identity_arg);
            std::cout << (rep.ok ? "CERTIFIED" : "REFUSED") << "\n";
            auto vn = det_var_names(n_arg, identity_arg != "laplace_adj");
            for (const auto& [label, cert] : rep.certificates) {
                std::cout << (o.machine() ? "identity=" : "identity: ") << label << "\n";
                if (!cert.ok) {
                    std::cout << (o.machine() ? "refusal=" : "refusal: ") << cert.refusal << "\n";
                    continue;
                }
                for (const auto& l : cert.lines)
                    std::cout << mono_str(l.mono, vn) << " P=(" << l.p.first << ","
                              << l.p.second << ") Q=(" << l.q.first << "," << l.q.second
                              << ") k=" << l.k << "\n";
            }
            return rep.ok ? 0 : 1;
        } else if (c_theorems->parsed()) {
            System& S = load_system_arg(sys_arg);
            if (!S.enumerable) die(1, S.name + ": theorem checks need an enumerable carrier");
            if (ids.empty()) ids = theorem_ids();
            bool any_fail = false;
            for (const auto& id : ids) {
                TheoremResult r = check_theorem(S, id);
                std::string v = r.verdict == "pass" ? "PASS"
                              : r.verdict == "fail" ? "FAIL"
                                                    : "HYPOTHESES-NOT-MET";
                if (r.verdict == "fail") any_fail = true;
                std::cout << (o.machine() ? r.id + "=" + v : r.id + ": " + v);
                if (!r.witness.empty()) std::cout << (o.machine() ? ";" : "  [") << r.witness
                                                  << (o.machine() ? "" : "]");
                std::cout << "\n";
            }
            return any_fail ? 1 : 0;
        } else if (c_hyper->parsed()) {
            if (hyper_from_system) {
                System& S = load_system_arg(sys_arg);
                if (!S.enumerable) die(1, S.name + ": needs an enumerable carrier");
                Hypergroup h = system_to_hypergroup(S);
                VerifyReport r = h.verify(h.noncanonical);
                KV kv;
                kv.put("hypergroup", h.name);
                kv.put("size", h.size());
                kv.put("canonical_axioms", r.ok);
                std::cout << kv.render(o.machine());
                for (int a = 0; a < h.size(); ++a)
                    for (int b = a; b < h.size(); ++b)
                        std::cout << h.names[a] << " [+] " << h.names[b] << " = "
                                  << h.setstr(h.addm[a][b]) << "\n";
                return r.ok ? 0 : 2;
            }
            System& S = load_system_arg(sys_arg); // .hyp input becomes its power-set system
            KV kv = classification_kv(S, o);
            kv.put("carrier_size", (int)S.carrier().size());
            std::cout << kv.render(o.machine());
        } else if (c_fuzzy->parsed()) {
            System& S = load_system_arg(sys_arg);
            if (!S.enumerable) die(1, S.name + ": needs an enumerable carrier");
            FuzzyView f = to_fuzzy(S);
            KV kv;
            kv.put("eps", f.eps);
            std::string a0;
            for (const auto& a : f.a0) a0 += (a0.empty() ? "" : " ") + a;
            kv.put("A0", "{" + a0 + "}");
            kv.put("axioms_ok", f.ok);
            kv.put("round_trip", f.round_trip);
            if (!f.detail.empty()) kv.put("detail", f.detail);
            std::cout << kv.render(o.machine());
            return f.ok ? 0 : 2;
        }
    } catch (const std::exception& e) {
        die(1, e.what());
    }
    return 0;
}
