#include "hochbv/commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>

namespace hochbv {

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

DgAlgebra resolve_algebra(const std::string& selector) {
    if (selector.rfind("file:", 0) == 0) return load_algebra_file(selector.substr(5));
    return builtin_algebra(selector);
}

namespace {

Report make_report(const RunConfig& cfg, const std::string& command) {
    Report r;
    r.command = command;
    r.config = cfg;
    r.config.command = command;
    return r;
}

void add_axioms(Report& r, const std::string& prefix, const AxiomReport& rep) {
    for (const auto& c : rep.checks) {
        CheckResult cr;
        cr.name = prefix + c.name;
        cr.pass = c.pass;
        if (!c.pass) cr.witnesses.push_back(c.witness);
        r.checks.push_back(std::move(cr));
    }
}

PatternHIP edge_pattern(const std::string& i, const std::string& j) {
    std::string b = "b" + i + j;
    return parse_pattern("left: [" + b + "*] m: e" + i + " right: [] out: " + b +
                         "\nleft: [" + b + "*] m: " + b + " right: [] out: e" + j);
}

std::string range_str(int lo, int hi) {
    return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

// rows of the delta and product tables, then the diff against `expected`
void table_checks(Report& r, const BvTable& t, const BvTable* expected,
                  const std::string& expected_ref) {
    add_axioms(r, "bv-axiom:", check_bv_table(t));

    CheckResult dt;
    dt.name = "delta-table";
    for (std::size_t a = 0; a < t.labels(); ++a)
        dt.witnesses.push_back("Delta(" + t.label_name(a) + ") = " + t.show(t.delta[a]));
    r.checks.push_back(std::move(dt));

    CheckResult pt;
    pt.name = "product-table";
    for (std::size_t a = 0; a < t.labels(); ++a)
        for (std::size_t b = a; b < t.labels(); ++b)
            pt.witnesses.push_back(t.label_name(a) + " * " + t.label_name(b) + " = " +
                                   t.show(t.prod[a][b]));
    r.checks.push_back(std::move(pt));

    if (!expected) return;
    CheckResult diff;
    diff.name = "matches-expected";
    diff.expected_ref = expected_ref;
    for (std::size_t a = 0; a < t.labels(); ++a) {
        if (!(t.delta[a] == expected->delta[a]))
            diff.witnesses.push_back("Delta(" + t.label_name(a) + "): computed " +
                                     t.show(t.delta[a]) + ", expected " +
                                     expected->show(expected->delta[a]));
        for (std::size_t b = 0; b < t.labels(); ++b)
            if (!(t.prod[a][b] == expected->prod[a][b]))
                diff.witnesses.push_back(t.label_name(a) + " * " + t.label_name(b) +
                                         ": computed " + t.show(t.prod[a][b]) + ", expected " +
                                         expected->show(expected->prod[a][b]));
    }
    diff.pass = diff.witnesses.empty();
    if (diff.pass) diff.witnesses.push_back("diff empty");
    r.checks.push_back(std::move(diff));
}

struct SearchExpectation {
    std::string name;
    std::size_t expected_survivors;
    F2Vector expected_phi1;  // checked when expected_survivors == 1
    F2Vector expected_psi0;
};

void search_check(Report& r, const BvTable& src, const BvTable& dst,
                  const SearchExpectation& e) {
    IsoSearchResult res = bv_iso_search(src, dst);
    CheckResult c;
    c.name = e.name;
    c.expected_ref = "exhaustive search over nonzero graded images";
    std::size_t want_cands =
        ((std::size_t{1} << res.deg1_dim) - 1) * ((std::size_t{1} << res.degm2_dim) - 1);
    c.witnesses.push_back("degree 1 dimension " + std::to_string(res.deg1_dim) +
                          ", degree -2 dimension " + std::to_string(res.degm2_dim) + ": " +
                          std::to_string(res.candidates.size()) + " candidates");
    for (const auto& cand : res.candidates) {
        std::string verdict = cand.check.pass() ? "survives"
                              : !cand.check.multiplicative
                                  ? "fails multiplicativity"
                                  : (!cand.check.intertwines ? "fails Delta-intertwining"
                                                             : "fails bijectivity");
        c.witnesses.push_back(src.kind0 + "_1 -> " + dst.show({cand.morphism.img_phi1, true}) +
                              ", " + src.kind1 + "_0 -> " +
                              dst.show({cand.morphism.img_psi0, true}) + ": " + verdict);
    }
    auto sv = res.survivors();
    c.pass = res.candidates.size() == want_cands && sv.size() == e.expected_survivors;
    if (c.pass && e.expected_survivors == 1) {
        const auto& m = res.candidates[sv[0]].morphism;
        c.pass = m.img_phi1 == e.expected_phi1 && m.img_psi0 == e.expected_psi0;
    }
    r.checks.push_back(std::move(c));
}

}  // namespace

Report cmd_check_dga(const RunConfig& cfg) {
    Report r = make_report(cfg, "check-dga");
    DgAlgebra A = resolve_algebra(cfg.algebra);
    add_axioms(r, "algebra:", check_dga(A));
    DgBimodule M = free_bimodule(A);
    add_axioms(r, "free-bimodule:", check_bimodule(A, M));
    add_axioms(r, "dual-bimodule:", check_bimodule(A, dual_bimodule(M, A)));
    return r;
}

Report cmd_verify_hip(const RunConfig& cfg) {
    Report r = make_report(cfg, "verify-hip");
    PatternHIP P = builtin_hip(cfg.hip);
    DgAlgebra A = builtin_algebra(P.algebra);
    HipContext ctx(A, free_bimodule(A), cfg.bound);
    HomotopyInnerProduct F = ctx.expand_pattern(P, cfg.bound);

    CheckResult c;
    c.name = "closed-at-bound";
    c.expected_ref = "catalog:" + cfg.hip;
    std::string w;
    c.pass = ctx.is_homotopy_inner_product(F, cfg.bound, &w);
    if (!c.pass) c.witnesses.push_back(w);
    c.witnesses.push_back("algebra " + P.algebra + ", degree " + std::to_string(F.degree) +
                          ", " + std::to_string(F.comps.size()) + " components at bound " +
                          std::to_string(cfg.bound));
    r.checks.push_back(std::move(c));
    return r;
}

Report cmd_local_identities(const RunConfig& cfg) {
    Report r = make_report(cfg, "local-identities");

    {
        DgAlgebra A0 = make_simplex_algebra(0);
        HipContext c0(A0, free_bimodule(A0), 2);
        CheckResult c;
        c.name = "0-simplex-closed";
        c.expected_ref = "catalog:simplex-0";
        std::string w;
        c.pass = c0.is_homotopy_inner_product(c0.expand_pattern(builtin_hip("simplex-0"), 2), 2,
                                              &w);
        if (!c.pass) c.witnesses.push_back(w);
        r.checks.push_back(std::move(c));
    }

    {
        DgAlgebra A1 = make_simplex_algebra(1);
        HipContext c1(A1, free_bimodule(A1), cfg.bound + 1);
        CheckResult c;
        c.name = "1-simplex-boundary";
        c.expected_ref = "catalog:simplex-1 vs vertex products";
        HomotopyInnerProduct F01 = c1.expand_pattern(builtin_hip("simplex-1"), cfg.bound);
        HomotopyInnerProduct rhs = c1.expand_pattern(builtin_hip("simplex-0"), cfg.bound);
        for (const auto& [k, v] :
             c1.expand_pattern(parse_pattern("left: [] m: e1 right: [] out: e1"), cfg.bound)
                 .comps)
            rhs.add(k, v);
        std::string w;
        c.pass = c1.boundary_identity(F01, rhs, cfg.bound, &w);
        if (!c.pass) c.witnesses.push_back(w);
        c.witnesses.push_back("bound " + std::to_string(cfg.bound));
        r.checks.push_back(std::move(c));
    }

    {
        int bound2 = std::min(cfg.bound, 5);
        DgAlgebra A2 = make_simplex_algebra(2);
        HipContext c2(A2, free_bimodule(A2), bound2 + 1);
        CheckResult c;
        c.name = "2-simplex-boundary";
        c.expected_ref = "catalog:simplex-2 vs edge products";
        HomotopyInnerProduct F012 = c2.expand_pattern(builtin_hip("simplex-2"), bound2);
        HomotopyInnerProduct rhs = c2.expand_pattern(edge_pattern("0", "1"), bound2);
        for (const auto& [k, v] : c2.expand_pattern(edge_pattern("0", "2"), bound2).comps)
            rhs.add(k, v);
        for (const auto& [k, v] : c2.expand_pattern(edge_pattern("1", "2"), bound2).comps)
            rhs.add(k, v);
        std::string w;
        c.pass = c2.boundary_identity(F012, rhs, bound2, &w);
        if (!c.pass) c.witnesses.push_back(w);
        c.witnesses.push_back("bound " + std::to_string(bound2));
        r.checks.push_back(std::move(c));
    }
    return r;
}

Report cmd_hh_basis(const RunConfig& cfg) {
    Report r = make_report(cfg, "hh-basis");
    DgAlgebra A = resolve_algebra(cfg.algebra);
    DgBimodule M = free_bimodule(A);
    if (cfg.dual_coefficients) M = dual_bimodule(M, A);
    CochainComplex cc(A, M, cfg.bound);
    HHBasis h = hh_basis(cc, cfg.degree_min, cfg.degree_max);

    CheckResult c;
    c.name = "hh-dimensions";
    for (const auto& [d, slice] : h.slices)
        c.witnesses.push_back("degree " + std::to_string(d) + ": dim " +
                              std::to_string(slice.reps.size()) +
                              (slice.exact ? "" : " (bound-limited)"));
    r.checks.push_back(std::move(c));
    return r;
}

Report cmd_bv_table(const RunConfig& cfg) {
    Report r = make_report(cfg, "bv-table");
    if (cfg.hip == "string-topology") {
        table_checks(r, string_topology_model(cfg.k_max), nullptr, "");
        return r;
    }
    if (cfg.hip != "sphere-strict" && cfg.hip != "sphere-tilde")
        throw std::invalid_argument("bv-table: hip must be sphere-strict, sphere-tilde or "
                                    "string-topology");
    SphereHH S(cfg.k_max);
    HomotopyInnerProduct F = S.context().expand_pattern(builtin_hip(cfg.hip), 2);
    BvTable t = hh_bv_table(S, F, "hh-" + cfg.hip);
    BvTable expected = cfg.hip == "sphere-strict" ? expected_strict_hh_table(cfg.k_max)
                                                  : expected_homotopy_hh_table(cfg.k_max);
    table_checks(r, t, &expected, "expected-table:" + cfg.hip);
    return r;
}

Report cmd_compare_bv(const RunConfig& cfg) {
    Report r = make_report(cfg, "compare-bv");
    int K = cfg.k_max;
    SphereHH S(K);
    BvTable ts = hh_bv_table(S, S.context().expand_pattern(builtin_hip("sphere-strict"), 2),
                             "hh-strict");
    BvTable tt = hh_bv_table(S, S.context().expand_pattern(builtin_hip("sphere-tilde"), 2),
                             "hh-homotopy");
    BvTable st = string_topology_model(K);

    {
        CheckResult c;
        c.name = "strict-table-matches";
        c.expected_ref = "expected-table:sphere-strict";
        c.pass = ts == expected_strict_hh_table(K);
        r.checks.push_back(std::move(c));
    }
    {
        CheckResult c;
        c.name = "homotopy-table-matches";
        c.expected_ref = "expected-table:sphere-tilde";
        c.pass = tt == expected_homotopy_hh_table(K);
        r.checks.push_back(std::move(c));
    }

    F2Vector theta_phi1(st.labels()), theta_psi0(st.labels());
    theta_phi1.set(BvTable::idx(1, 0), true);
    theta_phi1.set(BvTable::idx(3, 1), true);
    theta_psi0.set(BvTable::idx(0, 1), true);

    search_check(r, ts, st, {"no-iso-strict-to-model", 0, {}, {}});
    search_check(r, tt, st, {"iso-homotopy-to-model", 1, theta_phi1, theta_psi0});

    F2Vector id_phi1(ts.labels()), id_psi0(ts.labels());
    id_phi1.set(BvTable::idx(1, 0), true);
    id_psi0.set(BvTable::idx(0, 1), true);
    search_check(r, ts, ts, {"self-iso-strict", 1, id_phi1, id_psi0});

    {
        CheckResult c;
        c.name = "theta-formula";
        c.expected_ref = "x_k + k y_{k+2}, y_k";
        ThetaReport tr = check_theta_iso(std::max(K, 4));
        c.pass = tr.pass();
        if (!tr.witness.empty()) c.witnesses.push_back(tr.witness);
        if (!tr.check.witness.empty()) c.witnesses.push_back(tr.check.witness);
        r.checks.push_back(std::move(c));
    }
    return r;
}

Report cmd_counterexample(const RunConfig& cfg) {
    Report r = make_report(cfg, "counterexample");
    DgAlgebra A = make_counterexample_algebra();
    HipContext ctx(A, free_bimodule(A), cfg.bound);
    HomotopyInnerProduct F = ctx.expand_pattern(builtin_hip("counterexample"), cfg.bound);
    const CochainComplex& chd = ctx.dual_coefficients();

    {
        CheckResult c;
        c.name = "closed";
        c.expected_ref = "catalog:counterexample";
        HomotopyInnerProduct df = ctx.differential(F);
        c.pass = df.is_zero();
        if (!c.pass) c.witnesses.push_back("DF nonzero at " + ctx.show_key(df.comps.begin()->first));
        r.checks.push_back(std::move(c));
    }

    HochschildCochain phi =
        ctx.coefficients().single(Word{}, static_cast<std::size_t>(A.index_of("e")));

    {
        CheckResult c;
        c.name = "z-of-unit-class-vanishes";
        c.pass = ctx.z_operator(F, phi).is_zero();
        if (!c.pass) c.witnesses.push_back(chd.show(ctx.z_operator(F, phi)));
        r.checks.push_back(std::move(c));
    }

    HochschildCochain bf = chd.connes_b(ctx.ch_of_hip(F, phi));
    {
        CheckResult c;
        c.name = "b-of-f-values";
        c.expected_ref = "three nonzero evaluations on two-letter words";
        const ComplementBasis& cb = ctx.letters();
        auto letter = [&](const char* n) {
            return static_cast<std::uint8_t>(cb.letter_of_basis[A.index_of(n)]);
        };
        std::uint8_t b = letter("b"), cl = letter("c");
        HochschildCochain want = chd.make(F.degree + 1);
        F2Vector bstar(3), cstar(3);
        bstar.set(static_cast<std::size_t>(ctx.dual().index_of("b*")), true);
        cstar.set(static_cast<std::size_t>(ctx.dual().index_of("c*")), true);
        want.add(Word{b, cl}, cstar);
        want.add(Word{cl, cl}, bstar);
        want.add(Word{cl, b}, cstar);
        c.pass = bf == want && bf.degree == want.degree;
        c.witnesses.push_back("B(F(phi)) = " + chd.show(bf));
        r.checks.push_back(std::move(c));
    }

    {
        CheckResult c;
        c.name = "b-of-f-not-exact";
        c.expected_ref = "empty preimage arity";
        HHPair P = make_hh_pair(A, cfg.bound, cfg.bound + 3, cfg.degree_min, cfg.degree_max,
                                bf.degree - 1, bf.degree + 1);
        ExactnessCertificate cert = nonexactness_certificate(P.ch_dual, P.hh_dual, bf);
        c.pass = cert.closed && !cert.exact && cert.arity_graded &&
                 cert.preimage_space_dims.count(1) &&
                 cert.preimage_space_dims.at(1) == 0;
        c.witnesses.push_back(cert.detail);
        for (const auto& [arity, dim] : cert.preimage_space_dims)
            c.witnesses.push_back("preimage candidates of arity " + std::to_string(arity) +
                                  ": dim " + std::to_string(dim));
        r.checks.push_back(std::move(c));
    }

    PdReport rep = check_pd_structure(ctx, F, cfg.degree_min, cfg.degree_max);
    {
        CheckResult c;
        c.name = "pd-condition-1-holds";
        c.expected_ref = "cochain-level bijectivity over " +
                         range_str(cfg.degree_min, cfg.degree_max);
        c.pass = rep.closed && rep.iso;
        for (const auto& [d, ok] : rep.iso_per_degree)
            c.witnesses.push_back("degree " + std::to_string(d) + ": " +
                                  (ok ? "bijective" : "NOT bijective"));
        r.checks.push_back(std::move(c));
    }
    {
        CheckResult c;
        c.name = "pd-condition-2-violated";
        c.expected_ref = "[B(F(x))] vs [Z^F(x)] per class";
        c.pass = !rep.transfer_equals_delta;
        if (!rep.witness.empty()) c.witnesses.push_back(rep.witness);
        for (const auto& [d, ok] : rep.equal_per_degree)
            c.witnesses.push_back("degree " + std::to_string(d) + ": " +
                                  (ok ? "classes agree" : "classes differ"));
        r.checks.push_back(std::move(c));
    }
    return r;
}

Report cmd_report_all(const RunConfig& cfg) {
    Report r = make_report(cfg, "report-all");
    auto merge = [&](const Report& sub, const std::string& tag) {
        for (const auto& c : sub.checks) {
            CheckResult cc = c;
            cc.name = sub.command + (tag.empty() ? "" : "[" + tag + "]") + "/" + c.name;
            r.checks.push_back(std::move(cc));
        }
    };

    for (const auto& name : builtin_algebra_names()) {
        RunConfig c = cfg;
        c.algebra = name;
        merge(cmd_check_dga(c), name);
    }
    for (const char* hip :
         {"sphere-strict", "sphere-tilde", "simplex-0", "sphere-cochain", "counterexample"}) {
        RunConfig c = cfg;
        c.hip = hip;
        if (c.hip == "sphere-cochain") c.bound = std::min(cfg.bound, 5);
        merge(cmd_verify_hip(c), hip);
    }
    merge(cmd_local_identities(cfg), "");
    {
        RunConfig c = cfg;
        c.algebra = "sphere-cohomology";
        merge(cmd_hh_basis(c), "sphere-cohomology");
    }
    for (const char* hip : {"sphere-strict", "sphere-tilde", "string-topology"}) {
        RunConfig c = cfg;
        c.hip = hip;
        merge(cmd_bv_table(c), hip);
    }
    merge(cmd_compare_bv(cfg), "");
    {
        RunConfig c = cfg;
        c.bound = std::min(cfg.bound, 5);
        c.degree_min = -2;
        c.degree_max = 1;
        merge(cmd_counterexample(c), "");
    }
    return r;
}

Report run_command(const RunConfig& cfg) {
    using Fn = Report (*)(const RunConfig&);
    static const std::map<std::string, Fn> table = {
        {"check-dga", cmd_check_dga},         {"verify-hip", cmd_verify_hip},
        {"local-identities", cmd_local_identities}, {"hh-basis", cmd_hh_basis},
        {"bv-table", cmd_bv_table},           {"compare-bv", cmd_compare_bv},
        {"counterexample", cmd_counterexample}, {"report-all", cmd_report_all},
    };
    auto it = table.find(cfg.command);
    if (it == table.end()) throw std::invalid_argument("unknown command " + cfg.command);
    auto t0 = std::chrono::steady_clock::now();
    Report r = it->second(cfg);
    if (cfg.timing)
        r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    return r;
}

std::string render_text(const Report& r) {
    std::ostringstream out;
    const RunConfig& c = r.config;
    out << "hochbv " << r.version << " -- " << r.command << "\n";
    out << "config: algebra=" << c.algebra << " hip=" << c.hip << " bound=" << c.bound
        << " k_max=" << c.k_max << " degrees=" << range_str(c.degree_min, c.degree_max)
        << " dual=" << (c.dual_coefficients ? 1 : 0) << "\n\n";
    std::size_t failed = 0;
    for (const auto& ck : r.checks) {
        if (!ck.pass) ++failed;
        out << (ck.pass ? "[PASS] " : "[FAIL] ") << ck.name;
        if (!ck.expected_ref.empty()) out << " (expected: " << ck.expected_ref << ")";
        out << "\n";
        for (const auto& w : ck.witnesses) out << "    " << w << "\n";
    }
    out << "\n";
    if (failed)
        out << failed << " of " << r.checks.size() << " checks failed\n";
    else
        out << "all " << r.checks.size() << " checks passed\n";
    if (r.timing_ms) out << "timing: " << r.timing_ms << " ms\n";
    return out.str();
}

std::string render_json(const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    const RunConfig& c = r.config;
    j["config"] = {{"command", c.command},
                   {"algebra", c.algebra},
                   {"hip", c.hip},
                   {"bound", c.bound},
                   {"k_max", c.k_max},
                   {"degree_min", c.degree_min},
                   {"degree_max", c.degree_max},
                   {"dual_coefficients", c.dual_coefficients},
                   {"format", c.format},
                   {"out", c.out},
                   {"timing", c.timing}};
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& ck : r.checks)
        j["checks"].push_back({{"name", ck.name},
                               {"pass", ck.pass},
                               {"witnesses", ck.witnesses},
                               {"expected_ref", ck.expected_ref}});
    j["timing_ms"] = r.timing_ms;
    j["version"] = r.version;
    return j.dump(2) + "\n";
}

int emit_report(const Report& r, std::ostream& console) {
    std::string text = r.config.format == "json" ? render_json(r) : render_text(r);
    if (!r.config.out.empty()) {
        std::ofstream f(r.config.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + r.config.out);
        f << text;
    } else {
        console << text;
    }
    return r.all_pass() ? 0 : 1;
}

}  // namespace hochbv
