/* Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
 * failure.  Budgets are wall-clock upper bounds; a criterion over budget
 * fails even when its checks hold. */

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "hochbv/bv.hpp"
#include "property_suites.hpp"

using namespace hochbv;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = budget_s <= 0 || secs < budget_s;
    if (!in_budget && detail.empty())
        detail = "over budget: " + std::to_string(secs) + " s";
    bool pass = ok && in_budget;
    if (!pass) ++failures;

    std::printf("%s  criterion %2d: %s  [%.2f s%s]\n", pass ? "PASS" : "FAIL", number,
                title.c_str(), secs,
                budget_s > 0 ? (" / " + std::to_string(static_cast<int>(budget_s)) + " s").c_str()
                             : "");
    if (!pass && !detail.empty()) std::printf("      %s\n", detail.c_str());
}

PatternHIP edge_pattern(const std::string& i, const std::string& j) {
    std::string b = "b" + i + j;
    return parse_pattern("left: [" + b + "*] m: e" + i + " right: [] out: " + b +
                         "\nleft: [" + b + "*] m: " + b + " right: [] out: e" + j);
}

bool expect(bool cond, const std::string& msg, std::string& detail) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

} // namespace

int main() {
    criterion(1, "interval and triangle boundary identities", 10, [](std::string& detail) {
        bool ok = true;
        {
            DgAlgebra A1 = make_simplex_algebra(1);
            HipContext c1(A1, free_bimodule(A1), 9);
            HomotopyInnerProduct F01 = c1.expand_pattern(builtin_hip("simplex-1"), 8);
            HomotopyInnerProduct rhs = c1.expand_pattern(builtin_hip("simplex-0"), 8);
            for (const auto& [k, v] :
                 c1.expand_pattern(parse_pattern("left: [] m: e1 right: [] out: e1"), 8).comps)
                rhs.add(k, v);
            std::string w;
            ok &= expect(c1.boundary_identity(F01, rhs, 8, &w),
                         "interval identity broke: " + w, detail);
        }
        {
            DgAlgebra A2 = make_simplex_algebra(2);
            HipContext c2(A2, free_bimodule(A2), 6);
            HomotopyInnerProduct F012 = c2.expand_pattern(builtin_hip("simplex-2"), 5);
            HomotopyInnerProduct rhs = c2.expand_pattern(edge_pattern("0", "1"), 5);
            for (const auto& [k, v] : c2.expand_pattern(edge_pattern("0", "2"), 5).comps)
                rhs.add(k, v);
            for (const auto& [k, v] : c2.expand_pattern(edge_pattern("1", "2"), 5).comps)
                rhs.add(k, v);
            std::string w;
            ok &= expect(c2.boundary_identity(F012, rhs, 5, &w),
                         "triangle identity broke: " + w, detail);
        }
        return ok;
    });

    criterion(2, "tetrahedral inner product is closed at bound 5", 30, [](std::string& detail) {
        DgAlgebra C = make_sphere_cochain_algebra();
        HipContext ctx(C, free_bimodule(C), 5);
        HomotopyInnerProduct F = ctx.expand_pattern(builtin_hip("sphere-cochain"), 5);
        std::string w;
        bool ok = expect(ctx.is_homotopy_inner_product(F, 5, &w), "DF != 0: " + w, detail);
        ok &= expect(F.comps.size() == 384,
                     "expected 384 components, got " + std::to_string(F.comps.size()), detail);
        return ok;
    });

    criterion(3, "pullback of the tetrahedral product is the homotopy product", 1,
              [](std::string& detail) {
                  DgMorphism f = make_quasi_iso_f();
                  bool ok = true;
                  for (int b = 0; b <= 6; ++b) {
                      HipContext over_h(f.source, free_bimodule(f.source), std::max(b, 1));
                      HipContext over_c(f.target, free_bimodule(f.target), std::max(b, 1));
                      HomotopyInnerProduct FC =
                          over_c.expand_pattern(builtin_hip("sphere-cochain"), b);
                      HomotopyInnerProduct pulled = pullback_hip(f, over_c, over_h, FC);
                      HomotopyInnerProduct Ft =
                          over_h.expand_pattern(builtin_hip("sphere-tilde"), b);
                      ok &= expect(pulled == Ft,
                                   "pullback differs at bound " + std::to_string(b), detail);
                  }
                  return ok;
              });

    criterion(4, "tetrahedral cohomology is one line in degrees 0 and -2, f bijective", 1,
              [](std::string& detail) {
                  GradedBasis H = algebra_cohomology(make_sphere_cochain_algebra());
                  auto dims = H.dims();
                  std::size_t total = 0;
                  for (const auto& [d, n] : dims) total += n;
                  bool ok = expect(dims.count(0) && dims.at(0) == 1, "degree 0 is not a line",
                                   detail);
                  ok &= expect(dims.count(-2) && dims.at(-2) == 1, "degree -2 is not a line",
                               detail);
                  ok &= expect(total == 2, "extra cohomology beyond degrees 0 and -2", detail);
                  std::string w;
                  ok &= expect(cohomology_map_bijective(make_quasi_iso_f(), &w),
                               "induced map not bijective: " + w, detail);
                  return ok;
              });

    criterion(5, "BV tables match the expected strict and homotopy tables, K = 8", 5,
              [](std::string& detail) {
                  SphereHH S(8);
                  BvTable ts = hh_bv_table(
                      S, S.context().expand_pattern(builtin_hip("sphere-strict"), 2), "strict");
                  BvTable tt = hh_bv_table(
                      S, S.context().expand_pattern(builtin_hip("sphere-tilde"), 2), "homotopy");
                  bool ok = expect(ts == expected_strict_hh_table(8), "strict table differs",
                                   detail);
                  ok &= expect(tt == expected_homotopy_hh_table(8), "homotopy table differs",
                               detail);
                  // mod-2 pattern on the psi column
                  for (int k = 0; k <= 8; ++k) {
                      TableElt ds = ts.delta[BvTable::idx(k, 1)];
                      TableElt dt = tt.delta[BvTable::idx(k, 1)];
                      TableElt want_s = ts.zero_elt();
                      TableElt want_t = tt.zero_elt();
                      if (k % 2 == 1) {
                          want_s.v.flip(BvTable::idx(k - 1, 0));
                          want_t.v.flip(BvTable::idx(k - 1, 0));
                          if (k + 1 <= 8)
                              want_t.v.flip(BvTable::idx(k + 1, 1));
                          else
                              want_t = tt.out_of_range();
                      }
                      ok &= expect(ds == want_s,
                                   "strict delta(psi_" + std::to_string(k) + ") off", detail);
                      ok &= expect(dt.in_range == want_t.in_range &&
                                       (!dt.in_range || dt.v == want_t.v),
                                   "homotopy delta(psi_" + std::to_string(k) + ") off", detail);
                  }
                  return ok;
              });

    criterion(6, "transfer operator identities for all k <= 8", 0, [](std::string& detail) {
        SphereHH S(8);
        const HHPair& P = S.pair();
        const HipContext& ctx = S.context();
        HomotopyInnerProduct Fs = ctx.expand_pattern(builtin_hip("sphere-strict"), 2);
        HomotopyInnerProduct Ft = ctx.expand_pattern(builtin_hip("sphere-tilde"), 2);
        HHOperator Bop = connes_b_operator(P);
        HHOperator Zs = z_operator_map(ctx, Fs, P);
        HHOperator Zt = z_operator_map(ctx, Ft, P);
        HHOperator Fop = induced_hh_map(ctx, Ft, P, "homotopy");

        bool ok = true;
        for (int k = 0; k <= 8; ++k) {
            // B(theta_k) = 0 and B(chi_k) = k theta_{k-1}
            F2Vector bt = Bop.mats.at(k + 2).mul(S.dual_coords(S.theta(k)));
            ok &= expect(bt.is_zero(), "B(theta_" + std::to_string(k) + ") != 0", detail);
            F2Vector bc = Bop.mats.at(k).mul(S.dual_coords(S.chi(k)));
            F2Vector want = k % 2 ? S.dual_coords(S.theta(k - 1))
                                  : F2Vector(bc.size());
            ok &= expect(bc == want, "B(chi_" + std::to_string(k) + ") off", detail);

            // Z^F(psi_k) = k theta_{k-1}, Z^F(phi_k) = 0
            F2Vector zpsi = Zs.mats.at(k - 2).mul(S.a_coords(S.psi(k)));
            F2Vector wpsi = k % 2 ? S.dual_coords(S.theta(k - 1)) : F2Vector(zpsi.size());
            ok &= expect(zpsi == wpsi, "Z(psi_" + std::to_string(k) + ") off", detail);
            F2Vector zphi = Zs.mats.at(k).mul(S.a_coords(S.phi(k)));
            ok &= expect(zphi.is_zero(), "Z(phi_" + std::to_string(k) + ") != 0", detail);

            // homotopy side: Z(phi_k) = k theta_{k+1}
            F2Vector ztphi = Zt.mats.at(k).mul(S.a_coords(S.phi(k)));
            F2Vector wtphi = k % 2 ? S.dual_coords(S.theta(k + 1)) : F2Vector(ztphi.size());
            ok &= expect(ztphi == wtphi, "homotopy Z(phi_" + std::to_string(k) + ") off", detail);

            // inverse transfer: theta_k pulls back to phi_k + psi_{k+2}
            auto inv = inverse(Fop.mats.at(k));
            ok &= expect(inv.has_value(), "transfer not invertible at degree " + std::to_string(k),
                         detail);
            if (inv) {
                F2Vector got = inv->mul(S.dual_coords(S.theta(k)));
                F2Vector exp_v = S.a_coords(S.phi(k));
                exp_v ^= S.a_coords(S.psi(k + 2));
                ok &= expect(got == exp_v,
                             "inverse transfer of theta_" + std::to_string(k) + " off", detail);
            }
        }
        return ok;
    });

    criterion(7, "homotopy table maps isomorphically onto the model, K = 8", 0,
              [](std::string& detail) {
                  ThetaReport t = check_theta_iso(8);
                  return expect(t.pass(), "theta check: " + t.witness + " " + t.check.witness,
                                detail);
              });

    criterion(8, "exhaustive isomorphism search: strict fails, homotopy finds theta", 0,
              [](std::string& detail) {
                  BvTable model = string_topology_model(8);
                  IsoSearchResult s2m = bv_iso_search(expected_strict_hh_table(8), model);
                  bool ok = expect(s2m.deg1_dim == 2 && s2m.degm2_dim == 1,
                                   "unexpected graded dimensions", detail);
                  std::size_t want =
                      ((std::size_t{1} << s2m.deg1_dim) - 1) * ((std::size_t{1} << s2m.degm2_dim) - 1);
                  ok &= expect(s2m.candidates.size() == want && want == 3,
                               "candidate set is not the complete 3-element set", detail);
                  ok &= expect(s2m.survivors().empty(), "a strict candidate survived", detail);

                  IsoSearchResult t2m = bv_iso_search(expected_homotopy_hh_table(8), model);
                  ok &= expect(t2m.candidates.size() == 3, "homotopy candidate set wrong", detail);
                  auto surv = t2m.survivors();
                  ok &= expect(surv.size() == 1, "expected exactly one survivor", detail);
                  if (surv.size() == 1) {
                      const DerivedMorphism& m = t2m.candidates[surv[0]].morphism;
                      F2Vector phi1(model.labels()), psi0(model.labels());
                      phi1.flip(BvTable::idx(1, 0));
                      phi1.flip(BvTable::idx(3, 1));
                      psi0.flip(BvTable::idx(0, 1));
                      ok &= expect(m.img_phi1 == phi1 && m.img_psi0 == psi0,
                                   "survivor is not theta", detail);
                      // full theta formula on every in-range label
                      for (int k = 0; k <= 8; ++k) {
                          const TableElt& ip = m.images[BvTable::idx(k, 0)];
                          if (ip.in_range) {
                              F2Vector w(model.labels());
                              w.flip(BvTable::idx(k, 0));
                              if (k % 2 && k + 2 <= 8) w.flip(BvTable::idx(k + 2, 1));
                              bool fits = !(k % 2) || k + 2 <= 8;
                              ok &= expect(!fits || ip.v == w,
                                           "theta(phi_" + std::to_string(k) + ") off", detail);
                          }
                          const TableElt& iq = m.images[BvTable::idx(k, 1)];
                          if (iq.in_range) {
                              F2Vector w(model.labels());
                              w.flip(BvTable::idx(k, 1));
                              ok &= expect(iq.v == w, "theta(psi_" + std::to_string(k) + ") off",
                                           detail);
                          }
                      }
                  }
                  return ok;
              });

    criterion(9, "counterexample: duality isomorphism without the BV transfer", 1,
              [](std::string& detail) {
                  DgAlgebra A = make_counterexample_algebra();
                  HipContext ctx(A, free_bimodule(A), 6);
                  HomotopyInnerProduct F = ctx.expand_pattern(builtin_hip("counterexample"), 6);

                  bool ok = expect(ctx.differential(F).comps.empty(), "DF != 0", detail);

                  // F(phi) for phi: 1 -> e has exactly the three listed values
                  HochschildCochain phi = ctx.coefficients().single(
                      Word{}, static_cast<std::size_t>(A.index_of("e")));
                  HochschildCochain fphi = ctx.ch_of_hip(F, phi);
                  auto letter = [&](const char* n) {
                      return static_cast<std::uint8_t>(
                          ctx.letters().letter_of_basis[static_cast<std::size_t>(A.index_of(n))]);
                  };
                  std::uint8_t b = letter("b"), c = letter("c");
                  auto dual = [&](const char* n) {
                      return F2Vector::basis(3, static_cast<std::size_t>(A.index_of(n)));
                  };
                  std::map<Word, F2Vector> fphi_want{
                      {Word{}, dual("c")}, {Word{c, b, c}, dual("e")}, {Word{b, b, b}, dual("c")}};
                  ok &= expect(fphi.comps == fphi_want, "F(phi) evaluations differ", detail);

                  // B(F(phi)): exactly (c,b) -> c*, (b,c) -> c*, (c,c) -> b*
                  HochschildCochain bf = ctx.dual_coefficients().connes_b(fphi);
                  std::map<Word, F2Vector> bf_want{
                      {Word{c, b}, dual("c")}, {Word{b, c}, dual("c")}, {Word{c, c}, dual("b")}};
                  ok &= expect(bf.comps == bf_want, "B(F(phi)) evaluations differ", detail);

                  // Z^F(phi) = 0, yet [B(F(phi))] != 0
                  ok &= expect(ctx.z_operator(F, phi).is_zero(), "Z(phi) != 0", detail);

                  HHBasis h = hh_basis(ctx.dual_coefficients(), 2, 4);
                  ExactnessCertificate cert =
                      nonexactness_certificate(ctx.dual_coefficients(), h, bf);
                  ok &= expect(cert.closed && !cert.exact && cert.arity_graded,
                               "certificate: " + cert.detail, detail);
                  ok &= expect(cert.preimage_space_dims.count(1) &&
                                   cert.preimage_space_dims.at(1) == 0,
                               "degree-4 one-input space is not empty", detail);

                  PdReport pd = check_pd_structure(ctx, F, -2, 1);
                  ok &= expect(pd.closed && pd.iso, "condition (1) unexpectedly fails", detail);
                  ok &= expect(!pd.transfer_equals_delta && !pd.pass(),
                               "condition (2) unexpectedly holds", detail);
                  return ok;
              });

    criterion(10, "seven property suites, 200 seeded cases each", 0, [](std::string& detail) {
        bool ok = true;
        for (const auto& name : props::property_names()) {
            auto r = props::run_property(name, 200);
            ok &= expect(r.pass && r.cases >= 200, name + ": " + r.detail, detail);
        }
        return ok;
    });

    if (failures == 0)
        std::printf("acceptance: all 10 criteria hold\n");
    else
        std::printf("acceptance: %d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
