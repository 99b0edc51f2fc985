#include <doctest.h>

#include <stdexcept>
#include "hochbv/hip.hpp"

using namespace hochbv;

namespace {

std::uint8_t letter(const HipContext& ctx, const char* name) {
    int i = ctx.algebra().index_of(name);
    REQUIRE(i >= 0);
    return ctx.letters().letter_of_basis[static_cast<std::size_t>(i)];
}

std::size_t module_index(const HipContext& ctx, const char* name) {
    int i = ctx.module().index_of(name);
    REQUIRE(i >= 0);
    return static_cast<std::size_t>(i);
}

F2Vector dual_basis(const HipContext& ctx, const char* name) {
    int i = ctx.dual().index_of(name);
    REQUIRE(i >= 0);
    return F2Vector::basis(ctx.dual().dim(), static_cast<std::size_t>(i));
}

HipContext sphere_context(int bound = 8) {
    DgAlgebra H = make_sphere_cohomology();
    return HipContext(H, free_bimodule(H), bound);
}

} // namespace

TEST_SUITE("hip") {

TEST_CASE("pattern text round-trips through the parser") {
    for (const auto& entry : catalog_hips()) {
        CAPTURE(entry.name);
        PatternHIP back = parse_pattern(serialize_pattern(entry.pattern));
        REQUIRE(back.comps.size() == entry.pattern.comps.size());

        DgAlgebra A = builtin_algebra(entry.algebra);
        HipContext ctx(A, free_bimodule(A), 4);
        CHECK(ctx.expand_pattern(back, 4) == ctx.expand_pattern(entry.pattern, 4));
    }

    PatternHIP p = parse_pattern("# comment\nleft: [b01* c012] m: e0 right: [] out: b01\n");
    REQUIRE(p.comps.size() == 1);
    CHECK(p.comps[0].left.size() == 2);
    CHECK(p.comps[0].left[0].star);
    CHECK(!p.comps[0].left[1].star);
    CHECK(p.comps[0].m == "e0");
    CHECK(p.comps[0].right.empty());

    CHECK_THROWS_WITH_AS(parse_pattern("left [x]\n"),
                         doctest::Contains("pattern line 1"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_pattern("left: [x] m: e0\nleft: [ m: e right: [] out: e\n"),
                         doctest::Contains("pattern line"), std::runtime_error);
}

TEST_CASE("star expansion of the interval inner product") {
    DgAlgebra I = make_simplex_algebra(1);
    HipContext ctx(I, free_bimodule(I), 8);
    PatternHIP P = builtin_hip("simplex-1");

    for (int bound : {0, 1, 3, 5})
        CHECK(ctx.expand_pattern(P, bound).comps.size() ==
              2 * static_cast<std::size_t>(bound + 1));

    HomotopyInnerProduct F = ctx.expand_pattern(P, 3);
    std::uint8_t b01 = letter(ctx, "b01");
    HipKey k{Word{b01, b01}, module_index(ctx, "e0"), Word{}};
    CHECK(F.at(k, ctx.dual().dim()) == dual_basis(ctx, "b01*"));
    CHECK(F.max_p() == 3);
    CHECK(F.max_q() == 0);
    CHECK(F.degree == 1);  // the b01* output raises the degree by one
}

TEST_CASE("fixed slots past the bound drop the whole component") {
    HipContext ctx = sphere_context();
    PatternHIP P = builtin_hip("sphere-tilde");
    CHECK(ctx.expand_pattern(P, 5).comps.size() == 3);
    CHECK(ctx.expand_pattern(P, 2).comps.size() == 3);
    CHECK(ctx.expand_pattern(P, 1).comps.size() == 2);  // the (s,s)-homotopy needs p = 2
    CHECK(ctx.expand_pattern(P, 0).comps.size() == 2);

    CHECK(restrict_pq(ctx.expand_pattern(P, 5), 1) == ctx.expand_pattern(P, 1));
    CHECK(restrict_pq(ctx.expand_pattern(P, 5), 0) == ctx.expand_pattern(P, 0));
}

TEST_CASE("expansion rejects ill-formed patterns") {
    HipContext ctx = sphere_context();
    CHECK_THROWS_AS(ctx.expand_pattern(parse_pattern("left: [t] m: e right: [] out: e\n"), 3),
                    std::invalid_argument);  // unknown generator
    CHECK_THROWS_AS(ctx.expand_pattern(parse_pattern("left: [s*] m: e right: [] out: e\n"), 3),
                    std::invalid_argument);  // starred letter of nonzero shifted degree
    CHECK_THROWS_AS(ctx.expand_pattern(parse_pattern("left: [] m: q right: [] out: e\n"), 3),
                    std::invalid_argument);  // unknown module element
    CHECK_THROWS_AS(
        ctx.expand_pattern(parse_pattern("left: [] m: s right: [] out: e\n"
                                         "left: [] m: e right: [] out: e\n"),
                           3),
        std::invalid_argument);  // mixed degrees
}

TEST_CASE("component accessors") {
    HipContext ctx = sphere_context();
    HomotopyInnerProduct F = ctx.expand_pattern(builtin_hip("sphere-tilde"), 4);
    std::uint8_t s = letter(ctx, "s");
    std::size_t e = module_index(ctx, "e"), sm = module_index(ctx, "s");

    CHECK(F.at(HipKey{Word{}, sm, Word{}}, 2) == dual_basis(ctx, "e*"));
    CHECK(F.at(HipKey{Word{}, e, Word{}}, 2) == dual_basis(ctx, "s*"));
    CHECK(F.at(HipKey{Word{s, s}, e, Word{}}, 2) == dual_basis(ctx, "e*"));
    CHECK(F.at(HipKey{Word{s}, e, Word{}}, 2).is_zero());
    CHECK(F.comps.size() == 3);

    HomotopyInnerProduct copy = F;
    copy.add(HipKey{Word{s, s}, e, Word{}}, dual_basis(ctx, "e*"));
    CHECK(copy.comps.size() == 2);  // xor erased the homotopy component
    CHECK(copy == ctx.expand_pattern(builtin_hip("sphere-strict"), 4));
}

TEST_CASE("differential: structural computation equals direct evaluation") {
    HipContext ctx = sphere_context(6);
    std::uint8_t s = letter(ctx, "s");
    std::size_t e = module_index(ctx, "e"), sm = module_index(ctx, "s");

    // deform the homotopy inner product by ((s); s; ()) -> e*
    HomotopyInnerProduct G = ctx.expand_pattern(builtin_hip("sphere-tilde"), 6);
    G.add(HipKey{Word{s}, sm, Word{}}, dual_basis(ctx, "e*"));

    // left action s.e = s feeds ((s,s); e; ()), right action e.s = s feeds
    // ((s); e; (s)); everything else dies in s.s = 0
    HomotopyInnerProduct dG = ctx.differential(G);
    REQUIRE(dG.comps.size() == 2);
    HipKey image{Word{s, s}, e, Word{}};
    HipKey image_r{Word{s}, e, Word{s}};
    CHECK(dG.at(image, 2) == dual_basis(ctx, "e*"));
    CHECK(dG.at(image_r, 2) == dual_basis(ctx, "e*"));
    CHECK(dG.degree == G.degree - 1);

    CHECK(ctx.differential_at(G, image) == dual_basis(ctx, "e*"));
    CHECK(ctx.differential_at(G, image_r) == dual_basis(ctx, "e*"));
    CHECK(ctx.differential_at(G, HipKey{Word{s}, sm, Word{s}}).is_zero());
    CHECK(ctx.differential_at(G, HipKey{Word{}, e, Word{}}).is_zero());

    std::string witness;
    CHECK(!ctx.is_homotopy_inner_product(G, 6, &witness));
    CHECK(!witness.empty());
    CHECK(ctx.is_homotopy_inner_product(ctx.expand_pattern(builtin_hip("sphere-tilde"), 6), 6,
                                        &witness));
}

TEST_CASE("interval family is open but satisfies the boundary identity") {
    DgAlgebra I = make_simplex_algebra(1);
    HipContext ctx(I, free_bimodule(I), 5);
    HomotopyInnerProduct F01 = ctx.expand_pattern(builtin_hip("simplex-1"), 4);

    std::string witness;
    CHECK(!ctx.is_homotopy_inner_product(F01, 4, &witness));
    CHECK(!witness.empty());

    // DF^[01] = F^[0] + F^[1]
    HomotopyInnerProduct rhs =
        ctx.expand_pattern(builtin_hip("simplex-0"), 4);
    rhs.add(HipKey{Word{}, module_index(ctx, "e1"), Word{}},
            dual_basis(ctx, "e1*"));
    witness.clear();  // only failures write it
    CHECK(ctx.boundary_identity(F01, rhs, 4, &witness));
    CHECK(witness.empty());

    rhs.add(HipKey{Word{}, module_index(ctx, "e1"), Word{}},
            dual_basis(ctx, "e0*"));
    CHECK(!ctx.boundary_identity(F01, rhs, 4, &witness));
    CHECK(!witness.empty());
}

TEST_CASE("catalog inventory") {
    std::vector<std::string> names;
    for (const auto& e : catalog_hips()) names.push_back(e.name);
    CHECK(names == std::vector<std::string>{"sphere-strict", "sphere-tilde", "simplex-0",
                                            "simplex-1", "simplex-2", "sphere-cochain",
                                            "counterexample"});
    CHECK_THROWS_AS(builtin_hip("nope"), std::invalid_argument);

    // the four-face product expands to the closed tetrahedral inner product
    DgAlgebra C = make_sphere_cochain_algebra();
    HipContext ctx(C, free_bimodule(C), 3);
    HomotopyInnerProduct F = ctx.expand_pattern(builtin_hip("sphere-cochain"), 3);
    CHECK(F.degree == 2);
    CHECK(!F.comps.empty());
    CHECK(ctx.is_homotopy_inner_product(F, 3, nullptr));
}

TEST_CASE("the three-letter counterexample inner product") {
    DgAlgebra A = make_counterexample_algebra();
    HipContext ctx(A, free_bimodule(A), 4);
    HomotopyInnerProduct F = ctx.expand_pattern(builtin_hip("counterexample"), 4);
    REQUIRE(F.comps.size() == 7);
    CHECK(F.degree == 2);

    std::uint8_t b = letter(ctx, "b"), c = letter(ctx, "c");
    std::size_t me = module_index(ctx, "e"), mb = module_index(ctx, "b"),
                mc = module_index(ctx, "c");
    std::size_t dd = ctx.dual().dim();

    CHECK(F.at(HipKey{Word{}, mc, Word{}}, dd) == dual_basis(ctx, "e*"));
    CHECK(F.at(HipKey{Word{}, mb, Word{}}, dd) == dual_basis(ctx, "b*"));
    CHECK(F.at(HipKey{Word{}, me, Word{}}, dd) == dual_basis(ctx, "c*"));
    CHECK(F.at(HipKey{Word{c, b, c}, me, Word{}}, dd) == dual_basis(ctx, "e*"));
    CHECK(F.at(HipKey{Word{b, b, b}, mc, Word{}}, dd) == dual_basis(ctx, "e*"));
    CHECK(F.at(HipKey{Word{b, b, b}, me, Word{}}, dd) == dual_basis(ctx, "c*"));
    CHECK(F.at(HipKey{Word{b, b, b}, mb, Word{}}, dd) == dual_basis(ctx, "b*"));

    CHECK(ctx.is_homotopy_inner_product(F, 4, nullptr));
}

TEST_CASE("evaluation maps phi and psi to theta and chi") {
    HipContext ctx = sphere_context(8);
    std::uint8_t s = letter(ctx, "s");
    std::size_t e = module_index(ctx, "e"), sm = module_index(ctx, "s");
    const CochainComplex& cm = ctx.coefficients();
    const CochainComplex& cd = ctx.dual_coefficients();

    auto phi = [&](int k) { return cm.single(Word(static_cast<std::size_t>(k), s), e); };
    auto psi = [&](int k) { return cm.single(Word(static_cast<std::size_t>(k), s), sm); };
    auto theta = [&](int k) {
        return cd.single(Word(static_cast<std::size_t>(k), s),
                         static_cast<std::size_t>(ctx.dual().index_of("s*")));
    };
    auto chi = [&](int k) {
        return cd.single(Word(static_cast<std::size_t>(k), s),
                         static_cast<std::size_t>(ctx.dual().index_of("e*")));
    };

    HomotopyInnerProduct strict = ctx.expand_pattern(builtin_hip("sphere-strict"), 8);
    HomotopyInnerProduct tilde = ctx.expand_pattern(builtin_hip("sphere-tilde"), 8);

    for (int k = 0; k <= 4; ++k) {
        CAPTURE(k);
        CHECK(ctx.ch_of_hip(strict, phi(k)) == theta(k));
        CHECK(ctx.ch_of_hip(strict, psi(k)) == chi(k));
        HochschildCochain t = theta(k);
        t.add(Word(static_cast<std::size_t>(k + 2), s),
              F2Vector::basis(2, static_cast<std::size_t>(ctx.dual().index_of("e*"))));
        CHECK(ctx.ch_of_hip(tilde, phi(k)) == t);  // theta_k + chi_{k+2}
        CHECK(ctx.ch_of_hip(tilde, psi(k)) == chi(k));
    }

    // Z^F(psi_k) = k theta_{k-1}, Z^F(phi_k) = 0; Z for the homotopy family adds
    // Z(phi_k) = k theta_{k+1}
    CHECK(ctx.z_operator(strict, psi(1)) == theta(0));
    CHECK(ctx.z_operator(strict, psi(2)).is_zero());
    CHECK(ctx.z_operator(strict, phi(3)).is_zero());
    CHECK(ctx.z_operator(tilde, phi(1)) == theta(2));
    CHECK(ctx.z_operator(tilde, phi(2)).is_zero());
    CHECK(ctx.z_operator(tilde, psi(3)) == theta(2));
}

TEST_CASE("pullback of the tetrahedral product is the homotopy sphere product") {
    DgMorphism f = make_quasi_iso_f();
    HipContext src(f.target, free_bimodule(f.target), 6);
    HipContext dst(f.source, free_bimodule(f.source), 6);

    for (int bound : {0, 1, 2, 4}) {
        CAPTURE(bound);
        HomotopyInnerProduct F = src.expand_pattern(builtin_hip("sphere-cochain"), bound);
        HomotopyInnerProduct pulled = pullback_hip(f, src, dst, F);
        CHECK(pulled == dst.expand_pattern(builtin_hip("sphere-tilde"), bound));
    }

    DgAlgebra A = make_counterexample_algebra();
    HipContext other(A, free_bimodule(A), 4);
    HomotopyInnerProduct G = other.expand_pattern(builtin_hip("counterexample"), 4);
    CHECK_THROWS_AS(pullback_hip(f, other, dst, G), std::invalid_argument);
}

} // TEST_SUITE
