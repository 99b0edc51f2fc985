#pragma once

#include <string>
#include <vector>

#include "hochbv/hochschild.hpp"

namespace hochbv {

/* Component slot of a homotopy inner product F = {F_{p,q}}: p algebra
 * arguments, one module argument, q algebra arguments, value in the dual
 * module.  Keys store normalized argument words; the module index runs
 * over the full module basis. */
struct HipKey {
    Word left;
    std::size_t m = 0;
    Word right;
    auto operator<=>(const HipKey&) const = default;
};

struct HomotopyInnerProduct {
    int degree = 0;
    std::map<HipKey, F2Vector> comps;  // value in dual-module coordinates

    bool is_zero() const { return comps.empty(); }
    F2Vector at(const HipKey& k, std::size_t dual_dim) const;
    void add(const HipKey& k, const F2Vector& v);
    int max_p() const;
    int max_q() const;

    bool operator==(const HomotopyInnerProduct& o) const { return comps == o.comps; }
};

// restriction to components with p <= bound and q <= bound
HomotopyInnerProduct restrict_pq(const HomotopyInnerProduct& F, int pq_bound);

/* Symbolic component with star slots: a starred letter stands for any
 * number (>= 0) of consecutive repetitions.  Letters are generator
 * names. */
struct PatternSlot {
    std::string letter;
    bool star = false;
};

struct PatternComponent {
    std::vector<PatternSlot> left;
    std::string m;
    std::vector<PatternSlot> right;
    std::string out;
};

struct PatternHIP {
    std::string name;
    std::string algebra;  // builtin algebra the letters refer to
    std::vector<PatternComponent> comps;
};

// "left: [b01* c012] m: e0 right: [] out: b01", one component per line
std::string serialize_pattern(const PatternHIP& P);
PatternHIP parse_pattern(const std::string& text);

/* Contexts for inner products on (A, M): the Hochschild complexes with
 * coefficients in M and in its dual, plus the reverse tables for the
 * module and value slots of the inner-product differential. */
class HipContext {
public:
    HipContext(DgAlgebra A, DgBimodule M, int arity_bound);

    const DgAlgebra& algebra() const { return ch_m_.algebra(); }
    const DgBimodule& module() const { return ch_m_.module(); }
    const DgBimodule& dual() const { return ch_dual_.module(); }
    const ComplementBasis& letters() const { return ch_m_.letters(); }
    const CochainComplex& coefficients() const { return ch_m_; }
    const CochainComplex& dual_coefficients() const { return ch_dual_; }

    HomotopyInnerProduct expand_pattern(const PatternHIP& P, int pq_bound) const;

    /* Structural differential, assembled from reverse tables.  All
     * components are returned; when F is the truncated expansion of an
     * infinite family, components with p or q past the expansion bound
     * also depend on missing components of F, so checks restrict to the
     * bound via restrict_pq. */
    HomotopyInnerProduct differential(const HomotopyInnerProduct& F) const;

    // direct evaluation of (DF) at one key from the defining formulas
    F2Vector differential_at(const HomotopyInnerProduct& F, const HipKey& k) const;

    bool is_homotopy_inner_product(const HomotopyInnerProduct& F, int pq_bound,
                                   std::string* witness = nullptr) const;

    // DF == rhs on all components with p, q <= pq_bound
    bool boundary_identity(const HomotopyInnerProduct& F, const HomotopyInnerProduct& rhs,
                           int pq_bound, std::string* witness = nullptr) const;

    // induced cochain map CH(A,M) -> CH(A,M*), phi |-> F(-; phi(-); -)
    HochschildCochain ch_of_hip(const HomotopyInnerProduct& F,
                                const HochschildCochain& phi) const;

    /* Cyclization: inserts phi into every argument slot of F around the
     * cyclic word, with the module slot of F taken at the unit.  Requires
     * M = A. */
    HochschildCochain z_operator(const HomotopyInnerProduct& F,
                                 const HochschildCochain& phi) const;

    std::string show_key(const HipKey& k) const;
    std::string show(const HomotopyInnerProduct& F) const;

private:
    CochainComplex ch_m_;
    CochainComplex ch_dual_;
    // rev_mdiff_[m]: modules m' with d(m') containing m
    std::vector<std::vector<std::size_t>> rev_mdiff_;
    // rev_left_[m]: (letter y, module m') with g_y.m' containing m
    std::vector<std::vector<std::pair<std::uint8_t, std::size_t>>> rev_left_;
    // rev_right_[m]: (module m', letter z) with m'.g_z containing m
    std::vector<std::vector<std::pair<std::size_t, std::uint8_t>>> rev_right_;
    // val_right_[y]: nu |-> nu(- . g_y),  val_left_[z]: nu |-> nu(g_z . -)
    std::vector<F2Matrix> val_right_;
    std::vector<F2Matrix> val_left_;
};

/* Pullback along a dg-algebra morphism f: B -> A of an inner product on
 * (A, A), transporting the module slots along f as well; the result is an
 * inner product on (B, B). */
HomotopyInnerProduct pullback_hip(const DgMorphism& f, const HipContext& src,
                                  const HipContext& dst, const HomotopyInnerProduct& F);

struct HipCatalogEntry {
    std::string name;
    std::string algebra;
    PatternHIP pattern;
};

/* Builtin inner products: the strict sphere pairing, its homotopy
 * extension, the simplex families, the simplicial sphere product, and the
 * non-Poincare-duality counterexample. */
std::vector<HipCatalogEntry> catalog_hips();
PatternHIP builtin_hip(std::string_view name);

}  // namespace hochbv
