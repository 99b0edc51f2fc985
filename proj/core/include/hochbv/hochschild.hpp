#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hochbv/dga.hpp"

namespace hochbv {

/* Complement of the span of the unit inside an algebra basis: the basis
 * with the unit's pivot generator removed.  Letters index the remaining
 * generators; their degrees are shifted up by one.  project() rewrites a
 * vector in complement coordinates, discarding the unit component, which
 * is exactly the normalization of Hochschild cochain arguments. */
struct ComplementBasis {
    std::size_t dropped = 0;              // algebra basis index of the unit's pivot
    std::vector<std::size_t> letters;     // remaining algebra basis indices, ascending
    std::vector<int> letter_of_basis;     // basis index -> letter index, -1 for dropped
    std::vector<int> shifted_degree;      // per letter: degree + 1

    std::size_t count() const { return letters.size(); }
};

ComplementBasis make_complement(const DgAlgebra& A);

// word in complement letters; the empty word is the arity-0 slot
using Word = std::vector<std::uint8_t>;

int word_degree(const ComplementBasis& cb, const Word& w);
std::string word_str(const DgAlgebra& A, const ComplementBasis& cb, const Word& w);

/* Normalized Hochschild cochain, stored sparsely: component per word in
 * complement letters, value in module coordinates.  All components share
 * one degree: |value| = degree + (word degree).  `truncated` marks that
 * components beyond an arity bound were discarded by some operation. */
struct HochschildCochain {
    int degree = 0;
    bool truncated = false;
    std::map<Word, F2Vector> comps;

    bool is_zero() const { return comps.empty(); }
    int max_arity() const;
    F2Vector at(const Word& w, std::size_t module_dim) const;
    void add(const Word& w, const F2Vector& v);  // xor in, erase on zero

    bool operator==(const HochschildCochain& o) const { return comps == o.comps; }
};

/* Normalized Hochschild cochain complex CH(A, M) with an arity bound.
 * Operations are pure; the differential is assembled structurally from
 * reverse tables (which letters/pairs produce a given letter under d and
 * under multiplication) and never misses components; components past the
 * arity bound are dropped and flagged on the result. */
class CochainComplex {
public:
    CochainComplex(DgAlgebra A, DgBimodule M, int arity_bound);

    const DgAlgebra& algebra() const { return A_; }
    const DgBimodule& module() const { return M_; }
    const ComplementBasis& letters() const { return cb_; }
    int arity_bound() const { return arity_bound_; }
    bool module_is_free() const { return module_is_free_; }
    bool module_is_dual_free() const { return module_is_dual_free_; }

    // complement coordinates of an algebra vector (unit component dropped)
    F2Vector project(const F2Vector& v) const;

    // reverse and forward letter tables, shared with the inner-product code
    const std::vector<std::uint8_t>& rev_d(std::uint8_t x) const { return rev_d_[x]; }
    const std::vector<std::pair<std::uint8_t, std::uint8_t>>& rev_merge(std::uint8_t x) const {
        return rev_merge_[x];
    }
    const F2Vector& proj_d(std::uint8_t y) const { return proj_d_[y]; }
    const F2Vector& proj_mul(std::uint8_t y, std::uint8_t z) const { return proj_mul_[y][z]; }
    const F2Vector& dual_proj(std::uint8_t x) const { return dual_proj_[x]; }

    HochschildCochain make(int degree) const;
    HochschildCochain single(const Word& w, std::size_t module_index) const;

    // checks the degree invariant on every component
    bool degree_consistent(const HochschildCochain& c) const;

    HochschildCochain differential(const HochschildCochain& c) const;

    // direct evaluation of the differential on one word; cross-checks the
    // structural assembly
    F2Vector differential_at(const HochschildCochain& c, const Word& w) const;

    // multilinear evaluation at arbitrary algebra vectors
    F2Vector evaluate(const HochschildCochain& c, std::span<const F2Vector> args) const;

    // cup product; module must be A itself
    HochschildCochain cup(const HochschildCochain& a, const HochschildCochain& b) const;

    // Gerstenhaber bracket [a,b] = a@b + b@a via brace insertion
    HochschildCochain bracket(const HochschildCochain& a, const HochschildCochain& b) const;
    HochschildCochain circle(const HochschildCochain& a, const HochschildCochain& b) const;

    // cyclic operator; module must be the dual of A
    HochschildCochain connes_b(const HochschildCochain& c) const;

    std::string show(const HochschildCochain& c) const;

private:
    DgAlgebra A_;
    DgBimodule M_;
    ComplementBasis cb_;
    int arity_bound_;
    bool module_is_free_ = false;
    bool module_is_dual_free_ = false;

    // rev_d_[x]: letters y with project(d g_y) containing x
    std::vector<std::vector<std::uint8_t>> rev_d_;
    // rev_merge_[x]: letter pairs (y,z) with project(g_y g_z) containing x
    std::vector<std::vector<std::pair<std::uint8_t, std::uint8_t>>> rev_merge_;
    // proj_d_[y] = project(d g_y), proj_mul_[y][z] = project(g_y g_z)
    std::vector<F2Vector> proj_d_;
    std::vector<std::vector<F2Vector>> proj_mul_;
    // left_act_[y][m] = g_y . m_m, right_act_[m][y] = m_m . g_y
    std::vector<std::vector<F2Vector>> left_act_;
    std::vector<std::vector<F2Vector>> right_act_;
    // dual_proj_[x][n] = project(g_n)[x]; pairs an algebra argument with letter x
    std::vector<F2Vector> dual_proj_;

    void check_module_shape() const;
};

/* Pullback CH(f; M): precompose a cochain over f's target with f on every
 * argument.  `src` is the complex over f's target whose module is M;
 * `dst` is the complex over f's source whose module is M restricted
 * along f. */
HochschildCochain ch_of_morphism(const DgMorphism& f, const CochainComplex& src,
                                 const CochainComplex& dst, const HochschildCochain& c);

/* Cohomology of the arity-truncated normalized complex, one slice per
 * degree.  A slice is exact when no generator or differential can reach
 * past the arity bound, i.e. the slice equals the untruncated cohomology. */
struct HHBasis {
    struct Slice {
        int degree = 0;
        bool exact = false;
        // column order of the generator space: (arity, word, module index)
        std::vector<std::pair<Word, std::size_t>> generators;
        std::map<std::pair<Word, std::size_t>, std::size_t> generator_index;
        std::vector<HochschildCochain> reps;      // cohomology class representatives
        std::vector<F2Vector> rep_vectors;        // reps in generator coordinates
        std::vector<F2Vector> image_rows;         // echelon basis of the image
    };
    int arity_bound = 0;
    std::map<int, Slice> slices;

    std::map<int, std::size_t> dims() const;
};

HHBasis hh_basis(const CochainComplex& cc, int degree_min, int degree_max);

// all (word, module index) generators of one degree, arities up to the
// bound, in (arity, word, module index) order
std::vector<std::pair<Word, std::size_t>> degree_generators(const CochainComplex& cc,
                                                            int degree);

/* Coordinates of a closed cochain's class in the slice basis of its
 * degree.  Throws when the cochain is not closed, exceeds the arity
 * bound, or does not lie in the computed kernel-mod-image. */
F2Vector coords(const CochainComplex& cc, const HHBasis& h, const HochschildCochain& c);

}  // namespace hochbv
