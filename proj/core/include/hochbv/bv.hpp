#pragma once

#include <string>
#include <vector>

#include "hochbv/hip.hpp"

namespace hochbv {

/* Operator on cohomology classes: per source degree d, the matrix of the
 * map from the degree-d slice of the source basis to the degree-(d +
 * degree_shift) slice of the target basis, in slice coordinates. */
struct HHOperator {
    std::string name;
    int degree_shift = 0;
    std::map<int, F2Matrix> mats;
};

/* Hochschild complexes and cohomology bases of CH(A,A) and CH(A,A*).
 * The dual side carries a larger arity bound so that images of the
 * inner-product operators stay inside its slices. */
struct HHPair {
    CochainComplex ch_a;
    CochainComplex ch_dual;
    HHBasis hh_a;
    HHBasis hh_dual;
};

HHPair make_hh_pair(const DgAlgebra& A, int bound_a, int bound_dual, int deg_min_a,
                    int deg_max_a, int deg_min_dual, int deg_max_dual);

// linear combination of a slice's representatives
HochschildCochain cochain_of_coords(const CochainComplex& cc, const HHBasis::Slice& s,
                                    const F2Vector& coeffs);

// [phi] -> [F(-; phi(-); -)]; degree shift = |F|
HHOperator induced_hh_map(const HipContext& hip, const HomotopyInnerProduct& F,
                          const HHPair& P, const std::string& name);

// cyclic operator on the dual-coefficient classes; degree shift +1
HHOperator connes_b_operator(const HHPair& P);

// [phi] -> [Z^F(phi)]; degree shift = |F| + 1
HHOperator z_operator_map(const HipContext& hip, const HomotopyInnerProduct& F,
                          const HHPair& P);

/* F^{-1} . B . F resp. F^{-1} . Z^F on classes, degree shift +1.  Throws
 * when a needed degree of F is missing or not invertible. */
HHOperator delta_from_transfer(const HHOperator& Fop, const HHOperator& Bop);
HHOperator delta_from_z(const HHOperator& Fop, const HHOperator& Zop);

/* Poincare-duality report.  Condition (1) is checked on cochains: the
 * induced map with components past the arity bound dropped is triangular
 * with diagonal F_{0,0} (x) id, so bijectivity per degree at the bound is
 * exactly the invertibility of F_{0,0}.  Condition (2) compares [B(F(x))]
 * with [Z^F(x)] for every basis class of the window. */
struct PdReport {
    int degree_min = 0;
    int degree_max = 0;
    bool closed = false;  // DF = 0, all components
    std::map<int, bool> iso_per_degree;
    std::map<int, bool> equal_per_degree;
    bool iso = false;
    bool transfer_equals_delta = false;
    std::string witness;

    bool pass() const { return closed && iso && transfer_equals_delta; }
    std::string summary() const;
};

PdReport check_pd_structure(const HipContext& hip, const HomotopyInnerProduct& F,
                            int degree_min, int degree_max);

/* Exactness decision for a closed cochain.  The class test uses the
 * truncated basis; when both differentials vanish the differential raises
 * arity by exactly one, preimage candidates decompose by arity, and the
 * truncated verdict equals the untruncated one.  preimage_space_dims
 * records the dimension of the candidate space one arity below each
 * component arity of psi. */
struct ExactnessCertificate {
    bool closed = false;
    bool exact = false;
    bool arity_graded = false;
    std::map<int, std::size_t> preimage_space_dims;
    std::string detail;
};

ExactnessCertificate nonexactness_certificate(const CochainComplex& cc, const HHBasis& h,
                                              const HochschildCochain& psi);

// Delta(a.b) + Delta(a).b + a.Delta(b) = [a,b] on classes, Delta = F^{-1}BF
bool bv_seven_term_check(const HipContext& hip, const HomotopyInnerProduct& F,
                         const HHPair& P, const HochschildCochain& a,
                         const HochschildCochain& b, std::string* witness = nullptr);

// ---- symbolic BV tables ----

/* Element of a BV table: a sum of labels x_k (kind 0, degree k) and y_k
 * (kind 1, degree k-2), k <= K, at index 2k + kind.  `in_range` is false
 * when the true value involves labels beyond K; such entries carry a zero
 * vector and are skipped by comparisons and morphism checks. */
struct TableElt {
    F2Vector v;
    bool in_range = true;

    bool operator==(const TableElt&) const = default;
};

struct BvTable {
    std::string name;
    std::string kind0;  // label stem of the degree-k family ("alpha", "phi")
    std::string kind1;  // label stem of the degree-(k-2) family ("beta", "psi")
    int K = 8;
    std::vector<std::vector<TableElt>> prod;  // [label][label]
    std::vector<TableElt> delta;              // [label]

    std::size_t labels() const { return 2 * static_cast<std::size_t>(K + 1); }
    static std::size_t idx(int k, int kind) { return 2 * static_cast<std::size_t>(k) + kind; }
    int degree_of(std::size_t label) const;
    std::size_t unit_label() const { return idx(0, 0); }

    TableElt elt(std::size_t label) const;
    TableElt zero_elt() const { return {F2Vector(labels()), true}; }
    TableElt out_of_range() const { return {F2Vector(labels()), false}; }

    TableElt mul(const TableElt& a, const TableElt& b) const;
    TableElt apply_delta(const TableElt& a) const;

    std::string label_name(std::size_t label) const;  // "phi_3"
    std::string show(const TableElt& e) const;        // "phi_1 + psi_3", "0", "<out of range>"

    bool operator==(const BvTable& o) const { return prod == o.prod && delta == o.delta; }
};

// Delta.Delta = 0, product associative, commutative and unital, flags consistent
AxiomReport check_bv_table(const BvTable& t);

// the alpha/beta model: x.y products additive in k, y.y = 0,
// Delta(y_k) = k(x_{k-1} + y_{k+1}) mod 2
BvTable string_topology_model(int K);

// phi/psi tables with the two transfer Delta's the computation must reproduce
BvTable expected_strict_hh_table(int K);
BvTable expected_homotopy_hh_table(int K);

/* Canonical classes of the sphere model: phi_k = (s^k -> e), psi_k =
 * (s^k -> s) on CH(H,H), theta_k = (s^k -> s*), chi_k = (s^k -> e*) on
 * CH(H,H*), and the change of basis between slice coordinates and these
 * labels.  Windows and bounds are sized so every table entry with k <= K
 * is computed on exact (untruncated) slices. */
class SphereHH {
public:
    explicit SphereHH(int K);

    int max_index() const { return K_; }
    const DgAlgebra& algebra() const { return hip_.algebra(); }
    const HipContext& context() const { return hip_; }
    const HHPair& pair() const { return pair_; }
    int a_kmax() const { return 2 * K_ + 2; }
    int dual_kmax() const { return K_ + 4; }

    HochschildCochain phi(int k) const;
    HochschildCochain psi(int k) const;
    HochschildCochain theta(int k) const;
    HochschildCochain chi(int k) const;

    F2Vector a_coords(const HochschildCochain& c) const;
    F2Vector dual_coords(const HochschildCochain& c) const;

    // label vector (index 2k + kind, kind 0 = phi/theta, kind 1 = psi/chi)
    // of a class given in slice coordinates of the stated degree
    F2Vector a_labels(int degree, const F2Vector& class_coords) const;
    F2Vector dual_labels(int degree, const F2Vector& class_coords) const;
    F2Vector a_label_of(const HochschildCochain& c) const;
    F2Vector dual_label_of(const HochschildCochain& c) const;

    std::string show_a(const F2Vector& label_vec) const;
    std::string show_dual(const F2Vector& label_vec) const;

private:
    int K_;
    HipContext hip_;
    HHPair pair_;
};

// the BV table of cup and F^{-1}BF on the sphere classes, labels k <= K
BvTable hh_bv_table(const SphereHH& S, const HomotopyInnerProduct& F,
                    const std::string& name);

// ---- table morphisms ----

struct DerivedMorphism {
    F2Vector img_phi1;  // over dst labels
    F2Vector img_psi0;
    std::vector<TableElt> images;  // per src label
};

/* Unital algebra map determined on generators: x_k |-> img(x_1)^k,
 * y_k |-> img(y_0) . image of x_k. */
DerivedMorphism derive_morphism(const BvTable& src, const BvTable& dst,
                                const F2Vector& img_phi1, const F2Vector& img_psi0);

struct MorphismCheck {
    bool multiplicative = true;
    bool intertwines = true;  // Delta_dst . Phi = Phi . Delta_src
    bool bijective = true;    // per degree, over degrees with all images in range
    std::string witness;

    bool pass() const { return multiplicative && intertwines && bijective; }
};

MorphismCheck check_table_morphism(const BvTable& src, const BvTable& dst,
                                   const DerivedMorphism& m);

struct IsoSearchResult {
    struct Candidate {
        DerivedMorphism morphism;
        MorphismCheck check;
    };
    std::size_t deg1_dim = 0;   // graded dimension backing candidate exhaustiveness
    std::size_t degm2_dim = 0;  // degree-(-2) graded dimension
    std::vector<Candidate> candidates;  // canonical order

    std::vector<std::size_t> survivors() const;
};

/* All unital degree-preserving algebra maps src -> dst determined by a
 * nonzero degree-1 image of x_1 and a nonzero degree-(-2) image of y_0,
 * each checked for multiplicativity, Delta-intertwining and per-degree
 * bijectivity. */
IsoSearchResult bv_iso_search(const BvTable& src, const BvTable& dst);

struct ThetaReport {
    bool formula = false;  // Theta(phi_k) = x_k + k y_{k+2}, Theta(psi_k) = y_k
    MorphismCheck check;
    std::string witness;

    bool pass() const { return formula && check.pass(); }
};

// the homotopy-transfer table maps onto the string-topology model
ThetaReport check_theta_iso(int K);

}  // namespace hochbv
