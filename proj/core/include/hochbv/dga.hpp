#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hochbv/f2.hpp"

namespace hochbv {

/* Finite-dimensional dg-algebra over the two-element field, homological
 * grading: the differential lowers degree by one.  Elements are vectors
 * in the given basis; diff[i] and mult[i][j] are the images of basis
 * elements, extended bilinearly.  The unit may be a sum of basis
 * elements. */
struct DgAlgebra {
    std::string name;
    std::vector<std::string> basis_names;
    std::vector<int> degree;
    std::vector<F2Vector> diff;               // diff[i] = d(g_i)
    std::vector<std::vector<F2Vector>> mult;  // mult[i][j] = g_i * g_j
    F2Vector unit;

    std::size_t dim() const { return basis_names.size(); }
    int index_of(std::string_view n) const;  // -1 when absent
    F2Vector basis_vector(std::size_t i) const { return F2Vector::basis(dim(), i); }
    F2Vector zero() const { return F2Vector(dim()); }

    F2Vector d(const F2Vector& v) const;
    F2Vector product(const F2Vector& a, const F2Vector& b) const;

    // true iff all basis elements in the support share one degree
    bool homogeneous_degree(const F2Vector& v, int& deg_out) const;

    std::string show(const F2Vector& v) const;  // "e0 + b01", "0"
};

/* Dg-bimodule over a DgAlgebra.  left[a][m] = g_a . m_m, right[m][a] =
 * m_m . g_a, both extended bilinearly. */
struct DgBimodule {
    std::string name;
    std::vector<std::string> basis_names;
    std::vector<int> degree;
    std::vector<F2Vector> diff;
    std::vector<std::vector<F2Vector>> left;
    std::vector<std::vector<F2Vector>> right;

    std::size_t dim() const { return basis_names.size(); }
    int index_of(std::string_view n) const;
    F2Vector basis_vector(std::size_t i) const { return F2Vector::basis(dim(), i); }
    F2Vector zero() const { return F2Vector(dim()); }

    F2Vector d(const F2Vector& v) const;
    F2Vector act_left(const F2Vector& a, const F2Vector& m) const;
    F2Vector act_right(const F2Vector& m, const F2Vector& a) const;

    bool homogeneous_degree(const F2Vector& v, int& deg_out) const;
    std::string show(const F2Vector& v) const;
};

struct AxiomCheck {
    std::string name;
    bool pass = true;
    std::string witness;  // first violation, empty when pass
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_pass() const;
    std::string summary() const;
};

// d^2 = 0, Leibniz, associativity, unit, degree additivity
AxiomReport check_dga(const DgAlgebra& A);
AxiomReport check_bimodule(const DgAlgebra& A, const DgBimodule& M);

// A as a bimodule over itself
DgBimodule free_bimodule(const DgAlgebra& A);

/* Dual bimodule: basis n_i = (m_i)^*, |n_i| = -|m_i|, d(n)(m) = n(dm),
 * (n.a)(m) = n(a.m), (a.n)(m) = n(m.a); signs vanish mod 2. */
DgBimodule dual_bimodule(const DgBimodule& M, const DgAlgebra& A);

// true iff M and N have identical basis data (names ignored)
bool same_bimodule_structure(const DgBimodule& M, const DgBimodule& N);

/* Dg-algebra morphism f: source -> target; map[i] = f(g_i). */
struct DgMorphism {
    std::string name;
    DgAlgebra source;
    DgAlgebra target;
    std::vector<F2Vector> map;

    F2Vector apply(const F2Vector& v) const;
};

// unit, multiplicativity, chain map, degree 0
AxiomReport check_morphism(const DgMorphism& f);

// target-bimodule M pulled back to a bimodule over f's source
DgBimodule restrict_bimodule(const DgBimodule& M, const DgMorphism& f);

struct GradedBasis {
    std::size_t ambient_dim = 0;
    // degree -> representatives of a basis of ker d / im d in that degree
    std::map<int, std::vector<F2Vector>> by_degree;
    std::map<int, std::size_t> dims() const;
};

GradedBasis algebra_cohomology(const DgAlgebra& A);

/* Induced map on cohomology: true iff f is bijective on every degree.
 * Fills per-degree matrices of the induced map in the chosen bases. */
bool cohomology_map_bijective(const DgMorphism& f, std::string* witness = nullptr);

// ---- builtin algebras ----

// two classes e (degree 0, unit) and s (degree -2), s*s = 0, zero differential
DgAlgebra make_sphere_cohomology();

/* Simplicial cochain algebra of the standard n-simplex, n <= 2, over the
 * vertex label set (defaults to "0","1",...,"n").  Generators e<i>,
 * b<i><j>, c<i><j><k> in degrees 0, -1, -2; d is the simplicial
 * coboundary and the product is the cup product of cochains. */
DgAlgebra make_simplex_algebra(int n, const std::vector<std::string>& labels = {});

/* Simplicial cochains of the boundary of the 3-simplex: 4 vertices, 6
 * edges, 4 triangles. */
DgAlgebra make_sphere_cochain_algebra();

// e (unit, degree 0), b (degree -1), c (degree -2); b*b = c, zero differential
DgAlgebra make_counterexample_algebra();

// quasi-isomorphism from make_sphere_cohomology() to make_sphere_cochain_algebra()
DgMorphism make_quasi_iso_f();

DgAlgebra builtin_algebra(std::string_view name);  // throws on unknown name
std::vector<std::string> builtin_algebra_names();

}  // namespace hochbv
