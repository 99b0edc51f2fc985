#include "hochbv/dga.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hochbv {

namespace {

int find_name(const std::vector<std::string>& names, std::string_view n) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return static_cast<int>(i);
    return -1;
}

F2Vector apply_linear(const std::vector<F2Vector>& images, const F2Vector& v,
                      std::size_t out_dim) {
    F2Vector out(out_dim);
    for (std::size_t i : v.support()) out ^= images[i];
    return out;
}

bool homogeneous(const std::vector<int>& degrees, const F2Vector& v, int& deg_out) {
    auto s = v.support();
    if (s.empty()) return true;
    deg_out = degrees[s[0]];
    for (std::size_t i : s)
        if (degrees[i] != deg_out) return false;
    return true;
}

std::string show_vector(const std::vector<std::string>& names, const F2Vector& v) {
    auto s = v.support();
    if (s.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += " + ";
        out += names[s[k]];
    }
    return out;
}

}  // namespace

int DgAlgebra::index_of(std::string_view n) const { return find_name(basis_names, n); }

F2Vector DgAlgebra::d(const F2Vector& v) const { return apply_linear(diff, v, dim()); }

F2Vector DgAlgebra::product(const F2Vector& a, const F2Vector& b) const {
    F2Vector out(dim());
    for (std::size_t i : a.support())
        for (std::size_t j : b.support()) out ^= mult[i][j];
    return out;
}

bool DgAlgebra::homogeneous_degree(const F2Vector& v, int& deg_out) const {
    return homogeneous(degree, v, deg_out);
}

std::string DgAlgebra::show(const F2Vector& v) const { return show_vector(basis_names, v); }

int DgBimodule::index_of(std::string_view n) const { return find_name(basis_names, n); }

F2Vector DgBimodule::d(const F2Vector& v) const { return apply_linear(diff, v, dim()); }

F2Vector DgBimodule::act_left(const F2Vector& a, const F2Vector& m) const {
    F2Vector out(dim());
    for (std::size_t i : a.support())
        for (std::size_t j : m.support()) out ^= left[i][j];
    return out;
}

F2Vector DgBimodule::act_right(const F2Vector& m, const F2Vector& a) const {
    F2Vector out(dim());
    for (std::size_t i : m.support())
        for (std::size_t j : a.support()) out ^= right[i][j];
    return out;
}

bool DgBimodule::homogeneous_degree(const F2Vector& v, int& deg_out) const {
    return homogeneous(degree, v, deg_out);
}

std::string DgBimodule::show(const F2Vector& v) const { return show_vector(basis_names, v); }

bool AxiomReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

std::string AxiomReport::summary() const {
    std::string s;
    for (const auto& c : checks) {
        s += c.pass ? "[ok]   " : "[FAIL] ";
        s += c.name;
        if (!c.pass) s += "  " + c.witness;
        s += '\n';
    }
    return s;
}

namespace {

struct ReportBuilder {
    AxiomReport rep;
    AxiomCheck* current = nullptr;

    void begin(const std::string& name) {
        rep.checks.push_back({name, true, ""});
        current = &rep.checks.back();
    }
    void fail(const std::string& witness) {
        if (current->pass) {
            current->pass = false;
            current->witness = witness;
        }
    }
};

}  // namespace

AxiomReport check_dga(const DgAlgebra& A) {
    ReportBuilder b;
    std::size_t n = A.dim();

    b.begin("d-squared");
    for (std::size_t i = 0; i < n; ++i)
        if (!A.d(A.diff[i]).is_zero()) b.fail("d(d(" + A.basis_names[i] + ")) != 0");

    b.begin("d-degree");
    for (std::size_t i = 0; i < n; ++i) {
        int dd;
        if (!A.homogeneous_degree(A.diff[i], dd))
            b.fail("d(" + A.basis_names[i] + ") not homogeneous");
        else if (!A.diff[i].is_zero() && dd != A.degree[i] - 1)
            b.fail("d(" + A.basis_names[i] + ") has wrong degree");
    }

    b.begin("leibniz");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            F2Vector lhs = A.d(A.mult[i][j]);
            F2Vector rhs = A.product(A.diff[i], A.basis_vector(j)) ^
                           A.product(A.basis_vector(i), A.diff[j]);
            if (lhs != rhs)
                b.fail("d(" + A.basis_names[i] + "*" + A.basis_names[j] + ")");
        }

    b.begin("associativity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                F2Vector lhs = A.product(A.mult[i][j], A.basis_vector(k));
                F2Vector rhs = A.product(A.basis_vector(i), A.mult[j][k]);
                if (lhs != rhs)
                    b.fail("(" + A.basis_names[i] + "*" + A.basis_names[j] + ")*" +
                           A.basis_names[k]);
            }

    b.begin("unit");
    {
        int ud;
        if (!A.homogeneous_degree(A.unit, ud) || (!A.unit.is_zero() && ud != 0))
            b.fail("unit not of degree 0");
        if (A.unit.is_zero()) b.fail("unit is zero");
        if (!A.d(A.unit).is_zero()) b.fail("d(unit) != 0");
        for (std::size_t i = 0; i < n; ++i) {
            if (A.product(A.unit, A.basis_vector(i)) != A.basis_vector(i))
                b.fail("1*" + A.basis_names[i] + " != " + A.basis_names[i]);
            if (A.product(A.basis_vector(i), A.unit) != A.basis_vector(i))
                b.fail(A.basis_names[i] + "*1 != " + A.basis_names[i]);
        }
    }

    b.begin("degree-additivity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int pd;
            if (!A.homogeneous_degree(A.mult[i][j], pd))
                b.fail(A.basis_names[i] + "*" + A.basis_names[j] + " not homogeneous");
            else if (!A.mult[i][j].is_zero() && pd != A.degree[i] + A.degree[j])
                b.fail(A.basis_names[i] + "*" + A.basis_names[j] + " has wrong degree");
        }

    return b.rep;
}

AxiomReport check_bimodule(const DgAlgebra& A, const DgBimodule& M) {
    ReportBuilder b;
    std::size_t n = A.dim(), m = M.dim();

    b.begin("d-squared");
    for (std::size_t i = 0; i < m; ++i)
        if (!M.d(M.diff[i]).is_zero()) b.fail("d(d(" + M.basis_names[i] + ")) != 0");

    b.begin("leibniz");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < m; ++i) {
            F2Vector lhs = M.d(M.left[a][i]);
            F2Vector rhs = M.act_left(A.diff[a], M.basis_vector(i)) ^
                           M.act_left(A.basis_vector(a), M.diff[i]);
            if (lhs != rhs) b.fail("d(" + A.basis_names[a] + "." + M.basis_names[i] + ")");
            lhs = M.d(M.right[i][a]);
            rhs = M.act_right(M.diff[i], A.basis_vector(a)) ^
                  M.act_right(M.basis_vector(i), A.diff[a]);
            if (lhs != rhs) b.fail("d(" + M.basis_names[i] + "." + A.basis_names[a] + ")");
        }

    b.begin("associativity");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t i = 0; i < m; ++i) {
                F2Vector ab_m = M.act_left(A.mult[a][c], M.basis_vector(i));
                F2Vector a_bm = M.act_left(A.basis_vector(a), M.left[c][i]);
                if (ab_m != a_bm)
                    b.fail("(" + A.basis_names[a] + "*" + A.basis_names[c] + ")." +
                           M.basis_names[i]);
                F2Vector m_ab = M.act_right(M.basis_vector(i), A.mult[a][c]);
                F2Vector ma_b = M.act_right(M.right[i][a], A.basis_vector(c));
                if (m_ab != ma_b)
                    b.fail(M.basis_names[i] + ".(" + A.basis_names[a] + "*" +
                           A.basis_names[c] + ")");
                F2Vector am_b = M.act_right(M.left[a][i], A.basis_vector(c));
                F2Vector a_mb = M.act_left(A.basis_vector(a), M.right[i][c]);
                if (am_b != a_mb)
                    b.fail("(" + A.basis_names[a] + "." + M.basis_names[i] + ")." +
                           A.basis_names[c]);
            }

    b.begin("unit");
    for (std::size_t i = 0; i < m; ++i) {
        if (M.act_left(A.unit, M.basis_vector(i)) != M.basis_vector(i))
            b.fail("1." + M.basis_names[i]);
        if (M.act_right(M.basis_vector(i), A.unit) != M.basis_vector(i))
            b.fail(M.basis_names[i] + ".1");
    }

    b.begin("degree-additivity");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < m; ++i) {
            int pd;
            if (!M.homogeneous_degree(M.left[a][i], pd) ||
                (!M.left[a][i].is_zero() && pd != A.degree[a] + M.degree[i]))
                b.fail(A.basis_names[a] + "." + M.basis_names[i]);
            if (!M.homogeneous_degree(M.right[i][a], pd) ||
                (!M.right[i][a].is_zero() && pd != M.degree[i] + A.degree[a]))
                b.fail(M.basis_names[i] + "." + A.basis_names[a]);
        }

    return b.rep;
}

DgBimodule free_bimodule(const DgAlgebra& A) {
    DgBimodule M;
    M.name = A.name;
    M.basis_names = A.basis_names;
    M.degree = A.degree;
    M.diff = A.diff;
    M.left = A.mult;
    M.right = A.mult;
    return M;
}

DgBimodule dual_bimodule(const DgBimodule& M, const DgAlgebra& A) {
    std::size_t m = M.dim(), n = A.dim();
    DgBimodule D;
    D.name = M.name + "*";
    D.basis_names.reserve(m);
    for (const auto& s : M.basis_names) D.basis_names.push_back(s + "*");
    D.degree.resize(m);
    for (std::size_t i = 0; i < m; ++i) D.degree[i] = -M.degree[i];

    D.diff.assign(m, F2Vector(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (M.diff[j].get(i)) D.diff[i].set(j, true);

    // (a.n_i)(m_j) = n_i(m_j.a),  (n_i.a)(m_j) = n_i(a.m_j)
    D.left.assign(n, std::vector<F2Vector>(m, F2Vector(m)));
    D.right.assign(m, std::vector<F2Vector>(n, F2Vector(m)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (M.right[j][a].get(i)) D.left[a][i].set(j, true);
                if (M.left[a][j].get(i)) D.right[i][a].set(j, true);
            }
    return D;
}

bool same_bimodule_structure(const DgBimodule& M, const DgBimodule& N) {
    return M.degree == N.degree && M.diff == N.diff && M.left == N.left && M.right == N.right;
}

F2Vector DgMorphism::apply(const F2Vector& v) const {
    return apply_linear(map, v, target.dim());
}

AxiomReport check_morphism(const DgMorphism& f) {
    ReportBuilder b;
    const DgAlgebra& B = f.source;
    const DgAlgebra& A = f.target;
    std::size_t n = B.dim();

    b.begin("unit");
    if (f.apply(B.unit) != A.unit) b.fail("f(1) != 1");

    b.begin("degree");
    for (std::size_t i = 0; i < n; ++i) {
        int dd;
        if (!A.homogeneous_degree(f.map[i], dd) ||
            (!f.map[i].is_zero() && dd != B.degree[i]))
            b.fail("f(" + B.basis_names[i] + ") has wrong degree");
    }

    b.begin("multiplicative");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (f.apply(B.mult[i][j]) != A.product(f.map[i], f.map[j]))
                b.fail("f(" + B.basis_names[i] + "*" + B.basis_names[j] + ")");

    b.begin("chain-map");
    for (std::size_t i = 0; i < n; ++i)
        if (f.apply(B.diff[i]) != A.d(f.map[i]))
            b.fail("f(d " + B.basis_names[i] + ") != d(f " + B.basis_names[i] + ")");

    return b.rep;
}

DgBimodule restrict_bimodule(const DgBimodule& M, const DgMorphism& f) {
    const DgAlgebra& B = f.source;
    DgBimodule R;
    R.name = M.name + "|" + B.name;
    R.basis_names = M.basis_names;
    R.degree = M.degree;
    R.diff = M.diff;
    R.left.assign(B.dim(), std::vector<F2Vector>(M.dim()));
    R.right.assign(M.dim(), std::vector<F2Vector>(B.dim()));
    for (std::size_t b = 0; b < B.dim(); ++b)
        for (std::size_t i = 0; i < M.dim(); ++i) {
            R.left[b][i] = M.act_left(f.map[b], M.basis_vector(i));
            R.right[i][b] = M.act_right(M.basis_vector(i), f.map[b]);
        }
    return R;
}

std::map<int, std::size_t> GradedBasis::dims() const {
    std::map<int, std::size_t> d;
    for (const auto& [deg, reps] : by_degree)
        if (!reps.empty()) d[deg] = reps.size();
    return d;
}

GradedBasis algebra_cohomology(const DgAlgebra& A) {
    GradedBasis H;
    H.ambient_dim = A.dim();
    std::set<int> degrees(A.degree.begin(), A.degree.end());
    for (int dg : degrees) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < A.dim(); ++i)
            if (A.degree[i] == dg) idx.push_back(i);

        // kernel of d restricted to degree dg
        F2Matrix m(A.dim(), idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t r : A.diff[idx[j]].support()) m.set(r, j, true);
        std::vector<F2Vector> ker = kernel_basis(m);

        EchelonBasis image(A.dim());
        for (std::size_t i = 0; i < A.dim(); ++i)
            if (A.degree[i] == dg + 1) image.insert(A.diff[i]);

        std::vector<F2Vector> reps;
        EchelonBasis seen(A.dim());
        for (const auto& kv : ker) {
            F2Vector v(A.dim());
            for (std::size_t j : kv.support()) v.set(idx[j], true);
            F2Vector r = seen.residue(image.residue(v));
            if (!r.is_zero()) {
                seen.insert(r);
                reps.push_back(r);
            }
        }
        if (!reps.empty()) H.by_degree[dg] = std::move(reps);
    }
    return H;
}

bool cohomology_map_bijective(const DgMorphism& f, std::string* witness) {
    GradedBasis HB = algebra_cohomology(f.source);
    GradedBasis HA = algebra_cohomology(f.target);
    std::set<int> degrees;
    for (const auto& [d, r] : HB.by_degree) degrees.insert(d);
    for (const auto& [d, r] : HA.by_degree) degrees.insert(d);

    for (int dg : degrees) {
        auto src = HB.by_degree.count(dg) ? HB.by_degree[dg] : std::vector<F2Vector>{};
        auto dst = HA.by_degree.count(dg) ? HA.by_degree[dg] : std::vector<F2Vector>{};
        if (src.size() != dst.size()) {
            if (witness)
                *witness = "degree " + std::to_string(dg) + ": dim " +
                           std::to_string(src.size()) + " vs " + std::to_string(dst.size());
            return false;
        }
        if (src.empty()) continue;

        EchelonBasis image(f.target.dim());
        for (std::size_t i = 0; i < f.target.dim(); ++i)
            if (f.target.degree[i] == dg + 1) image.insert(f.target.diff[i]);

        // coordinates of f(rep) in the chosen basis of H(target)
        F2Matrix sys(f.target.dim(), 0);
        for (const auto& r : dst) sys.append_col(r);
        for (const auto& r : image.rows()) sys.append_col(r);
        F2Matrix induced(dst.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j) {
            auto x = solve(sys, f.apply(src[j]));
            if (!x) {
                if (witness)
                    *witness = "degree " + std::to_string(dg) + ": image of class " +
                               std::to_string(j) + " is not a cycle mod boundaries";
                return false;
            }
            for (std::size_t i = 0; i < dst.size(); ++i) induced.set(i, j, x->get(i));
        }
        if (rank(induced) != dst.size()) {
            if (witness) *witness = "degree " + std::to_string(dg) + ": induced map singular";
            return false;
        }
    }
    return true;
}

// ---- builtin algebras ----

DgAlgebra make_sphere_cohomology() {
    DgAlgebra A;
    A.name = "sphere-cohomology";
    A.basis_names = {"e", "s"};
    A.degree = {0, -2};
    A.diff = {F2Vector(2), F2Vector(2)};
    A.mult.assign(2, std::vector<F2Vector>(2, F2Vector(2)));
    A.mult[0][0] = F2Vector::basis(2, 0);
    A.mult[0][1] = F2Vector::basis(2, 1);
    A.mult[1][0] = F2Vector::basis(2, 1);
    // s*s = 0
    A.unit = F2Vector::basis(2, 0);
    return A;
}

namespace {

/* Simplicial cochain algebra of a complex: one generator per simplex
 * (dual cochain), degree -(dim), simplicial coboundary, cup product
 * (front face / back face: nonzero iff the last vertex of the first
 * factor equals the first vertex of the second and the union is a
 * simplex of the complex). */
DgAlgebra simplicial_cochain_algebra(const std::string& name,
                                     const std::vector<std::string>& labels,
                                     const std::vector<std::vector<int>>& simplices) {
    DgAlgebra A;
    A.name = name;
    std::size_t n = simplices.size();
    static const char* prefix = "ebc";
    for (const auto& s : simplices) {
        std::string nm(1, prefix[s.size() - 1]);
        for (int v : s) nm += labels[v];
        A.basis_names.push_back(nm);
        A.degree.push_back(-static_cast<int>(s.size()) + 1);
    }

    auto find = [&](const std::vector<int>& s) {
        for (std::size_t i = 0; i < n; ++i)
            if (simplices[i] == s) return static_cast<int>(i);
        return -1;
    };

    A.diff.assign(n, F2Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (simplices[j].size() != simplices[i].size() + 1) continue;
            if (std::includes(simplices[j].begin(), simplices[j].end(),
                              simplices[i].begin(), simplices[i].end()))
                A.diff[i].set(j, true);
        }

    A.mult.assign(n, std::vector<F2Vector>(n, F2Vector(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& s = simplices[i];
            const auto& t = simplices[j];
            if (s.back() != t.front()) continue;
            std::vector<int> u = s;
            u.insert(u.end(), t.begin() + 1, t.end());
            if (!std::is_sorted(u.begin(), u.end())) continue;
            int k = find(u);
            if (k >= 0) A.mult[i][j].set(k, true);
        }

    A.unit = F2Vector(n);
    for (std::size_t i = 0; i < n; ++i)
        if (simplices[i].size() == 1) A.unit.set(i, true);
    return A;
}

std::vector<std::vector<int>> subsets_up_to(int nverts, int max_size) {
    std::vector<std::vector<int>> out;
    for (int size = 1; size <= max_size; ++size) {
        // ascending subsets of {0..nverts-1} of the given size
        std::vector<int> cur(size);
        for (int i = 0; i < size; ++i) cur[i] = i;
        while (true) {
            out.push_back(cur);
            int i = size - 1;
            while (i >= 0 && cur[i] == nverts - size + i) --i;
            if (i < 0) break;
            ++cur[i];
            for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace

DgAlgebra make_simplex_algebra(int n, const std::vector<std::string>& labels) {
    if (n < 0 || n > 2)
        throw std::invalid_argument("make_simplex_algebra: n must be 0, 1 or 2");
    std::vector<std::string> ls = labels;
    if (ls.empty())
        for (int i = 0; i <= n; ++i) ls.push_back(std::to_string(i));
    if (static_cast<int>(ls.size()) != n + 1)
        throw std::invalid_argument("make_simplex_algebra: need n+1 vertex labels");
    return simplicial_cochain_algebra("simplex-" + std::to_string(n), ls,
                                      subsets_up_to(n + 1, n + 1));
}

DgAlgebra make_sphere_cochain_algebra() {
    return simplicial_cochain_algebra("sphere-cochains", {"0", "1", "2", "3"},
                                      subsets_up_to(4, 3));
}

DgAlgebra make_counterexample_algebra() {
    DgAlgebra A;
    A.name = "counterexample";
    A.basis_names = {"e", "b", "c"};
    A.degree = {0, -1, -2};
    A.diff.assign(3, F2Vector(3));
    A.mult.assign(3, std::vector<F2Vector>(3, F2Vector(3)));
    for (int i = 0; i < 3; ++i) {
        A.mult[0][i] = F2Vector::basis(3, i);
        A.mult[i][0] = F2Vector::basis(3, i);
    }
    A.mult[1][1] = F2Vector::basis(3, 2);  // b*b = c
    A.unit = F2Vector::basis(3, 0);
    return A;
}

DgMorphism make_quasi_iso_f() {
    DgMorphism f;
    f.name = "f";
    f.source = make_sphere_cohomology();
    f.target = make_sphere_cochain_algebra();
    f.map.resize(2);
    f.map[0] = f.target.unit;
    int c012 = f.target.index_of("c012");
    f.map[1] = F2Vector::basis(f.target.dim(), c012);
    return f;
}

DgAlgebra builtin_algebra(std::string_view name) {
    if (name == "sphere-cohomology") return make_sphere_cohomology();
    if (name == "simplex-0") return make_simplex_algebra(0);
    if (name == "simplex-1") return make_simplex_algebra(1);
    if (name == "simplex-2") return make_simplex_algebra(2);
    if (name == "sphere-cochains") return make_sphere_cochain_algebra();
    if (name == "counterexample") return make_counterexample_algebra();
    throw std::invalid_argument("unknown builtin algebra: " + std::string(name));
}

std::vector<std::string> builtin_algebra_names() {
    return {"sphere-cohomology", "simplex-0", "simplex-1",
            "simplex-2",         "sphere-cochains", "counterexample"};
}

}  // namespace hochbv
