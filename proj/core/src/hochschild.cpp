#include "hochbv/hochschild.hpp"

#include <algorithm>
#include <stdexcept>

namespace hochbv {

ComplementBasis make_complement(const DgAlgebra& A) {
    if (A.unit.is_zero()) throw std::invalid_argument("make_complement: unit is zero");
    ComplementBasis cb;
    cb.dropped = A.unit.support().front();
    cb.letter_of_basis.assign(A.dim(), -1);
    for (std::size_t i = 0; i < A.dim(); ++i) {
        if (i == cb.dropped) continue;
        cb.letter_of_basis[i] = static_cast<int>(cb.letters.size());
        cb.letters.push_back(i);
        cb.shifted_degree.push_back(A.degree[i] + 1);
    }
    return cb;
}

int word_degree(const ComplementBasis& cb, const Word& w) {
    int d = 0;
    for (std::uint8_t x : w) d += cb.shifted_degree[x];
    return d;
}

std::string word_str(const DgAlgebra& A, const ComplementBasis& cb, const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += A.basis_names[cb.letters[w[i]]];
    }
    return s + ")";
}

int HochschildCochain::max_arity() const {
    int m = 0;
    for (const auto& [w, v] : comps) m = std::max<int>(m, static_cast<int>(w.size()));
    return m;
}

F2Vector HochschildCochain::at(const Word& w, std::size_t module_dim) const {
    auto it = comps.find(w);
    return it == comps.end() ? F2Vector(module_dim) : it->second;
}

void HochschildCochain::add(const Word& w, const F2Vector& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = comps.emplace(w, v);
    if (!inserted) {
        it->second ^= v;
        if (it->second.is_zero()) comps.erase(it);
    }
}

CochainComplex::CochainComplex(DgAlgebra A, DgBimodule M, int arity_bound)
    : A_(std::move(A)), M_(std::move(M)), cb_(make_complement(A_)), arity_bound_(arity_bound) {
    if (arity_bound_ < 0) throw std::invalid_argument("CochainComplex: negative arity bound");
    if (cb_.count() > 255) throw std::invalid_argument("CochainComplex: too many letters");
    check_module_shape();

    std::size_t L = cb_.count();
    proj_d_.resize(L);
    proj_mul_.assign(L, std::vector<F2Vector>(L));
    for (std::size_t y = 0; y < L; ++y) {
        proj_d_[y] = project(A_.diff[cb_.letters[y]]);
        for (std::size_t z = 0; z < L; ++z)
            proj_mul_[y][z] = project(A_.mult[cb_.letters[y]][cb_.letters[z]]);
    }
    rev_d_.assign(L, {});
    rev_merge_.assign(L, {});
    for (std::size_t y = 0; y < L; ++y) {
        for (std::size_t x : proj_d_[y].support())
            rev_d_[x].push_back(static_cast<std::uint8_t>(y));
        for (std::size_t z = 0; z < L; ++z)
            for (std::size_t x : proj_mul_[y][z].support())
                rev_merge_[x].emplace_back(static_cast<std::uint8_t>(y),
                                           static_cast<std::uint8_t>(z));
    }

    left_act_.assign(L, std::vector<F2Vector>(M_.dim()));
    right_act_.assign(M_.dim(), std::vector<F2Vector>(L));
    for (std::size_t y = 0; y < L; ++y)
        for (std::size_t m = 0; m < M_.dim(); ++m) {
            left_act_[y][m] = M_.left[cb_.letters[y]][m];
            right_act_[m][y] = M_.right[m][cb_.letters[y]];
        }

    dual_proj_.assign(L, F2Vector(A_.dim()));
    for (std::size_t n = 0; n < A_.dim(); ++n)
        for (std::size_t x : project(A_.basis_vector(n)).support())
            dual_proj_[x].set(n, true);

    if (M_.dim() == A_.dim()) {
        DgBimodule free = free_bimodule(A_);
        module_is_free_ = same_bimodule_structure(M_, free);
        module_is_dual_free_ = same_bimodule_structure(M_, dual_bimodule(free, A_));
    }
}

void CochainComplex::check_module_shape() const {
    if (M_.left.size() != A_.dim() || (M_.dim() && M_.right[0].size() != A_.dim()))
        throw std::invalid_argument("CochainComplex: bimodule does not match algebra");
}

F2Vector CochainComplex::project(const F2Vector& v) const {
    F2Vector out(cb_.count());
    bool drop = v.get(cb_.dropped);
    for (std::size_t l = 0; l < cb_.count(); ++l) {
        bool bit = v.get(cb_.letters[l]);
        if (drop && A_.unit.get(cb_.letters[l])) bit = !bit;
        out.set(l, bit);
    }
    return out;
}

HochschildCochain CochainComplex::make(int degree) const {
    HochschildCochain c;
    c.degree = degree;
    return c;
}

HochschildCochain CochainComplex::single(const Word& w, std::size_t module_index) const {
    HochschildCochain c;
    c.degree = M_.degree[module_index] - word_degree(cb_, w);
    c.comps[w] = M_.basis_vector(module_index);
    return c;
}

bool CochainComplex::degree_consistent(const HochschildCochain& c) const {
    for (const auto& [w, v] : c.comps) {
        int vd;
        if (!M_.homogeneous_degree(v, vd)) return false;
        if (vd != c.degree + word_degree(cb_, w)) return false;
    }
    return true;
}

HochschildCochain CochainComplex::differential(const HochschildCochain& c) const {
    HochschildCochain out = make(c.degree - 1);
    out.truncated = c.truncated;
    std::size_t L = cb_.count();

    for (const auto& [w, v] : c.comps) {
        std::size_t r = w.size();

        out.add(w, M_.d(v));

        for (std::size_t j = 0; j < r; ++j) {
            Word w2 = w;
            for (std::uint8_t y : rev_d_[w[j]]) {
                w2[j] = y;
                out.add(w2, v);
            }
        }

        for (std::size_t y = 0; y < L; ++y) {
            F2Vector u(M_.dim());
            for (std::size_t m : v.support()) u ^= left_act_[y][m];
            if (!u.is_zero()) {
                Word w2;
                w2.reserve(r + 1);
                w2.push_back(static_cast<std::uint8_t>(y));
                w2.insert(w2.end(), w.begin(), w.end());
                out.add(w2, u);
            }
            u = F2Vector(M_.dim());
            for (std::size_t m : v.support()) u ^= right_act_[m][y];
            if (!u.is_zero()) {
                Word w2 = w;
                w2.push_back(static_cast<std::uint8_t>(y));
                out.add(w2, u);
            }
        }

        for (std::size_t j = 0; j < r; ++j)
            for (const auto& [y, z] : rev_merge_[w[j]]) {
                Word w2;
                w2.reserve(r + 1);
                w2.insert(w2.end(), w.begin(), w.begin() + j);
                w2.push_back(y);
                w2.push_back(z);
                w2.insert(w2.end(), w.begin() + j + 1, w.end());
                out.add(w2, v);
            }
    }

    // prune components past the arity bound only after cancellation
    for (auto it = out.comps.begin(); it != out.comps.end();) {
        if (static_cast<int>(it->first.size()) > arity_bound_) {
            out.truncated = true;
            it = out.comps.erase(it);
        } else {
            ++it;
        }
    }
    return out;
}

F2Vector CochainComplex::differential_at(const HochschildCochain& c, const Word& w) const {
    std::size_t r = w.size();
    std::size_t md = M_.dim();
    F2Vector val = M_.d(c.at(w, md));

    for (std::size_t j = 0; j < r; ++j) {
        Word w2 = w;
        for (std::size_t x : proj_d_[w[j]].support()) {
            w2[j] = static_cast<std::uint8_t>(x);
            val ^= c.at(w2, md);
        }
    }
    if (r >= 1) {
        Word tail(w.begin() + 1, w.end());
        F2Vector inner = c.at(tail, md);
        for (std::size_t m : inner.support()) val ^= left_act_[w[0]][m];

        Word head(w.begin(), w.end() - 1);
        inner = c.at(head, md);
        for (std::size_t m : inner.support()) val ^= right_act_[m][w[r - 1]];
    }
    for (std::size_t j = 0; j + 1 < r; ++j) {
        Word w2;
        w2.reserve(r - 1);
        w2.insert(w2.end(), w.begin(), w.begin() + j);
        w2.push_back(0);
        w2.insert(w2.end(), w.begin() + j + 2, w.end());
        for (std::size_t x : proj_mul_[w[j]][w[j + 1]].support()) {
            w2[j] = static_cast<std::uint8_t>(x);
            val ^= c.at(w2, md);
        }
    }
    return val;
}

F2Vector CochainComplex::evaluate(const HochschildCochain& c,
                                  std::span<const F2Vector> args) const {
    std::vector<std::vector<std::size_t>> supports;
    supports.reserve(args.size());
    for (const auto& a : args) {
        if (a.size() != A_.dim())
            throw std::invalid_argument("evaluate: argument dimension mismatch");
        supports.push_back(project(a).support());
    }
    F2Vector val(M_.dim());
    Word w(args.size(), 0);
    // iterate the product of supports
    std::vector<std::size_t> pos(args.size(), 0);
    for (const auto& s : supports)
        if (s.empty()) return val;
    while (true) {
        for (std::size_t i = 0; i < args.size(); ++i)
            w[i] = static_cast<std::uint8_t>(supports[i][pos[i]]);
        val ^= c.at(w, M_.dim());
        std::size_t i = args.size();
        while (i > 0) {
            --i;
            if (++pos[i] < supports[i].size()) break;
            pos[i] = 0;
            if (i == 0) return val;
        }
        if (args.empty()) return val;
    }
}

HochschildCochain CochainComplex::cup(const HochschildCochain& a,
                                      const HochschildCochain& b) const {
    if (!module_is_free_)
        throw std::invalid_argument("cup: module must be the algebra itself");
    HochschildCochain out = make(a.degree + b.degree);
    out.truncated = a.truncated || b.truncated;
    for (const auto& [wa, va] : a.comps)
        for (const auto& [wb, vb] : b.comps) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, A_.product(va, vb));
        }
    return out;
}

HochschildCochain CochainComplex::circle(const HochschildCochain& a,
                                         const HochschildCochain& b) const {
    if (!module_is_free_)
        throw std::invalid_argument("circle: module must be the algebra itself");
    HochschildCochain out = make(a.degree + b.degree + 1);
    out.truncated = a.truncated || b.truncated;
    for (const auto& [wa, va] : a.comps)
        for (const auto& [wb, vb] : b.comps) {
            F2Vector ins = project(vb);
            for (std::size_t j = 0; j < wa.size(); ++j) {
                if (!ins.get(wa[j])) continue;
                Word w;
                w.reserve(wa.size() + wb.size() - 1);
                w.insert(w.end(), wa.begin(), wa.begin() + j);
                w.insert(w.end(), wb.begin(), wb.end());
                w.insert(w.end(), wa.begin() + j + 1, wa.end());
                out.add(w, va);
            }
        }
    return out;
}

HochschildCochain CochainComplex::bracket(const HochschildCochain& a,
                                          const HochschildCochain& b) const {
    HochschildCochain out = circle(a, b);
    HochschildCochain ba = circle(b, a);
    if (out.degree != ba.degree && !out.is_zero() && !ba.is_zero())
        throw std::invalid_argument("bracket: degree mismatch");
    for (const auto& [w, v] : ba.comps) out.add(w, v);
    out.truncated = out.truncated || ba.truncated;
    return out;
}

HochschildCochain CochainComplex::connes_b(const HochschildCochain& c) const {
    if (!module_is_dual_free_)
        throw std::invalid_argument("connes_b: module must be the dual of the algebra");
    HochschildCochain out = make(c.degree + 1);
    out.truncated = c.truncated;
    for (const auto& [w, nu] : c.comps) {
        std::size_t r = w.size();
        if (r == 0) continue;
        // nu evaluated at the unit; M* coordinates match algebra basis order
        if (!nu.dot(A_.unit)) continue;
        for (std::size_t k = 0; k < r; ++k) {
            Word w2;
            w2.reserve(r - 1);
            w2.insert(w2.end(), w.begin() + k + 1, w.end());
            w2.insert(w2.end(), w.begin(), w.begin() + k);
            out.add(w2, dual_proj_[w[k]]);
        }
    }
    return out;
}

std::string CochainComplex::show(const HochschildCochain& c) const {
    if (c.comps.empty()) return c.truncated ? "0 (truncated)" : "0";
    std::string s;
    for (const auto& [w, v] : c.comps) {
        if (!s.empty()) s += "  ";
        s += word_str(A_, cb_, w) + " -> " + M_.show(v);
    }
    if (c.truncated) s += " (truncated)";
    return s;
}

HochschildCochain ch_of_morphism(const DgMorphism& f, const CochainComplex& src,
                                 const CochainComplex& dst, const HochschildCochain& c) {
    if (src.module().dim() != dst.module().dim())
        throw std::invalid_argument("ch_of_morphism: module dimension mismatch");
    std::size_t LB = dst.letters().count();

    // preimages[x]: source letters y whose image contains target letter x
    std::vector<std::vector<std::uint8_t>> preimages(src.letters().count());
    for (std::size_t y = 0; y < LB; ++y) {
        F2Vector img = src.project(f.apply(dst.algebra().basis_vector(dst.letters().letters[y])));
        for (std::size_t x : img.support())
            preimages[x].push_back(static_cast<std::uint8_t>(y));
    }

    HochschildCochain out = dst.make(c.degree);
    out.truncated = c.truncated;
    for (const auto& [w, v] : c.comps) {
        std::size_t r = w.size();
        bool dead = false;
        for (std::uint8_t x : w)
            if (preimages[x].empty()) {
                dead = true;
                break;
            }
        if (dead) continue;
        Word w2(r, 0);
        std::vector<std::size_t> pos(r, 0);
        while (true) {
            for (std::size_t i = 0; i < r; ++i) w2[i] = preimages[w[i]][pos[i]];
            out.add(w2, v);
            if (r == 0) break;
            std::size_t i = r;
            bool done = false;
            while (i > 0) {
                --i;
                if (++pos[i] < preimages[w[i]].size()) break;
                pos[i] = 0;
                if (i == 0) done = true;
            }
            if (done) break;
        }
    }
    return out;
}

std::map<int, std::size_t> HHBasis::dims() const {
    std::map<int, std::size_t> d;
    for (const auto& [deg, s] : slices) d[deg] = s.reps.size();
    return d;
}

namespace {

using GenKey = std::pair<Word, std::size_t>;

// (arity, word, module index) ordering for generator columns
bool gen_less(const GenKey& a, const GenKey& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a < b;
}

std::vector<GenKey> enumerate_generators(const CochainComplex& cc, int degree, int max_arity) {
    const auto& cb = cc.letters();
    const auto& M = cc.module();
    std::size_t L = cb.count();
    std::vector<GenKey> gens;

    double count = 1;
    for (int r = 1; r <= max_arity; ++r) {
        count *= static_cast<double>(L);
        if (count > 2e6)
            throw std::runtime_error("hh_basis: word space too large at arity bound " +
                                     std::to_string(max_arity));
    }

    Word w;
    auto emit = [&]() {
        int wd = word_degree(cb, w);
        for (std::size_t m = 0; m < M.dim(); ++m)
            if (M.degree[m] == degree + wd) gens.emplace_back(w, m);
    };
    // words in (arity, lex) order
    for (int r = 0; r <= max_arity; ++r) {
        w.assign(r, 0);
        if (r == 0) {
            emit();
            continue;
        }
        while (true) {
            emit();
            int i = r;
            bool done = false;
            while (i > 0) {
                --i;
                if (++w[i] < L) break;
                w[i] = 0;
                if (i == 0) done = true;
            }
            if (done) break;
        }
    }
    std::sort(gens.begin(), gens.end(), gen_less);
    return gens;
}

}  // namespace

std::vector<std::pair<Word, std::size_t>> degree_generators(const CochainComplex& cc,
                                                            int degree) {
    return enumerate_generators(cc, degree, cc.arity_bound());
}

HHBasis hh_basis(const CochainComplex& cc, int degree_min, int degree_max) {
    if (degree_min > degree_max)
        throw std::invalid_argument("hh_basis: empty degree range");
    int N = cc.arity_bound();
    // differentials of arity-N generators must not be cut off
    CochainComplex work(cc.algebra(), cc.module(), N + 1);

    HHBasis H;
    H.arity_bound = N;

    const auto& M = cc.module();
    int min_mdeg = 0;
    bool shifts_negative = true;
    if (!M.degree.empty()) min_mdeg = *std::min_element(M.degree.begin(), M.degree.end());
    for (int sd : cc.letters().shifted_degree)
        if (sd >= 0) shifts_negative = false;
    auto max_possible_arity = [&](int d) { return std::max(0, d - min_mdeg); };

    std::map<int, std::vector<GenKey>> gens;
    for (int d = degree_min; d <= degree_max + 1; ++d)
        gens[d] = enumerate_generators(cc, d, N);

    for (int d = degree_min; d <= degree_max; ++d) {
        HHBasis::Slice slice;
        slice.degree = d;
        slice.generators = gens[d];
        for (std::size_t i = 0; i < slice.generators.size(); ++i)
            slice.generator_index[slice.generators[i]] = i;
        std::size_t W = slice.generators.size();  // within-bound columns

        // keys for differential components, within-bound generators first
        std::map<GenKey, std::size_t> extra_key;
        std::vector<GenKey> extra_keys;
        auto key_of = [&](const GenKey& k) -> std::pair<bool, std::size_t> {
            auto it = slice.generator_index.find(k);
            if (it != slice.generator_index.end()) return {false, it->second};
            auto [jt, inserted] = extra_key.emplace(k, extra_keys.size());
            if (inserted) extra_keys.push_back(k);
            return {true, jt->second};
        };

        // sparse differentials of this degree's generators (for the kernel)
        std::map<GenKey, std::size_t> dkey;  // keys of the target space
        std::vector<std::vector<std::size_t>> dcol_rows(W);
        for (std::size_t j = 0; j < W; ++j) {
            HochschildCochain g = work.single(slice.generators[j].first,
                                              slice.generators[j].second);
            HochschildCochain dg = work.differential(g);
            if (dg.truncated) throw std::runtime_error("hh_basis: internal truncation");
            for (const auto& [w2, v2] : dg.comps)
                for (std::size_t m : v2.support())
                    dcol_rows[j].push_back(dkey.emplace(GenKey{w2, m}, dkey.size()).first->second);
        }
        F2Matrix dmat(dkey.size(), W);
        for (std::size_t j = 0; j < W; ++j)
            for (std::size_t rr : dcol_rows[j]) dmat.set(rr, j, true);
        std::vector<F2Vector> ker = kernel_basis(dmat);

        // image of the next degree, intersected with the within-bound span
        const auto& up = gens[d + 1];
        std::vector<std::vector<std::pair<bool, std::size_t>>> img_entries;
        for (const auto& g : up) {
            HochschildCochain dg = work.differential(work.single(g.first, g.second));
            if (dg.truncated) throw std::runtime_error("hh_basis: internal truncation");
            std::vector<std::pair<bool, std::size_t>> entries;
            for (const auto& [w2, v2] : dg.comps)
                for (std::size_t m : v2.support()) entries.push_back(key_of(GenKey{w2, m}));
            img_entries.push_back(std::move(entries));
        }
        std::size_t E = extra_keys.size();
        F2Matrix img(0, E + W);
        for (const auto& entries : img_entries) {
            F2Vector row(E + W);
            for (auto [is_extra, idx] : entries) row.flip(is_extra ? idx : E + idx);
            img.append_row(std::move(row));
        }
        row_reduce(img);
        EchelonBasis image(W);
        for (std::size_t r = 0; r < img.rows(); ++r) {
            auto sup = img.row(r).support();
            if (sup.empty()) continue;
            if (sup.front() < E) continue;  // leaves the bound, not in the span
            F2Vector within(W);
            for (std::size_t cidx : sup) within.set(cidx - E, true);
            image.insert(std::move(within));
        }
        slice.image_rows = image.rows();

        EchelonBasis seen(W);
        for (const auto& kv : ker) {
            F2Vector r = seen.residue(image.residue(kv));
            if (r.is_zero()) continue;
            seen.insert(r);
            slice.rep_vectors.push_back(r);
            HochschildCochain rep = cc.make(d);
            for (std::size_t j : r.support())
                rep.add(slice.generators[j].first,
                        M.basis_vector(slice.generators[j].second));
            slice.reps.push_back(std::move(rep));
        }

        slice.exact = shifts_negative && max_possible_arity(d) <= N &&
                      max_possible_arity(d + 1) <= N;
        H.slices[d] = std::move(slice);
    }
    return H;
}

F2Vector coords(const CochainComplex& cc, const HHBasis& h, const HochschildCochain& c) {
    auto it = h.slices.find(c.degree);
    if (it == h.slices.end())
        throw std::invalid_argument("coords: no slice for degree " + std::to_string(c.degree));
    const HHBasis::Slice& slice = it->second;
    if (c.truncated) throw std::invalid_argument("coords: cochain carries truncation marker");

    CochainComplex work(cc.algebra(), cc.module(), c.max_arity() + 1);
    HochschildCochain dc = work.differential(c);
    if (!dc.is_zero() || dc.truncated)
        throw std::invalid_argument("coords: cochain is not closed");

    F2Vector vec(slice.generators.size());
    for (const auto& [w, v] : c.comps)
        for (std::size_t m : v.support()) {
            auto jt = slice.generator_index.find(GenKey{w, m});
            if (jt == slice.generator_index.end())
                throw std::invalid_argument("coords: component outside the arity bound");
            vec.flip(jt->second);
        }

    F2Matrix sys(slice.generators.size(), 0);
    for (const auto& r : slice.rep_vectors) sys.append_col(r);
    for (const auto& r : slice.image_rows) sys.append_col(r);
    auto x = solve(sys, vec);
    if (!x) throw std::runtime_error("coords: class not representable in the computed basis");
    F2Vector out(slice.rep_vectors.size());
    for (std::size_t i = 0; i < out.size(); ++i) out.set(i, x->get(i));
    return out;
}

}  // namespace hochbv
