#include "hochbv/hip.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hochbv {

F2Vector HomotopyInnerProduct::at(const HipKey& k, std::size_t dual_dim) const {
    auto it = comps.find(k);
    return it == comps.end() ? F2Vector(dual_dim) : it->second;
}

void HomotopyInnerProduct::add(const HipKey& k, const F2Vector& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = comps.emplace(k, v);
    if (!inserted) {
        it->second ^= v;
        if (it->second.is_zero()) comps.erase(it);
    }
}

int HomotopyInnerProduct::max_p() const {
    int m = 0;
    for (const auto& [k, v] : comps) m = std::max<int>(m, static_cast<int>(k.left.size()));
    return m;
}

int HomotopyInnerProduct::max_q() const {
    int m = 0;
    for (const auto& [k, v] : comps) m = std::max<int>(m, static_cast<int>(k.right.size()));
    return m;
}

HomotopyInnerProduct restrict_pq(const HomotopyInnerProduct& F, int pq_bound) {
    HomotopyInnerProduct out;
    out.degree = F.degree;
    for (const auto& [k, v] : F.comps)
        if (static_cast<int>(k.left.size()) <= pq_bound &&
            static_cast<int>(k.right.size()) <= pq_bound)
            out.comps.emplace(k, v);
    return out;
}

std::string serialize_pattern(const PatternHIP& P) {
    std::ostringstream out;
    auto slots = [&](const std::vector<PatternSlot>& ss) {
        std::string s = "[";
        for (std::size_t i = 0; i < ss.size(); ++i) {
            if (i) s += " ";
            s += ss[i].letter;
            if (ss[i].star) s += "*";
        }
        return s + "]";
    };
    for (const auto& c : P.comps)
        out << "left: " << slots(c.left) << " m: " << c.m << " right: " << slots(c.right)
            << " out: " << c.out << "\n";
    return out.str();
}

PatternHIP parse_pattern(const std::string& text) {
    PatternHIP P;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string spaced;
        for (char ch : line) {
            if (ch == '#') break;
            if (ch == '[' || ch == ']') {
                spaced += ' ';
                spaced += ch;
                spaced += ' ';
            } else {
                spaced += ch;
            }
        }
        std::istringstream ls(spaced);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;

        auto fail = [&](const std::string& msg) {
            throw std::runtime_error("pattern line " + std::to_string(lineno) + ": " + msg);
        };
        std::size_t i = 0;
        auto expect = [&](const std::string& s) {
            if (i >= toks.size() || toks[i] != s) fail("expected '" + s + "'");
            ++i;
        };
        auto take = [&]() {
            if (i >= toks.size()) fail("unexpected end of line");
            return toks[i++];
        };
        auto slot_list = [&]() {
            expect("[");
            std::vector<PatternSlot> ss;
            while (i < toks.size() && toks[i] != "]") {
                std::string s = toks[i++];
                bool star = !s.empty() && s.back() == '*';
                if (star) s.pop_back();
                if (s.empty()) fail("empty slot name");
                ss.push_back({s, star});
            }
            expect("]");
            return ss;
        };

        PatternComponent c;
        expect("left:");
        c.left = slot_list();
        expect("m:");
        c.m = take();
        expect("right:");
        c.right = slot_list();
        expect("out:");
        c.out = take();
        if (i != toks.size()) fail("trailing tokens");
        P.comps.push_back(std::move(c));
    }
    return P;
}

HipContext::HipContext(DgAlgebra A, DgBimodule M, int arity_bound)
    : ch_m_(A, M, arity_bound), ch_dual_(A, dual_bimodule(M, A), arity_bound) {
    const auto& cb = ch_m_.letters();
    std::size_t L = cb.count();
    std::size_t md = M.dim();

    rev_mdiff_.assign(md, {});
    rev_left_.assign(md, {});
    rev_right_.assign(md, {});
    for (std::size_t m2 = 0; m2 < md; ++m2) {
        for (std::size_t m : M.diff[m2].support()) rev_mdiff_[m].push_back(m2);
        for (std::size_t y = 0; y < L; ++y)
            for (std::size_t m : M.left[cb.letters[y]][m2].support())
                rev_left_[m].emplace_back(static_cast<std::uint8_t>(y), m2);
        for (std::size_t z = 0; z < L; ++z)
            for (std::size_t m : M.right[m2][cb.letters[z]].support())
                rev_right_[m].emplace_back(m2, static_cast<std::uint8_t>(z));
    }

    val_right_.reserve(L);
    val_left_.reserve(L);
    for (std::size_t y = 0; y < L; ++y) {
        std::vector<F2Vector> rrows, lrows;
        rrows.reserve(md);
        lrows.reserve(md);
        for (std::size_t n = 0; n < md; ++n) {
            rrows.push_back(M.right[n][cb.letters[y]]);
            lrows.push_back(M.left[cb.letters[y]][n]);
        }
        val_right_.push_back(F2Matrix::from_rows(std::move(rrows)));
        val_left_.push_back(F2Matrix::from_rows(std::move(lrows)));
    }
}

HomotopyInnerProduct HipContext::expand_pattern(const PatternHIP& P, int pq_bound) const {
    const DgAlgebra& A = algebra();
    const DgBimodule& M = module();
    const ComplementBasis& cb = letters();

    auto resolve_letter = [&](const std::string& name, bool star) -> std::uint8_t {
        int bi = A.index_of(name);
        if (bi < 0) throw std::invalid_argument("expand_pattern: unknown generator " + name);
        int li = cb.letter_of_basis[bi];
        if (li < 0)
            throw std::invalid_argument("expand_pattern: " + name +
                                        " is not a complement letter");
        if (star && cb.shifted_degree[li] != 0)
            throw std::invalid_argument("expand_pattern: starred slot " + name +
                                        " must have shifted degree 0");
        return static_cast<std::uint8_t>(li);
    };

    struct Slot {
        std::uint8_t letter;
        bool star;
    };
    HomotopyInnerProduct F;
    bool have_degree = false;

    for (const auto& comp : P.comps) {
        std::vector<Slot> ls, rs;
        for (const auto& s : comp.left) ls.push_back({resolve_letter(s.letter, s.star), s.star});
        for (const auto& s : comp.right) rs.push_back({resolve_letter(s.letter, s.star), s.star});
        int mi = M.index_of(comp.m);
        if (mi < 0) throw std::invalid_argument("expand_pattern: unknown module element " + comp.m);
        int oi = M.index_of(comp.out);
        if (oi < 0) throw std::invalid_argument("expand_pattern: unknown output element " + comp.out);

        int base_deg = -M.degree[oi] - M.degree[mi];
        for (const auto& s : ls)
            if (!s.star) base_deg -= cb.shifted_degree[s.letter];
        for (const auto& s : rs)
            if (!s.star) base_deg -= cb.shifted_degree[s.letter];
        if (!have_degree) {
            F.degree = base_deg;
            have_degree = true;
        } else if (F.degree != base_deg) {
            throw std::invalid_argument("expand_pattern: components of mixed degree");
        }

        // words matching the slot template with length <= pq_bound
        auto expand_side = [&](const std::vector<Slot>& slots) {
            std::vector<Word> words;
            Word cur;
            auto rec = [&](auto&& self, std::size_t si) -> void {
                if (si == slots.size()) {
                    words.push_back(cur);
                    return;
                }
                std::size_t fixed_rest = 0;
                for (std::size_t k = si; k < slots.size(); ++k)
                    if (!slots[k].star) ++fixed_rest;
                if (cur.size() + fixed_rest > static_cast<std::size_t>(pq_bound)) return;
                if (!slots[si].star) {
                    cur.push_back(slots[si].letter);
                    self(self, si + 1);
                    cur.pop_back();
                } else {
                    std::size_t pushed = 0;
                    while (true) {
                        self(self, si + 1);
                        if (cur.size() + fixed_rest >= static_cast<std::size_t>(pq_bound)) break;
                        cur.push_back(slots[si].letter);
                        ++pushed;
                    }
                    while (pushed--) cur.pop_back();
                }
            };
            rec(rec, 0);
            return words;
        };

        std::vector<Word> lws = expand_side(ls);
        std::vector<Word> rws = expand_side(rs);
        F2Vector out = F2Vector::basis(M.dim(), static_cast<std::size_t>(oi));
        for (const auto& lw : lws)
            for (const auto& rw : rws)
                F.add({lw, static_cast<std::size_t>(mi), rw}, out);
    }
    return F;
}

HomotopyInnerProduct HipContext::differential(const HomotopyInnerProduct& F) const {
    HomotopyInnerProduct out;
    out.degree = F.degree - 1;
    const DgBimodule& Md = dual();
    std::size_t L = letters().count();

    for (const auto& [key, nu] : F.comps) {
        const Word& Lw = key.left;
        const Word& Rw = key.right;
        std::size_t p = Lw.size(), q = Rw.size();

        // value slot: nu composed with d
        out.add(key, Md.d(nu));

        // argument slots through d
        for (std::size_t j = 0; j < p; ++j) {
            HipKey k2 = key;
            for (std::uint8_t y : ch_m_.rev_d(Lw[j])) {
                k2.left[j] = y;
                out.add(k2, nu);
            }
        }
        for (std::size_t j = 0; j < q; ++j) {
            HipKey k2 = key;
            for (std::uint8_t y : ch_m_.rev_d(Rw[j])) {
                k2.right[j] = y;
                out.add(k2, nu);
            }
        }

        // module slot through d
        for (std::size_t m2 : rev_mdiff_[key.m]) out.add({Lw, m2, Rw}, nu);

        // adjacent argument merges
        for (std::size_t j = 0; j < p; ++j)
            for (const auto& [y, z] : ch_m_.rev_merge(Lw[j])) {
                HipKey k2;
                k2.left.reserve(p + 1);
                k2.left.insert(k2.left.end(), Lw.begin(), Lw.begin() + j);
                k2.left.push_back(y);
                k2.left.push_back(z);
                k2.left.insert(k2.left.end(), Lw.begin() + j + 1, Lw.end());
                k2.m = key.m;
                k2.right = Rw;
                out.add(k2, nu);
            }
        for (std::size_t j = 0; j < q; ++j)
            for (const auto& [y, z] : ch_m_.rev_merge(Rw[j])) {
                HipKey k2;
                k2.left = Lw;
                k2.m = key.m;
                k2.right.reserve(q + 1);
                k2.right.insert(k2.right.end(), Rw.begin(), Rw.begin() + j);
                k2.right.push_back(y);
                k2.right.push_back(z);
                k2.right.insert(k2.right.end(), Rw.begin() + j + 1, Rw.end());
                out.add(k2, nu);
            }

        // last left argument absorbed into the module slot
        for (const auto& [y, m2] : rev_left_[key.m]) {
            HipKey k2;
            k2.left = Lw;
            k2.left.push_back(y);
            k2.m = m2;
            k2.right = Rw;
            out.add(k2, nu);
        }
        // first right argument absorbed into the module slot
        for (const auto& [m2, z] : rev_right_[key.m]) {
            HipKey k2;
            k2.left = Lw;
            k2.m = m2;
            k2.right.reserve(q + 1);
            k2.right.push_back(z);
            k2.right.insert(k2.right.end(), Rw.begin(), Rw.end());
            out.add(k2, nu);
        }

        // first left / last right argument absorbed into the value slot
        for (std::size_t y = 0; y < L; ++y) {
            F2Vector nu2 = val_right_[y].mul(nu);
            if (!nu2.is_zero()) {
                HipKey k2;
                k2.left.reserve(p + 1);
                k2.left.push_back(static_cast<std::uint8_t>(y));
                k2.left.insert(k2.left.end(), Lw.begin(), Lw.end());
                k2.m = key.m;
                k2.right = Rw;
                out.add(k2, nu2);
            }
            nu2 = val_left_[y].mul(nu);
            if (!nu2.is_zero()) {
                HipKey k2;
                k2.left = Lw;
                k2.m = key.m;
                k2.right = Rw;
                k2.right.push_back(static_cast<std::uint8_t>(y));
                out.add(k2, nu2);
            }
        }
    }
    return out;
}

F2Vector HipContext::differential_at(const HomotopyInnerProduct& F, const HipKey& key) const {
    const DgBimodule& M = module();
    const DgBimodule& Md = dual();
    const ComplementBasis& cb = letters();
    const Word& Lw = key.left;
    const Word& Rw = key.right;
    std::size_t p = Lw.size(), q = Rw.size(), md = M.dim();

    F2Vector nu = Md.d(F.at(key, md));

    for (std::size_t j = 0; j < p; ++j) {
        HipKey k2 = key;
        for (std::size_t x : ch_m_.proj_d(Lw[j]).support()) {
            k2.left[j] = static_cast<std::uint8_t>(x);
            nu ^= F.at(k2, md);
        }
    }
    for (std::size_t m2 : M.diff[key.m].support()) nu ^= F.at({Lw, m2, Rw}, md);
    for (std::size_t j = 0; j < q; ++j) {
        HipKey k2 = key;
        for (std::size_t x : ch_m_.proj_d(Rw[j]).support()) {
            k2.right[j] = static_cast<std::uint8_t>(x);
            nu ^= F.at(k2, md);
        }
    }

    if (p >= 1) {
        HipKey k2{Word(Lw.begin() + 1, Lw.end()), key.m, Rw};
        nu ^= val_right_[Lw[0]].mul(F.at(k2, md));

        for (std::size_t j = 0; j + 1 < p; ++j) {
            HipKey k3;
            k3.left.insert(k3.left.end(), Lw.begin(), Lw.begin() + j);
            k3.left.push_back(0);
            k3.left.insert(k3.left.end(), Lw.begin() + j + 2, Lw.end());
            k3.m = key.m;
            k3.right = Rw;
            for (std::size_t x : ch_m_.proj_mul(Lw[j], Lw[j + 1]).support()) {
                k3.left[j] = static_cast<std::uint8_t>(x);
                nu ^= F.at(k3, md);
            }
        }

        HipKey k4{Word(Lw.begin(), Lw.end() - 1), 0, Rw};
        for (std::size_t m2 : M.left[cb.letters[Lw[p - 1]]][key.m].support()) {
            k4.m = m2;
            nu ^= F.at(k4, md);
        }
    }
    if (q >= 1) {
        HipKey k2{Lw, 0, Word(Rw.begin() + 1, Rw.end())};
        for (std::size_t m2 : M.right[key.m][cb.letters[Rw[0]]].support()) {
            k2.m = m2;
            nu ^= F.at(k2, md);
        }

        for (std::size_t j = 0; j + 1 < q; ++j) {
            HipKey k3;
            k3.left = Lw;
            k3.m = key.m;
            k3.right.insert(k3.right.end(), Rw.begin(), Rw.begin() + j);
            k3.right.push_back(0);
            k3.right.insert(k3.right.end(), Rw.begin() + j + 2, Rw.end());
            for (std::size_t x : ch_m_.proj_mul(Rw[j], Rw[j + 1]).support()) {
                k3.right[j] = static_cast<std::uint8_t>(x);
                nu ^= F.at(k3, md);
            }
        }

        HipKey k4{Lw, key.m, Word(Rw.begin(), Rw.end() - 1)};
        nu ^= val_left_[Rw[q - 1]].mul(F.at(k4, md));
    }
    return nu;
}

bool HipContext::is_homotopy_inner_product(const HomotopyInnerProduct& F, int pq_bound,
                                           std::string* witness) const {
    HomotopyInnerProduct df = restrict_pq(differential(F), pq_bound);
    if (df.comps.empty()) return true;
    if (witness) {
        const auto& [k, v] = *df.comps.begin();
        *witness = show_key(k) + " -> " + dual().show(v);
    }
    return false;
}

bool HipContext::boundary_identity(const HomotopyInnerProduct& F,
                                   const HomotopyInnerProduct& rhs, int pq_bound,
                                   std::string* witness) const {
    HomotopyInnerProduct df = restrict_pq(differential(F), pq_bound);
    HomotopyInnerProduct rr = restrict_pq(rhs, pq_bound);
    for (const auto& [k, v] : rr.comps) df.add(k, v);
    if (df.comps.empty()) return true;
    if (witness) {
        const auto& [k, v] = *df.comps.begin();
        *witness = show_key(k) + " differs by " + dual().show(v);
    }
    return false;
}

HochschildCochain HipContext::ch_of_hip(const HomotopyInnerProduct& F,
                                        const HochschildCochain& phi) const {
    HochschildCochain out = ch_dual_.make(F.degree + phi.degree);
    out.truncated = phi.truncated;
    for (const auto& [key, nu] : F.comps)
        for (const auto& [w, v] : phi.comps) {
            if (!v.get(key.m)) continue;
            Word w2;
            w2.reserve(key.left.size() + w.size() + key.right.size());
            w2.insert(w2.end(), key.left.begin(), key.left.end());
            w2.insert(w2.end(), w.begin(), w.end());
            w2.insert(w2.end(), key.right.begin(), key.right.end());
            out.add(w2, nu);
        }
    return out;
}

HochschildCochain HipContext::z_operator(const HomotopyInnerProduct& F,
                                         const HochschildCochain& phi) const {
    if (!ch_m_.module_is_free())
        throw std::invalid_argument("z_operator: module must be the algebra itself");
    const DgAlgebra& A = algebra();
    HochschildCochain out = ch_dual_.make(F.degree + phi.degree + 1);
    out.truncated = phi.truncated;

    for (const auto& [key, nu] : F.comps) {
        if (!A.unit.get(key.m)) continue;
        const Word& Lw = key.left;
        const Word& Rw = key.right;
        for (const auto& [w, v] : phi.comps) {
            std::size_t r = w.size();

            // module slot of F at the unit, phi wrapped around the cycle
            if (nu.dot(v)) {
                for (std::size_t t = 0; t < r; ++t) {
                    Word w2;
                    w2.reserve(Lw.size() + Rw.size() + r - 1);
                    w2.insert(w2.end(), w.begin() + t + 1, w.end());
                    w2.insert(w2.end(), Lw.begin(), Lw.end());
                    w2.insert(w2.end(), Rw.begin(), Rw.end());
                    w2.insert(w2.end(), w.begin(), w.begin() + t);
                    out.add(w2, ch_m_.dual_proj(w[t]));
                }
            }

            // phi's value inserted into one argument slot of F
            F2Vector pv = ch_m_.project(v);
            for (std::size_t t = 0; t < Rw.size(); ++t) {
                if (!pv.get(Rw[t])) continue;
                Word w2;
                w2.reserve(Lw.size() + Rw.size() + r - 1);
                w2.insert(w2.end(), Lw.begin(), Lw.end());
                w2.insert(w2.end(), Rw.begin(), Rw.begin() + t);
                w2.insert(w2.end(), w.begin(), w.end());
                w2.insert(w2.end(), Rw.begin() + t + 1, Rw.end());
                out.add(w2, nu);
            }
            for (std::size_t t = 0; t < Lw.size(); ++t) {
                if (!pv.get(Lw[t])) continue;
                Word w2;
                w2.reserve(Lw.size() + Rw.size() + r - 1);
                w2.insert(w2.end(), Lw.begin(), Lw.begin() + t);
                w2.insert(w2.end(), w.begin(), w.end());
                w2.insert(w2.end(), Lw.begin() + t + 1, Lw.end());
                w2.insert(w2.end(), Rw.begin(), Rw.end());
                out.add(w2, nu);
            }
        }
    }
    return out;
}

std::string HipContext::show_key(const HipKey& k) const {
    const DgAlgebra& A = algebra();
    const ComplementBasis& cb = letters();
    auto side = [&](const Word& w) {
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += ",";
            s += A.basis_names[cb.letters[w[i]]];
        }
        return s;
    };
    return "[" + side(k.left) + " | " + module().basis_names[k.m] + " | " + side(k.right) + "]";
}

std::string HipContext::show(const HomotopyInnerProduct& F) const {
    if (F.comps.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : F.comps) {
        if (!s.empty()) s += "\n";
        s += show_key(k) + " -> " + dual().show(v);
    }
    return s;
}

HomotopyInnerProduct pullback_hip(const DgMorphism& f, const HipContext& src,
                                  const HipContext& dst, const HomotopyInnerProduct& F) {
    if (src.algebra().dim() != f.target.dim() || dst.algebra().dim() != f.source.dim())
        throw std::invalid_argument("pullback_hip: contexts do not match the morphism");
    if (!src.coefficients().module_is_free() || !dst.coefficients().module_is_free())
        throw std::invalid_argument("pullback_hip: modules must be the algebras themselves");

    const DgAlgebra& B = f.source;
    std::size_t LB = dst.letters().count();

    std::vector<std::vector<std::uint8_t>> preimages(src.letters().count());
    for (std::size_t y = 0; y < LB; ++y) {
        F2Vector img = src.coefficients().project(
            f.apply(B.basis_vector(dst.letters().letters[y])));
        for (std::size_t x : img.support())
            preimages[x].push_back(static_cast<std::uint8_t>(y));
    }
    F2Matrix fmat = F2Matrix::from_rows(f.map);  // rows: f of B basis elements

    HomotopyInnerProduct out;
    out.degree = F.degree;

    for (const auto& [key, nu] : F.comps) {
        F2Vector nu_b = fmat.mul(nu);
        if (nu_b.is_zero()) continue;

        bool dead = false;
        for (std::uint8_t x : key.left)
            if (preimages[x].empty()) dead = true;
        for (std::uint8_t x : key.right)
            if (preimages[x].empty()) dead = true;
        if (dead) continue;

        std::vector<std::size_t> mods;
        for (std::size_t mb = 0; mb < B.dim(); ++mb)
            if (f.map[mb].get(key.m)) mods.push_back(mb);
        if (mods.empty()) continue;

        // cartesian product over per-position preimages and module choices
        std::size_t p = key.left.size(), q = key.right.size();
        std::vector<std::size_t> pos(p + q, 0);
        HipKey k2;
        k2.left.assign(p, 0);
        k2.right.assign(q, 0);
        while (true) {
            for (std::size_t i = 0; i < p; ++i) k2.left[i] = preimages[key.left[i]][pos[i]];
            for (std::size_t i = 0; i < q; ++i)
                k2.right[i] = preimages[key.right[i]][pos[p + i]];
            for (std::size_t mb : mods) {
                k2.m = mb;
                out.add(k2, nu_b);
            }
            std::size_t i = p + q;
            bool done = (i == 0);
            while (i > 0) {
                --i;
                std::uint8_t x = i < p ? key.left[i] : key.right[i - p];
                if (++pos[i] < preimages[x].size()) break;
                pos[i] = 0;
                if (i == 0) done = true;
            }
            if (done) break;
        }
    }
    return out;
}

namespace {

std::vector<PatternSlot> slots_of(const std::string& spec) {
    std::vector<PatternSlot> out;
    std::istringstream in(spec);
    std::string t;
    while (in >> t) {
        bool star = t.back() == '*';
        if (star) t.pop_back();
        out.push_back({t, star});
    }
    return out;
}

PatternComponent comp_of(const std::string& left, const std::string& m,
                         const std::string& right, const std::string& out) {
    return {slots_of(left), m, slots_of(right), out};
}

/* The eight component families of the 2-simplex inner product on vertices
 * (i,j,l), written with the vertex labels. */
std::vector<PatternComponent> simplex2_comps(const std::string& i, const std::string& j,
                                             const std::string& l) {
    std::string ei = "e" + i, ej = "e" + j, el = "e" + l;
    std::string bij = "b" + i + j, bil = "b" + i + l, bjl = "b" + j + l;
    std::string c = "c" + i + j + l;
    return {
        comp_of(bil + "*", c, "", el),
        comp_of(bil + "*", ei, "", c),
        comp_of(bil + "*", bij, "", bjl),
        comp_of(bij + "* " + c + " " + bil + "*", ei, "", bij),
        comp_of(bij + "* " + c + " " + bil + "*", bij, "", ej),
        comp_of(bil + "* " + c + " " + bjl + "*", ej, "", bjl),
        comp_of(bil + "* " + c + " " + bjl + "*", bjl, "", el),
        comp_of(bij + "* " + c + " " + bil + "* " + c + " " + bjl + "*", ej, "", ej),
    };
}

}  // namespace

std::vector<HipCatalogEntry> catalog_hips() {
    std::vector<HipCatalogEntry> cat;

    {
        PatternHIP P;
        P.name = "sphere-strict";
        P.algebra = "sphere-cohomology";
        P.comps = {comp_of("", "s", "", "e"), comp_of("", "e", "", "s")};
        cat.push_back({P.name, P.algebra, P});
    }
    {
        PatternHIP P;
        P.name = "sphere-tilde";
        P.algebra = "sphere-cohomology";
        P.comps = {comp_of("", "s", "", "e"), comp_of("", "e", "", "s"),
                   comp_of("s s", "e", "", "e")};
        cat.push_back({P.name, P.algebra, P});
    }
    {
        PatternHIP P;
        P.name = "simplex-0";
        P.algebra = "simplex-0";
        P.comps = {comp_of("", "e0", "", "e0")};
        cat.push_back({P.name, P.algebra, P});
    }
    {
        PatternHIP P;
        P.name = "simplex-1";
        P.algebra = "simplex-1";
        P.comps = {comp_of("b01*", "e0", "", "b01"), comp_of("b01*", "b01", "", "e1")};
        cat.push_back({P.name, P.algebra, P});
    }
    {
        PatternHIP P;
        P.name = "simplex-2";
        P.algebra = "simplex-2";
        P.comps = simplex2_comps("0", "1", "2");
        cat.push_back({P.name, P.algebra, P});
    }
    {
        PatternHIP P;
        P.name = "sphere-cochain";
        P.algebra = "sphere-cochains";
        for (auto [i, j, l] : {std::array<const char*, 3>{"0", "1", "2"},
                               std::array<const char*, 3>{"0", "1", "3"},
                               std::array<const char*, 3>{"0", "2", "3"},
                               std::array<const char*, 3>{"1", "2", "3"}}) {
            auto cs = simplex2_comps(i, j, l);
            P.comps.insert(P.comps.end(), cs.begin(), cs.end());
        }
        cat.push_back({P.name, P.algebra, P});
    }
    {
        PatternHIP P;
        P.name = "counterexample";
        P.algebra = "counterexample";
        P.comps = {comp_of("", "c", "", "e"),      comp_of("", "b", "", "b"),
                   comp_of("", "e", "", "c"),      comp_of("c b c", "e", "", "e"),
                   comp_of("b b b", "c", "", "e"), comp_of("b b b", "e", "", "c"),
                   comp_of("b b b", "b", "", "b")};
        cat.push_back({P.name, P.algebra, P});
    }
    return cat;
}

PatternHIP builtin_hip(std::string_view name) {
    for (const auto& e : catalog_hips())
        if (e.name == name) return e.pattern;
    throw std::invalid_argument("unknown builtin inner product: " + std::string(name));
}

}  // namespace hochbv
