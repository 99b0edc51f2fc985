#include "hochbv/f2.hpp"

#include <bit>
#include <stdexcept>

namespace hochbv {

F2Vector F2Vector::basis(std::size_t len, std::size_t i) {
    F2Vector v(len);
    v.set(i, true);
    return v;
}

F2Vector F2Vector::from_bits(std::initializer_list<int> bits) {
    F2Vector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
}

void F2Vector::set(std::size_t i, bool v) {
    if (i >= len_) throw std::out_of_range("F2Vector::set: index " + std::to_string(i));
    std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (v)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

bool F2Vector::is_zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t F2Vector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

std::vector<std::size_t> F2Vector::support() const {
    std::vector<std::size_t> s;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            s.push_back(wi * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return s;
}

F2Vector& F2Vector::operator^=(const F2Vector& o) {
    if (len_ != o.len_) throw std::invalid_argument("F2Vector::operator^=: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

bool F2Vector::dot(const F2Vector& o) const {
    if (len_ != o.len_) throw std::invalid_argument("F2Vector::dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
    return std::popcount(acc) & 1u;
}

std::string F2Vector::str() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_rows(std::vector<F2Vector> rows) {
    F2Matrix m;
    if (!rows.empty()) {
        m.cols_ = rows[0].size();
        for (const auto& r : rows)
            if (r.size() != m.cols_)
                throw std::invalid_argument("F2Matrix::from_rows: ragged rows");
    }
    m.rows_ = std::move(rows);
    return m;
}

F2Matrix F2Matrix::from_bits(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<F2Vector> rs;
    for (const auto& r : rows) {
        F2Vector v(r.size());
        std::size_t i = 0;
        for (int b : r) v.set(i++, b != 0);
        rs.push_back(std::move(v));
    }
    return from_rows(std::move(rs));
}

void F2Matrix::append_row(F2Vector v) {
    if (rows_.empty() && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("F2Matrix::append_row: width mismatch");
    rows_.push_back(std::move(v));
}

void F2Matrix::append_col(const F2Vector& v) {
    if (v.size() != rows_.size())
        throw std::invalid_argument("F2Matrix::append_col: height mismatch");
    std::vector<F2Vector> out;
    out.reserve(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        F2Vector nr(cols_ + 1);
        for (std::size_t c = 0; c < cols_; ++c) nr.set(c, rows_[r].get(c));
        nr.set(cols_, v.get(r));
        out.push_back(std::move(nr));
    }
    cols_ += 1;
    rows_ = std::move(out);
}

F2Vector F2Matrix::mul(const F2Vector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("F2Matrix::mul: length mismatch");
    F2Vector y(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r].dot(x)) y.set(r, true);
    return y;
}

F2Matrix F2Matrix::mul(const F2Matrix& o) const {
    if (o.rows() != cols_) throw std::invalid_argument("F2Matrix::mul: shape mismatch");
    F2Matrix p(rows_.size(), o.cols());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t k : rows_[r].support()) p.rows_[r] ^= o.rows_[k];
    return p;
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c : rows_[r].support()) t.set(c, r, true);
    return t;
}

std::string F2Matrix::str() const {
    std::string s;
    for (const auto& r : rows_) {
        s += r.str();
        s += '\n';
    }
    return s;
}

std::vector<std::size_t> row_reduce(F2Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t r = pr;
        while (r < m.rows() && !m.get(r, c)) ++r;
        if (r == m.rows()) continue;
        if (r != pr) std::swap(m.row(r), m.row(pr));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != pr && m.get(i, c)) m.row(i) ^= m.row(pr);
        pivots.push_back(c);
        ++pr;
    }
    return pivots;
}

std::size_t rank(const F2Matrix& m) {
    F2Matrix c = m;
    return row_reduce(c).size();
}

std::vector<F2Vector> kernel_basis(const F2Matrix& m) {
    F2Matrix r = m;
    std::vector<std::size_t> pivots = row_reduce(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<F2Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        F2Vector v(m.cols());
        v.set(free, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (r.get(i, free)) v.set(pivots[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    F2Matrix aug = m;
    aug.append_col(b);
    std::vector<std::size_t> pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    F2Vector x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (aug.get(i, m.cols())) x.set(pivots[i], true);
    return x;
}

std::optional<F2Matrix> inverse(const F2Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    std::size_t n = m.rows();
    // eliminate on [m | I]
    F2Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c : m.row(r).support()) aug.set(r, c, true);
        aug.set(r, n + r, true);
    }
    std::size_t pr = 0;
    for (std::size_t c = 0; c < n && pr < n; ++c) {
        std::size_t r = pr;
        while (r < n && !aug.get(r, c)) ++r;
        if (r == n) return std::nullopt;
        if (r != pr) std::swap(aug.row(r), aug.row(pr));
        for (std::size_t i = 0; i < n; ++i)
            if (i != pr && aug.get(i, c)) aug.row(i) ^= aug.row(pr);
        ++pr;
    }
    if (pr < n) return std::nullopt;
    F2Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.set(r, c, aug.get(r, n + c));
    return inv;
}

F2Vector EchelonBasis::residue(F2Vector v) const {
    if (v.size() != width_) throw std::invalid_argument("EchelonBasis::residue: width mismatch");
    for (const auto& [p, row] : by_pivot_) {
        if (v.is_zero()) break;
        if (v.get(p)) v ^= row;
    }
    return v;
}

bool EchelonBasis::insert(F2Vector v) {
    v = residue(std::move(v));
    if (v.is_zero()) return false;
    std::size_t p = v.support().front();
    by_pivot_.emplace(p, std::move(v));
    return true;
}

std::vector<F2Vector> EchelonBasis::rows() const {
    std::vector<F2Vector> out;
    out.reserve(by_pivot_.size());
    for (const auto& [p, row] : by_pivot_) out.push_back(row);
    return out;
}

}  // namespace hochbv
