#include <doctest.h>

#include <random>

#include "hochbv/f2.hpp"

using namespace hochbv;

namespace {

F2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    F2Matrix m(rows, cols);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, bit(rng));
    return m;
}

F2Vector random_vector(std::mt19937_64& rng, std::size_t len) {
    F2Vector v(len);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t i = 0; i < len; ++i) v.set(i, bit(rng));
    return v;
}

} // namespace

TEST_SUITE("f2") {

TEST_CASE("vector bit operations") {
    F2Vector v(70);
    CHECK(v.is_zero());
    v.set(0, true);
    v.set(69, true);
    v.flip(33);
    CHECK(v.popcount() == 3);
    CHECK(v.get(69));
    CHECK(v.support() == std::vector<std::size_t>{0, 33, 69});
    v.flip(33);
    CHECK(v.popcount() == 2);

    F2Vector w = F2Vector::basis(70, 0);
    v ^= w;
    CHECK(v.support() == std::vector<std::size_t>{69});
    CHECK((v ^ v).is_zero());

    CHECK(F2Vector::from_bits({1, 0, 1}).str() == "101");
}

TEST_CASE("dot product and comparisons") {
    auto a = F2Vector::from_bits({1, 1, 0, 1});
    auto b = F2Vector::from_bits({0, 1, 1, 1});
    CHECK(a.dot(b) == false);  // overlap {1,3}, even
    b.flip(3);
    CHECK(a.dot(b) == true);
    CHECK(a != b);
    CHECK(a == a);
}

TEST_CASE("matrix multiplication") {
    auto m = F2Matrix::from_bits({{1, 1, 0}, {0, 1, 1}});
    auto x = F2Vector::from_bits({1, 0, 1});
    CHECK(m.mul(x) == F2Vector::from_bits({1, 1}));

    auto id3 = F2Matrix::identity(3);
    CHECK(m.mul(id3) == m);
    CHECK(F2Matrix::identity(2).mul(m) == m);

    auto t = m.transposed();
    CHECK(t.rows() == 3);
    CHECK(t.get(2, 1));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto a = random_matrix(rng, 5, 7);
        auto b = random_matrix(rng, 7, 4);
        CHECK(a.mul(b).transposed() == b.transposed().mul(a.transposed()));
    }
}

TEST_CASE("row reduction is deterministic and reduced") {
    auto m = F2Matrix::from_bits({{1, 1, 1, 0}, {0, 1, 1, 1}, {1, 0, 0, 1}});
    auto pivots = row_reduce(m);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
    CHECK(m.row(0) == F2Vector::from_bits({1, 0, 0, 1}));
    CHECK(m.row(1) == F2Vector::from_bits({0, 1, 1, 1}));
    CHECK(m.row(2).is_zero());

    auto again = F2Matrix::from_bits({{1, 1, 1, 0}, {0, 1, 1, 1}, {1, 0, 0, 1}});
    row_reduce(again);
    CHECK(again == m);
}

TEST_CASE("rank and kernel") {
    auto m = F2Matrix::from_bits({{1, 0, 0, 1}, {0, 1, 1, 1}});
    CHECK(rank(m) == 2);

    auto ker = kernel_basis(m);
    CHECK(ker.size() == 2);
    F2Matrix stacked = F2Matrix::from_rows(ker);
    CHECK(rank(stacked) == 2);
    for (const auto& k : ker) CHECK(m.mul(k).is_zero());

    CHECK(kernel_basis(F2Matrix::identity(4)).empty());
}

TEST_CASE("solve reports exactly the consistent systems") {
    auto m = F2Matrix::from_bits({{1, 0}, {0, 1}, {1, 1}});
    auto good = solve(m, F2Vector::from_bits({1, 1, 0}));
    REQUIRE(good.has_value());
    CHECK(m.mul(*good) == F2Vector::from_bits({1, 1, 0}));
    CHECK(!solve(m, F2Vector::from_bits({1, 1, 1})).has_value());

    std::mt19937_64 rng(12);
    for (int i = 0; i < 60; ++i) {
        auto a = random_matrix(rng, 6, 9);
        auto x = random_vector(rng, 9);
        auto b = a.mul(x);
        auto s = solve(a, b);
        REQUIRE(s.has_value());
        CHECK(a.mul(*s) == b);
    }
}

TEST_CASE("inverse") {
    auto u = F2Matrix::from_bits({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    auto inv = inverse(u);
    REQUIRE(inv.has_value());
    CHECK(*inv == F2Matrix::from_bits({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}));
    CHECK(u.mul(*inv) == F2Matrix::identity(3));

    auto sing = F2Matrix::from_bits({{1, 1}, {1, 1}});
    CHECK(!inverse(sing).has_value());

    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        auto a = random_matrix(rng, 8, 8);
        auto ai = inverse(a);
        if (!ai.has_value()) {
            CHECK(rank(a) < 8);
            continue;
        }
        CHECK(a.mul(*ai) == F2Matrix::identity(8));
        CHECK(ai->mul(a) == F2Matrix::identity(8));
    }
}

TEST_CASE("echelon basis tracks independence incrementally") {
    EchelonBasis eb(5);
    CHECK(eb.insert(F2Vector::from_bits({1, 0, 1, 0, 0})));
    CHECK(eb.insert(F2Vector::from_bits({0, 1, 1, 0, 0})));
    CHECK(!eb.insert(F2Vector::from_bits({1, 1, 0, 0, 0})));  // sum of the two
    CHECK(eb.dim() == 2);
    CHECK(eb.contains(F2Vector::from_bits({1, 1, 0, 0, 0})));
    CHECK(!eb.contains(F2Vector::basis(5, 4)));
    CHECK(eb.residue(F2Vector::basis(5, 4)) == F2Vector::basis(5, 4));

    std::mt19937_64 rng(14);
    for (int i = 0; i < 40; ++i) {
        auto m = random_matrix(rng, 10, 6);
        EchelonBasis inc(6);
        for (std::size_t r = 0; r < m.rows(); ++r) inc.insert(m.row(r));
        CHECK(inc.dim() == rank(m));
    }
}

} // TEST_SUITE
