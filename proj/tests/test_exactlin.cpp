#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monicrep/exactlin.hpp"

#include <random>

using namespace monicrep;
using namespace monicrep::exactlin;

namespace {

Matrix make(const Field& f, std::size_t rows, std::size_t cols,
            std::initializer_list<std::int64_t> vals) {
    Matrix m(rows, cols, f);
    std::size_t i = 0;
    for (auto v : vals) {
        m.set(i / cols, i % cols, f.from_int(v));
        ++i;
    }
    return m;
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(rows, cols, f);
    std::int64_t p = f.characteristic();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (p > 0)
                m.set(i, j, f.from_int(static_cast<std::int64_t>(rng() % p)));
            else
                m.set(i, j, f.from_int(static_cast<std::int64_t>(rng() % 19) - 9));
        }
    return m;
}

// Independent elimination oracle: plain forward Gaussian elimination without
// the reduced-form bookkeeping of the library routine. Only reports rank.
std::size_t oracle_rank(Matrix m) {
    const Field& f = m.field();
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = m.rows();
        for (std::size_t i = row; i < m.rows(); ++i)
            if (!f.is_zero(m.at(i, col))) {
                piv = i;
                break;
            }
        if (piv == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Scalar t = m.at(row, j);
            m.set(row, j, m.at(piv, j));
            m.set(piv, j, t);
        }
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            if (f.is_zero(m.at(i, col))) continue;
            Scalar c = f.div(m.at(i, col), m.at(row, col));
            for (std::size_t j = col; j < m.cols(); ++j)
                m.set(i, j, f.sub(m.at(i, j), f.mul(c, m.at(row, j))));
        }
        ++row;
    }
    return row;
}

// Second route for directness: iterated subspace sums, dim must add each step.
bool oracle_sum_is_direct(const std::vector<Matrix>& maps, std::size_t dim, const Field& f) {
    Matrix acc(dim, 0, f);
    for (const auto& m : maps) {
        std::size_t before = rank(acc);
        acc = hstack(acc, m);
        if (rank(acc) != before + rank(m)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("bigint arithmetic agrees with int64 on small values") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 2000; ++iter) {
        std::int64_t a = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
        std::int64_t b = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
        CHECK((BigInt(a) + BigInt(b)).to_string() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).to_string() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).to_string() == std::to_string(a * b));
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_string() == std::to_string(a / b));
            CHECK((BigInt(a) % BigInt(b)).to_string() == std::to_string(a % b));
        }
    }
}

TEST_CASE("bigint divmod identity on wide values") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 500; ++iter) {
        BigInt a(static_cast<std::int64_t>(rng() >> 1));
        BigInt b(static_cast<std::int64_t>(rng() >> 1));
        BigInt c(static_cast<std::int64_t>(rng() % 1000000) + 1);
        BigInt n = a * b + c;       // well beyond 64 bits
        BigInt d = b + BigInt(1);
        BigInt q, r;
        BigInt::divmod(n, d, q, r);
        CHECK(q * d + r == n);
        CHECK(r.abs() < d.abs());
        CHECK(!r.is_negative());
    }
    CHECK(BigInt::from_string("-123456789012345678901234567890").to_string() ==
          "-123456789012345678901234567890");
}

TEST_CASE("field construction validates primality") {
    CHECK_NOTHROW(Field::prime(2));
    CHECK_NOTHROW(Field::prime(97));
    CHECK_THROWS_AS(Field::prime(1), Error);
    CHECK_THROWS_AS(Field::prime(4), Error);
    CHECK_THROWS_AS(Field::prime(91), Error); // 7 * 13
}

TEST_CASE("scalar canonical forms") {
    Field q = Field::rationals();
    CHECK(q.parse("2/4") == q.parse("1/2"));
    CHECK(q.parse("-3/-6") == q.parse("1/2"));
    CHECK(q.parse("0/17") == q.zero());
    CHECK(q.to_string(q.parse("-4/6")) == "-2/3");
    CHECK(q.to_string(q.parse("5")) == "5");
    Field f5 = Field::prime(5);
    CHECK(f5.from_int(-1) == f5.from_int(4));
    CHECK(f5.parse("7/3") == f5.mul(f5.from_int(7), f5.inv(f5.from_int(3))));
    CHECK(f5.mul(f5.from_int(3), f5.inv(f5.from_int(3))) == f5.one());
}

TEST_CASE("rref on the stated examples") {
    Field f2 = Field::prime(2);
    Matrix id2 = Matrix::identity(2, f2);
    auto rr = rref(id2);
    CHECK(rr.mat == id2);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1});

    Matrix ones = make(f2, 2, 2, {1, 1, 1, 1});
    auto rr2 = rref(ones);
    CHECK(rr2.mat == make(f2, 2, 2, {1, 1, 0, 0}));
    CHECK(rr2.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref idempotence against an independent elimination pass") {
    Field f3 = Field::prime(3);
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        Matrix m = random_matrix(f3, 5, 7, rng);
        auto once = rref(m);
        auto twice = rref(once.mat);
        CHECK(once.mat == twice.mat);
        CHECK(once.pivots == twice.pivots);
        CHECK(once.pivots.size() == oracle_rank(m));
    }
}

TEST_CASE("rank basics and transpose symmetry") {
    Field f2 = Field::prime(2);
    CHECK(rank(Matrix(3, 3, f2)) == 0);
    CHECK(rank(Matrix::identity(4, f2)) == 4);
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        Matrix m = random_matrix(f2, 4, 6, rng);
        CHECK(rank(m) == oracle_rank(m.transpose()));
    }
}

TEST_CASE("kernel basis") {
    Field f2 = Field::prime(2);
    CHECK(kernel_basis(Matrix::identity(3, f2)).cols() == 0);

    Matrix row = make(f2, 1, 2, {1, 1});
    Matrix k = kernel_basis(row);
    CHECK(k.cols() == 1);
    CHECK(k == make(f2, 2, 1, {1, 1}));

    std::mt19937_64 rng(9);
    Field f3 = Field::prime(3);
    for (int iter = 0; iter < 200; ++iter) {
        Matrix m = random_matrix(f3, 4, 6, rng);
        Matrix kb = kernel_basis(m);
        CHECK((m * kb).is_zero());
        CHECK(rank(m) + kb.cols() == m.cols()); // rank-nullity
        CHECK(rank(kb) == kb.cols());
    }
}

TEST_CASE("injectivity") {
    Field f2 = Field::prime(2);
    CHECK(is_injective(Matrix::identity(3, f2)));
    Matrix zero_col = make(f2, 2, 2, {1, 0, 0, 0});
    CHECK_FALSE(is_injective(zero_col));
    // socle inclusion of the dual numbers, in basis {1, x}
    Matrix sigma = make(f2, 2, 1, {0, 1});
    CHECK(is_injective(sigma));
    CHECK(is_injective(sigma) == (kernel_basis(sigma).cols() == 0));
}

TEST_CASE("sum_is_direct") {
    Field f2 = Field::prime(2);
    std::vector<Matrix> maps;
    maps.push_back(make(f2, 2, 1, {0, 1}));
    maps.push_back(make(f2, 2, 1, {1, 1}));
    CHECK(sum_is_direct(maps, 2, f2));

    std::vector<Matrix> equal;
    equal.push_back(make(f2, 2, 1, {1, 0}));
    equal.push_back(make(f2, 2, 1, {1, 0}));
    CHECK_FALSE(sum_is_direct(equal, 2, f2));

    CHECK(sum_is_direct(std::span<const Matrix>{}, 3, f2));

    // concatenated-rank route vs iterated-sum route
    std::mt19937_64 rng(21);
    Field f3 = Field::prime(3);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Matrix> ms;
        for (int k = 0; k < 3; ++k) ms.push_back(random_matrix(f3, 4, 1 + (iter + k) % 3, rng));
        CHECK(sum_is_direct(ms, 4, f3) == oracle_sum_is_direct(ms, 4, f3));
    }
}

TEST_CASE("solve") {
    Field f2 = Field::prime(2);
    Matrix b = make(f2, 3, 1, {1, 0, 1});
    auto x = solve(Matrix::identity(3, f2), b);
    REQUIRE(x);
    CHECK(*x == b);

    Matrix inconsistent = make(f2, 2, 2, {1, 1, 0, 0});
    CHECK_FALSE(solve(inconsistent, make(f2, 2, 1, {0, 1})));

    std::mt19937_64 rng(33);
    Field f5 = Field::prime(5);
    for (int iter = 0; iter < 200; ++iter) {
        Matrix m = random_matrix(f5, 4, 3, rng);
        Matrix y = random_matrix(f5, 3, 2, rng);
        Matrix rhs = m * y; // consistent by construction
        auto sol = solve(m, rhs);
        REQUIRE(sol);
        CHECK(m * *sol == rhs); // residual check
    }
}

TEST_CASE("rational elimination stays exact on a Hilbert block") {
    Field q = Field::rationals();
    std::size_t n = 6;
    Matrix h(n, n, q);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h.set(i, j, q.from_fraction(BigInt(1), BigInt(static_cast<std::int64_t>(i + j + 1))));
    CHECK(rank(h) == n);
    auto hinv = inverse(h);
    REQUIRE(hinv);
    CHECK(h * *hinv == Matrix::identity(n, q));
}

TEST_CASE("quotient maps split the ambient space") {
    Field f3 = Field::prime(3);
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 100; ++iter) {
        Matrix v = random_matrix(f3, 5, 2, rng);
        auto qm = quotient_maps(v, 5);
        std::size_t r = rank(v);
        CHECK(qm.projection.rows() == 5 - r);
        CHECK((qm.projection * v).is_zero());
        CHECK(qm.projection * qm.section == Matrix::identity(5 - r, f3));
    }
}

TEST_CASE("column space basis is canonical") {
    Field f2 = Field::prime(2);
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 100; ++iter) {
        Matrix m = random_matrix(f2, 4, 3, rng);
        Matrix doubled = hstack(m, m); // same column space, different spanning set
        CHECK(column_space_basis(m) == column_space_basis(doubled));
    }
}
