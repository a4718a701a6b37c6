#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monicrep/algebra.hpp"
#include "monicrep/repmod.hpp"

#include <map>
#include <random>

using namespace monicrep;
using namespace monicrep::algebra;
using quiver::Arrow;
using quiver::Path;
using quiver::Quiver;

namespace {

Field f2() { return Field::prime(2); }

// 2x2 upper triangular matrices over k, basis {e11, e22, e12}
AlgebraPtr upper_triangular_2(const Field& f) {
    std::vector<std::vector<Algebra::SparseRow>> t(3, std::vector<Algebra::SparseRow>(3));
    t[0][0] = {{0, f.one()}};                 // e11 e11 = e11
    t[1][1] = {{1, f.one()}};                 // e22 e22 = e22
    t[0][2] = {{2, f.one()}};                 // e11 e12 = e12
    t[2][1] = {{2, f.one()}};                 // e12 e22 = e12
    std::vector<exactlin::Scalar> unit = {f.one(), f.one(), f.zero()};
    std::vector<std::vector<exactlin::Scalar>> idems = {{f.one(), f.zero(), f.zero()},
                                                        {f.zero(), f.one(), f.zero()}};
    Matrix rad(3, 1, f);
    rad.set(2, 0, f.one());
    return Algebra::from_structure_constants(f, {"e11", "e22", "e12"}, std::move(t),
                                             std::move(unit), std::move(idems), std::move(rad));
}

Quiver two_sources_with_loops() {
    return Quiver({"1", "2", "3"}, {{"l1", 0, 0},
                                    {"l2", 1, 1},
                                    {"l3", 2, 2},
                                    {"alpha", 1, 0},
                                    {"beta", 2, 0}});
}

Quiver two_sources() { return Quiver({"1", "2", "3"}, {{"alpha", 1, 0}, {"beta", 2, 0}}); }

} // namespace

TEST_CASE("the field itself is a valid one-dimensional algebra") {
    auto k = field_algebra(f2());
    CHECK(k->dim() == 1);
    CHECK(k->idempotents()->size() == 1);
    CHECK(k->radical_basis()->cols() == 0);
}

TEST_CASE("associativity violations are rejected") {
    Field f = f2();
    // (x*y)*x = 0 but x*(y*x) = x*x = y
    std::vector<std::vector<Algebra::SparseRow>> t(3, std::vector<Algebra::SparseRow>(3));
    for (std::size_t v = 0; v < 3; ++v) {
        t[0][v] = {{v, f.one()}};
        t[v][0] = {{v, f.one()}};
    }
    t[1][1] = {{2, f.one()}}; // x x = y
    t[2][1] = {{1, f.one()}}; // y x = x
    std::vector<exactlin::Scalar> unit = {f.one(), f.zero(), f.zero()};
    bool ok = true;
    try {
        Algebra::from_structure_constants(f, {"1", "x", "y"}, t, unit);
    } catch (const Error& e) {
        ok = false;
        CHECK(e.code() == ErrorCode::NotAssociative);
    }
    CHECK_FALSE(ok);
}

TEST_CASE("bad units and idempotents are rejected") {
    Field f = f2();
    std::vector<std::vector<Algebra::SparseRow>> t(1, std::vector<Algebra::SparseRow>(1));
    t[0][0] = {{0, f.one()}};
    CHECK_THROWS_AS(Algebra::from_structure_constants(f, {"1"}, t, {f.zero()}), Error);
    CHECK_THROWS_AS(Algebra::from_structure_constants(
                        f, {"1"}, t, {f.one()},
                        std::vector<std::vector<exactlin::Scalar>>{{f.zero()}}),
                    Error);
}

TEST_CASE("upper triangular 2x2 validates and classifies hereditary") {
    auto a = upper_triangular_2(f2());
    CHECK(a->dim() == 3);
    auto rep = classify(a, 8);
    CHECK(rep.hereditary == TriState::Yes);
    CHECK(rep.self_injective == TriState::No);
    CHECK(rep.global_dim.exceeds_bound == false);
    CHECK(rep.global_dim.value == 1);
    CHECK(rep.basic == TriState::Yes);
    CHECK(rep.connected == TriState::Yes);
}

TEST_CASE("truncated polynomial algebras") {
    auto k = truncated_polynomial(f2(), 1);
    CHECK(k->dim() == 1);

    auto dual = truncated_polynomial(f2(), 2);
    CHECK(dual->dim() == 2);
    // x * x = 0
    std::vector<exactlin::Scalar> x = {f2().zero(), f2().one()};
    auto xx = dual->mul(x, x);
    for (const auto& c : xx) CHECK(f2().is_zero(c));

    auto cubic = truncated_polynomial(Field::prime(3), 3);
    std::vector<exactlin::Scalar> xc = {Field::prime(3).zero(), Field::prime(3).one(),
                                        Field::prime(3).zero()};
    auto x2 = cubic->mul(xc, xc);
    CHECK(x2[2] == Field::prime(3).one());
    auto x3 = cubic->mul(x2, xc);
    for (const auto& c : x3) CHECK(Field::prime(3).is_zero(c));
    auto x3b = cubic->mul(xc, x2);
    for (const auto& c : x3b) CHECK(Field::prime(3).is_zero(c));
}

TEST_CASE("bound quiver algebra: loop with square relation is the dual numbers") {
    Field f = f2();
    Quiver loop({"1"}, {{"l", 0, 0}});
    quiver::RelationElement rel(loop, {{exactlin::Field::rationals().one(), Path(loop, {0, 0})}});
    auto a = bound_quiver_algebra({loop, {rel}, 2}, f);
    CHECK(a->dim() == 2);
    auto dual = truncated_polynomial(f, 2);
    CHECK(a->dense_table() == dual->dense_table());
}

TEST_CASE("bound quiver algebra: missing relations on a cyclic quiver are inadmissible") {
    Field f = f2();
    Quiver loop({"1"}, {{"l", 0, 0}});
    CHECK_THROWS_AS(bound_quiver_algebra({loop, {}, 3}, f), Error);
}

TEST_CASE("bound quiver algebra: the two-source quiver with loops") {
    Field f = f2();
    Quiver q = two_sources_with_loops();
    exactlin::Field qf = exactlin::Field::rationals();
    std::vector<quiver::RelationElement> rels;
    // l1^2, l2^2, l3^2, alpha l2 - l1 alpha, beta l3 - l1 beta
    rels.push_back({q, {{qf.one(), Path(q, {0, 0})}}});
    rels.push_back({q, {{qf.one(), Path(q, {1, 1})}}});
    rels.push_back({q, {{qf.one(), Path(q, {2, 2})}}});
    rels.push_back({q, {{qf.one(), Path(q, {1, 3})}, {qf.neg(qf.one()), Path(q, {3, 0})}}});
    rels.push_back({q, {{qf.one(), Path(q, {2, 4})}, {qf.neg(qf.one()), Path(q, {4, 0})}}});
    auto big = bound_quiver_algebra({q, rels, 3}, f);
    // matches the 3x3 matrix picture over the dual numbers: five blocks of dim 2
    CHECK(big->dim() == 10);
    CHECK(big->idempotents()->size() == 3);

    // explicit isomorphism with A tensor kQ for A the dual numbers
    auto a = truncated_polynomial(f, 2);
    auto lambda = path_algebra_over(a, two_sources());
    CHECK(lambda->dim() == 10);
    CHECK(lambda->idempotents()->size() == 3);

    // basis matching: e_i <-> 1@e_i, l_i <-> x@e_i, alpha <-> 1@alpha, ...
    const auto& paths = *big->basis_paths();
    const auto& ps = *lambda->path_structure();
    std::map<std::size_t, std::size_t> iso; // big index -> lambda index
    for (std::size_t bi = 0; bi < paths.size(); ++bi) {
        const Path& p = paths[bi];
        std::size_t loops = 0;
        std::vector<std::size_t> core; // arrows that are not loops
        for (std::size_t ai : p.arrow_indices()) {
            if (q.arrow(ai).source == q.arrow(ai).target)
                ++loops;
            else
                core.push_back(ai == 3 ? 0u : 1u); // alpha or beta in the loopless quiver
        }
        REQUIRE(loops <= 1);
        Quiver plain = two_sources();
        Path q_path = core.empty() ? Path::trivial(plain, p.source()) : Path(plain, core);
        iso[bi] = ps.basis_index(ps.path_index(q_path), loops); // base index: 1 or x
    }
    auto big_table = big->dense_table();
    auto lam_table = lambda->dense_table();
    for (std::size_t u = 0; u < big->dim(); ++u)
        for (std::size_t v = 0; v < big->dim(); ++v)
            for (std::size_t w = 0; w < big->dim(); ++w)
                CHECK(big_table[u][v][w] == lam_table[iso[u]][iso[v]][iso[w]]);
}

TEST_CASE("relation-free bound quiver algebras match the path count") {
    Field f = f2();
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 10; ++it) {
        std::size_t n = 2 + rng() % 3;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
        std::vector<Arrow> arrows;
        std::size_t edges = 1 + rng() % 4;
        for (std::size_t e = 0; e < edges; ++e) {
            std::size_t a = rng() % n, b = rng() % n;
            if (a == b) continue;
            if (a < b) std::swap(a, b);
            arrows.push_back({"e" + std::to_string(e), a, b});
        }
        Quiver q(labels, arrows);
        auto alg = bound_quiver_algebra({q, {}, n}, f);
        auto counts = quiver::path_count_matrix(q);
        long long total = 0;
        for (const auto& row : counts)
            for (long long c : row) total += c;
        CHECK(alg->dim() == static_cast<std::size_t>(total));
        CHECK(classify(alg, 8).hereditary == TriState::Yes);
    }
}

TEST_CASE("path algebra over the base field gives triangular matrices") {
    Field f = f2();
    auto k = field_algebra(f);
    Quiver a2({"1", "2"}, {{"a", 1, 0}});
    auto t2 = path_algebra_over(k, a2);
    CHECK(t2->dim() == 3);
    CHECK(t2->idempotents()->size() == 2);
    CHECK(classify(t2, 8).hereditary == TriState::Yes);

    // single vertex: the base algebra back
    Quiver point({"1"}, {});
    auto a = truncated_polynomial(f, 2);
    auto same = path_algebra_over(a, point);
    CHECK(same->dim() == a->dim());
    CHECK(same->dense_table() == a->dense_table());
}

TEST_CASE("path algebra dimensions on random acyclic quivers") {
    Field f = f2();
    auto a = truncated_polynomial(f, 2);
    std::mt19937_64 rng(7);
    for (int it = 0; it < 10; ++it) {
        std::size_t n = 1 + rng() % 4;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
        std::vector<Arrow> arrows;
        std::size_t edges = rng() % 5;
        for (std::size_t e = 0; e < edges; ++e) {
            std::size_t s = rng() % n, t = rng() % n;
            if (s == t) continue;
            if (s < t) std::swap(s, t);
            arrows.push_back({"e" + std::to_string(e), s, t});
        }
        Quiver q(labels, arrows);
        auto counts = quiver::path_count_matrix(q);
        long long total = 0;
        for (const auto& row : counts)
            for (long long c : row) total += c;
        auto lambda = path_algebra_over(a, q);
        CHECK(lambda->dim() == a->dim() * static_cast<std::size_t>(total));
        CHECK(lambda->idempotents()->size() == a->idempotents()->size() * n);
    }
}

TEST_CASE("idempotent blocks of a path algebra have the path-count dimensions") {
    // dim e_i AQ e_j = dim A * (number of paths j -> i)
    Field f = f2();
    auto a = truncated_polynomial(f, 2);
    Quiver q = two_sources();
    auto lambda = path_algebra_over(a, q);
    auto counts = quiver::path_count_matrix(q);
    const auto& idems = *lambda->idempotents(); // one per vertex (A is local)
    REQUIRE(idems.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Matrix block = lambda->left_mult_matrix(idems[i]) * lambda->right_mult_matrix(idems[j]);
            CHECK(exactlin::rank(block) ==
                  a->dim() * static_cast<std::size_t>(counts[j][i]));
        }
}

TEST_CASE("triangular extension basics") {
    Field f = f2();
    auto k = field_algebra(f);
    // M = k as a k-k-bimodule gives T_2(k)
    auto m = repmod::regular_bimodule(k);
    auto t2 = triangular_extension(k, k, m);
    CHECK(t2->dim() == 3);
    auto viaq = path_algebra_over(k, Quiver({"1", "2"}, {{"a", 1, 0}}));
    // same classification either way
    auto r1 = classify(t2, 8), r2 = classify(viaq, 8);
    CHECK(r1.hereditary == r2.hereditary);
    CHECK(r1.global_dim.value == r2.global_dim.value);

    // M = 0 gives the product algebra: global dimension is the max of the parts
    repmod::Bimodule zero(k, k, 0, {Matrix(0, 0, f)}, {Matrix(0, 0, f)});
    auto prod = triangular_extension(k, k, zero);
    CHECK(prod->dim() == 2);
    auto rp = classify(prod, 8);
    CHECK(rp.global_dim.value == 0);
    CHECK(rp.connected == TriState::No);
}

TEST_CASE("triangular extension reproduces the path algebra split") {
    // Lambda' = A, B = A, M = A x rad P(2) = A for the two-vertex chain
    Field f = f2();
    auto a = truncated_polynomial(f, 2);
    auto m = repmod::regular_bimodule(a);
    auto tri = triangular_extension(a, a, m);
    Quiver chain({"1", "2"}, {{"a", 1, 0}});
    auto lambda = path_algebra_over(a, chain);
    CHECK(tri->dim() == lambda->dim());
    // structure-constant comparison after matching (a:u, m:u, b:u) with
    // (u@e_1, u@a, u@e_2)
    const auto& ps = *lambda->path_structure();
    std::vector<std::size_t> iso(tri->dim());
    std::size_t da = a->dim();
    for (std::size_t u = 0; u < da; ++u) {
        iso[u] = ps.basis_index(ps.trivial_path_index[0], u);
        iso[da + u] = ps.basis_index(ps.arrow_path_index[0], u);
        iso[2 * da + u] = ps.basis_index(ps.trivial_path_index[1], u);
    }
    auto tt = tri->dense_table();
    auto lt = lambda->dense_table();
    for (std::size_t u = 0; u < tri->dim(); ++u)
        for (std::size_t v = 0; v < tri->dim(); ++v)
            for (std::size_t w = 0; w < tri->dim(); ++w)
                CHECK(tt[u][v][w] == lt[iso[u]][iso[v]][iso[w]]);
}

TEST_CASE("classification of the running examples") {
    Field f = f2();
    auto dual = truncated_polynomial(f, 2);
    auto rep = classify(dual, 8);
    CHECK(rep.self_injective == TriState::Yes);
    CHECK(rep.global_dim.exceeds_bound);
    CHECK(rep.gorenstein == TriState::Yes);
    CHECK(rep.left_inj_dim.value == 0);
    CHECK(rep.right_inj_dim.value == 0);

    auto k = field_algebra(f);
    auto krep = classify(k, 8);
    CHECK(krep.self_injective == TriState::Yes);
    CHECK(krep.hereditary == TriState::Yes);
    CHECK(krep.global_dim.value == 0);
    CHECK(krep.gorenstein == TriState::Yes);

    Quiver a2({"1", "2"}, {{"a", 1, 0}});
    auto ka2 = path_algebra_over(k, a2);
    auto arep = classify(ka2, 8);
    CHECK(arep.hereditary == TriState::Yes);
    CHECK(arep.self_injective == TriState::No);
    CHECK(arep.global_dim.value == 1);
}

TEST_CASE("opposite is an involution and preserves classification basics") {
    auto a = upper_triangular_2(f2());
    auto op = opposite(a);
    CHECK(opposite(op)->dense_table() == a->dense_table());
    auto r = classify(op, 8);
    CHECK(r.hereditary == TriState::Yes);
    // commutative algebras are fixed
    auto dual = truncated_polynomial(f2(), 2);
    CHECK(opposite(dual)->dense_table() == dual->dense_table());
}

TEST_CASE("gorenstein bookkeeping for the chain over the dual numbers") {
    Field f = f2();
    auto a = truncated_polynomial(f, 2);
    Quiver chain({"1", "2"}, {{"a", 1, 0}});
    auto lambda = path_algebra_over(a, chain);
    auto rep = classify(lambda, 8);
    CHECK(rep.self_injective == TriState::No);
    CHECK(rep.global_dim.exceeds_bound);
    CHECK(rep.gorenstein == TriState::Yes);
    CHECK(rep.left_inj_dim.value == 1);
    CHECK(rep.right_inj_dim.value == 1);
}
