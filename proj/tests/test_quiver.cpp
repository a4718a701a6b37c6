#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monicrep/quiver.hpp"

#include <random>

using namespace monicrep;
using namespace monicrep::quiver;

namespace {

// 3 --beta--> 1 <--alpha-- 2, the two-source quiver used across the suite.
Quiver two_sources() {
    return Quiver({"1", "2", "3"},
                  {{"alpha", 1, 0}, {"beta", 2, 0}});
}

Quiver linear(std::size_t n) {
    // vertices n, n-1, ..., 1 with arrows (i+1) -> i; index k holds label k+1
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<Arrow> arrows;
    for (std::size_t i = 1; i < n; ++i)
        arrows.push_back({"a" + std::to_string(i), i, i - 1});
    return Quiver(std::move(labels), std::move(arrows));
}

Quiver random_dag(std::mt19937_64& rng, std::size_t max_vertices) {
    std::size_t n = 1 + rng() % max_vertices;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<Arrow> arrows;
    std::size_t edges = rng() % (2 * n);
    for (std::size_t e = 0; e < edges; ++e) {
        std::size_t a = rng() % n, b = rng() % n;
        if (a == b) continue;
        if (a < b) std::swap(a, b); // larger index -> smaller keeps it acyclic
        arrows.push_back({"e" + std::to_string(e), a, b});
    }
    return Quiver(std::move(labels), std::move(arrows));
}

} // namespace

TEST_CASE("acyclicity") {
    CHECK(is_acyclic(Quiver({"1"}, {})));
    CHECK_FALSE(is_acyclic(Quiver({"1"}, {{"loop", 0, 0}})));
    CHECK(is_acyclic(two_sources()));
    CHECK_FALSE(is_acyclic(Quiver({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}})));
}

TEST_CASE("topological labels") {
    // already labeled chains stay put
    auto perm = topological_label(linear(4));
    for (std::size_t i = 0; i < 4; ++i) CHECK(perm[i] == i);

    // reversed chain gets the reversing permutation
    Quiver rev({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}});
    auto rperm = topological_label(rev);
    CHECK(rperm == std::vector<std::size_t>{2, 1, 0});

    // the two-source quiver as printed is already well labeled
    auto tperm = topological_label(two_sources());
    CHECK(tperm == std::vector<std::size_t>{0, 1, 2});
    CHECK(is_topologically_labeled(two_sources()));

    CHECK_THROWS_AS(topological_label(Quiver({"1"}, {{"l", 0, 0}})), Error);

    std::mt19937_64 rng(3);
    for (int it = 0; it < 100; ++it) {
        Quiver q = random_dag(rng, 6);
        auto p = topological_label(q);
        Quiver relabeled = apply_vertex_permutation(q, p);
        CHECK(is_topologically_labeled(relabeled));
    }
}

TEST_CASE("path enumeration") {
    Quiver a3 = linear(3);
    auto paths = paths_between(a3, 2, 0);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].length() == 2);

    Quiver ts = two_sources();
    CHECK(paths_between(ts, 2, 0).size() == 1); // beta
    CHECK(paths_between(ts, 1, 0).size() == 1); // alpha
    CHECK(paths_between(ts, 2, 1).empty());
    CHECK(paths_between(ts, 1, 1).size() == 1); // trivial

    Quiver kron({"1", "2"}, {{"a", 1, 0}, {"b", 1, 0}});
    auto two = paths_between(kron, 1, 0);
    REQUIRE(two.size() == 2);
    CHECK(two[0].arrow_names(kron) == std::vector<std::string>{"a"});
    CHECK(two[1].arrow_names(kron) == std::vector<std::string>{"b"});

    Quiver loop({"1"}, {{"l", 0, 0}});
    CHECK_THROWS_AS(paths_between(loop, 0, 0), Error);
    CHECK(paths_between(loop, 0, 0, 2).size() == 3); // e, l, ll
}

TEST_CASE("path counts") {
    auto a3 = path_count_matrix(linear(3));
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) CHECK(a3[j][i] == (j >= i ? 1 : 0));

    auto ts = path_count_matrix(two_sources());
    CHECK(ts[1][0] == 1);
    CHECK(ts[2][0] == 1);
    CHECK(ts[2][1] == 0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(ts[i][i] == 1);

    auto point = path_count_matrix(Quiver({"1"}, {}));
    CHECK(point[0][0] == 1);

    // counts agree with direct enumeration
    std::mt19937_64 rng(17);
    for (int it = 0; it < 50; ++it) {
        Quiver q = random_dag(rng, 5);
        auto m = path_count_matrix(q);
        for (std::size_t j = 0; j < q.vertex_count(); ++j)
            for (std::size_t i = 0; i < q.vertex_count(); ++i)
                CHECK(m[j][i] == static_cast<long long>(paths_between(q, j, i).size()));
    }
}

TEST_CASE("tensor quiver") {
    Quiver a2({"1", "2"}, {{"a", 1, 0}});
    Quiver a3 = linear(3);
    Quiver point({"1"}, {});

    auto t22 = tensor_quiver(a2, a2);
    CHECK(t22.product.vertex_count() == 4);
    CHECK(t22.product.arrows().size() == 4);
    CHECK(t22.relations.size() == 1);
    CHECK(t22.relations[0].terms.size() == 2);

    auto tp = tensor_quiver(a2, point);
    CHECK(tp.product.vertex_count() == 2);
    CHECK(tp.product.arrows().size() == 1);
    CHECK(tp.relations.empty());

    auto t23 = tensor_quiver(a2, a3);
    CHECK(t23.product.vertex_count() == 6);
    CHECK(t23.product.arrows().size() == 7);
    CHECK(t23.relations.size() == 2);

    // closed-form counts on random factors
    std::mt19937_64 rng(23);
    for (int it = 0; it < 20; ++it) {
        Quiver qa = random_dag(rng, 4);
        Quiver qb = random_dag(rng, 4);
        auto t = tensor_quiver(qa, qb);
        CHECK(t.product.vertex_count() == qa.vertex_count() * qb.vertex_count());
        CHECK(t.product.arrows().size() ==
              qa.arrows().size() * qb.vertex_count() + qa.vertex_count() * qb.arrows().size());
        CHECK(t.relations.size() == qa.arrows().size() * qb.arrows().size());
        for (const auto& rel : t.relations) {
            for (const auto& term : rel.terms) {
                CHECK(term.path.source() == rel.terms.front().path.source());
                CHECK(term.path.target() == rel.terms.front().path.target());
            }
        }
    }
}

TEST_CASE("tensor quiver lifts bound presentations") {
    // loop with its square relation, tensored with the two-vertex chain:
    // one commutativity square plus the relation lifted to each chain vertex
    Quiver loop({"1"}, {{"l", 0, 0}});
    exactlin::Field f = exactlin::Field::rationals();
    std::vector<RelationElement> lsq;
    lsq.push_back(RelationElement(loop, {{f.one(), Path(loop, {0, 0})}}));
    Quiver a2({"1", "2"}, {{"a", 1, 0}});
    std::vector<RelationElement> none;

    auto t = tensor_quiver(loop, a2, &lsq, &none);
    CHECK(t.product.vertex_count() == 2);
    CHECK(t.product.arrows().size() == 3); // (l,1), (l,2), (1,a)
    CHECK(t.relations.size() == 1 + 2);    // one square, the relation at both vertices
    for (const auto& rel : t.relations)
        for (const auto& term : rel.terms) CHECK(term.path.length() == 2);
}

TEST_CASE("tensor hereditary check") {
    Quiver a2({"1", "2"}, {{"a", 1, 0}});
    Quiver points({"1", "2"}, {});
    std::vector<RelationElement> none;

    CHECK(tensor_hereditary_check(points, none, a2, none));
    CHECK(tensor_hereditary_check(a2, none, points, none));
    CHECK_FALSE(tensor_hereditary_check(a2, none, a2, none));
    CHECK(tensor_hereditary_check(points, none, points, none));

    // a relation on the arrowed side breaks clause (i)
    Quiver loop({"1"}, {{"l", 0, 0}});
    exactlin::Field f = exactlin::Field::rationals();
    std::vector<RelationElement> lsq;
    lsq.push_back(RelationElement(loop, {{f.one(), Path(loop, {0, 0})}}));
    CHECK_FALSE(tensor_hereditary_check(points, none, loop, lsq));
}

TEST_CASE("relation elements must be parallel") {
    Quiver ts = two_sources();
    exactlin::Field f = exactlin::Field::rationals();
    CHECK_THROWS_AS(RelationElement(ts, {{f.one(), Path(ts, {0})}, {f.one(), Path::trivial(ts, 2)}}),
                    Error);
}
