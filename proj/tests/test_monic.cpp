#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures_common.hpp"
#include "monicrep/harness.hpp"

#include <random>

using namespace monicrep;
using namespace monicrep::monic;
using algebra::AlgebraPtr;
using algebra::TriState;
using exactlin::Field;
using exactlin::Matrix;
using fixtures::dual_numbers;
using fixtures::f2;
using fixtures::rep_X;
using fixtures::rep_Y;
using fixtures::simple_k;
using fixtures::two_sources;
using homological::GPRoute;
using homological::GPStatus;
using quiver::Path;
using quiver::Quiver;
using repmod::AModule;
using repmod::Representation;

TEST_CASE("check_monic on the fixture representations") {
    auto a = dual_numbers();
    MonicReport x = check_monic(rep_X(a));
    CHECK(x.is_monic);
    CHECK_FALSE(x.first_failure);
    // at vertex 1 the collected map has full rank 2
    CHECK(x.per_vertex[0].vertex == "1");
    CHECK(x.per_vertex[0].collected_rank == 2);
    CHECK(x.per_vertex[0].source_total_dim == 2);
    CHECK(x.per_vertex[0].images_direct);

    MonicReport y = check_monic(rep_Y(a));
    CHECK_FALSE(y.is_monic);
    REQUIRE(y.first_failure);
    CHECK(y.first_failure->vertex == "1");
    CHECK(y.first_failure->condition == "m2"); // both arrows inject, images collide
    // the witness is a kernel vector of the collected map
    Matrix collected = exactlin::hstack(rep_Y(a).arrow_map(0), rep_Y(a).arrow_map(1));
    CHECK((collected * y.first_failure->witness).is_zero());
    CHECK_FALSE(y.first_failure->witness.is_zero());

    Field f = f2();
    Representation zero(a, two_sources(), {AModule::zero(a), AModule::zero(a), AModule::zero(a)},
                        {Matrix(0, 0, f), Matrix(0, 0, f)});
    CHECK(check_monic(zero).is_monic);
}

TEST_CASE("condition (G) over a self-injective base always holds") {
    auto a = dual_numbers();
    GpOracle oracle(a, 8);
    ConditionGReport g = condition_G(rep_X(a), oracle);
    CHECK(g.overall == GPStatus::GP);
    for (const auto& v : g.per_vertex) {
        CHECK(v.branch.status == GPStatus::GP);
        CHECK(v.quotient.status == GPStatus::GP);
    }
}

TEST_CASE("condition (G) catches non-projective branches over a hereditary base") {
    Field f = f2();
    auto k = algebra::field_algebra(f);
    Quiver a2({"1", "2"}, {{"a", 1, 0}});
    auto ka2 = algebra::path_algebra_over(k, a2);
    GpOracle oracle(ka2, 8);

    AModule s2 = homological::simple_module(ka2, 1); // not projective
    Representation rep(ka2, a2, {s2, AModule::zero(ka2)}, {Matrix(1, 0, f)});
    ConditionGReport g = condition_G(rep, oracle);
    CHECK(g.overall == GPStatus::NotGP);
    CHECK(g.witness.find("vertex 1") != std::string::npos);
}

TEST_CASE("gp decision for the path algebra (the fixture pair)") {
    auto a = dual_numbers();
    GpOracle oracle(a, 8);
    GPVerdict x = gp_decide_path_algebra(rep_X(a), oracle);
    CHECK(x.status == GPStatus::GP);
    CHECK(x.route == GPRoute::MonicTheorem);

    GPVerdict y = gp_decide_path_algebra(rep_Y(a), oracle);
    CHECK(y.status == GPStatus::NotGP);
    CHECK(y.witness.find("m2") != std::string::npos);
    CHECK(y.witness.find("vertex 1") != std::string::npos);

    // projectives are Gorenstein-projective
    Representation proj = repmod::indecomposable_projective(AModule::regular(a), two_sources(), 1);
    CHECK(gp_decide_path_algebra(proj, oracle).status == GPStatus::GP);
    Representation proj3 = repmod::indecomposable_projective(AModule::regular(a), two_sources(), 2);
    CHECK(gp_decide_path_algebra(proj3, oracle).status == GPStatus::GP);
}

TEST_CASE("the decision does not need a topologically labeled quiver") {
    auto a = dual_numbers();
    Field f = f2();
    // same shape as the fixture, but the sink is listed last
    Quiver scrambled({"2", "3", "1"}, {{"alpha", 0, 2}, {"beta", 1, 2}});
    AModule big = repmod::direct_sum(AModule::regular(a), simple_k(a));
    Matrix xa(3, 1, f);
    xa.set(2, 0, f.one());
    Matrix xb(3, 1, f);
    xb.set(1, 0, f.one());
    xb.set(2, 0, f.one());
    Representation x(a, scrambled, {simple_k(a), simple_k(a), big}, {xa, xb});
    REQUIRE(validate(x).ok);
    CHECK(check_monic(x).is_monic);
    CHECK(gp_decide_path_algebra(x, 8).status == GPStatus::GP);
    // but the split machinery insists on labels
    CHECK_THROWS_AS(repmod::split_top_vertex(x), Error);
}

TEST_CASE("gp decision rejects cyclic quivers") {
    auto a = dual_numbers();
    Field f = f2();
    Quiver loop({"1"}, {{"l", 0, 0}});
    Representation rep(a, loop, {simple_k(a)}, {Matrix::identity(1, f)});
    CHECK_THROWS_AS(gp_decide_path_algebra(rep, 8), Error);
}

TEST_CASE("triangular decision over the two-vertex chain") {
    auto a = dual_numbers();
    Field f = f2();
    repmod::Bimodule m = repmod::regular_bimodule(a);

    // X = A + k, Y = k, phi the injective socle-plus-identity: GP
    AModule x = repmod::direct_sum(AModule::regular(a), simple_k(a));
    AModule y = simple_k(a);
    repmod::TensorResult ty = repmod::tensor_bimodule(m, y);
    REQUIRE(ty.module.dim() == 1);
    Matrix phi(3, 1, f);
    phi.set(1, 0, f.one());
    phi.set(2, 0, f.one());
    TriangularDecision good = gp_decide_triangular(a, a, m, x, y, phi, 8);
    CHECK(good.phi_injective);
    CHECK(good.verdict.status == GPStatus::GP);
    CHECK(good.verdict.route == GPRoute::TriangularTheorem);
    CHECK(good.last_assertion.find("equivalent: yes") != std::string::npos);

    // phi = 0 with Y nonzero: fails injectivity
    Matrix zero_phi(3, 1, f);
    TriangularDecision bad = gp_decide_triangular(a, a, m, x, y, zero_phi, 8);
    CHECK_FALSE(bad.phi_injective);
    CHECK(bad.verdict.status == GPStatus::NotGP);

    // M = 0 reduces to the two base verdicts
    repmod::Bimodule zero(a, a, 0, {Matrix(0, 0, f), Matrix(0, 0, f)},
                          {Matrix(0, 0, f), Matrix(0, 0, f)});
    repmod::TensorResult tz = repmod::tensor_bimodule(zero, y);
    CHECK(tz.module.dim() == 0);
    TriangularDecision red = gp_decide_triangular(a, a, zero, x, y, Matrix(3, 0, f), 8);
    CHECK(red.phi_injective);
    CHECK(red.verdict.status == GPStatus::GP); // both sides GP over the dual numbers
}

TEST_CASE("triangular hypothesis is enforced") {
    // M = k over A = dual numbers is not projective on either side
    auto a = dual_numbers();
    Field f = f2();
    Matrix one = Matrix::identity(1, f);
    Matrix zero(1, 1, f);
    repmod::Bimodule m(a, a, 1, {one, zero}, {one, zero});
    CHECK_THROWS_AS(
        gp_decide_triangular(a, a, m, AModule::regular(a), simple_k(a), Matrix(2, 1, f), 8),
        Error);
}

TEST_CASE("coker_phi on the fixture") {
    auto a = dual_numbers();
    Representation x = rep_X(a);
    Representation coker = coker_phi(x);
    CHECK(coker.q().vertex_count() == 2);
    CHECK(coker.branch(0).dim() == 2); // 3 - dim Im X_beta
    CHECK(coker.branch(1).dim() == 1);
    CHECK(validate(coker).ok);

    // it agrees with the cokernel of the assembled split morphism
    repmod::SplitData split = repmod::split_top_vertex(x);
    Representation viaphi = repmod::cokernel(split.phi).rep;
    CHECK(coker == viaphi);

    // and it is monic again
    CHECK(check_monic(coker).is_monic);

    // zero top branch: coker_phi is the plain restriction
    Field f = f2();
    Matrix sig(2, 1, f);
    sig.set(1, 0, f.one());
    Representation z(a, x.q(), {AModule::regular(a), simple_k(a), AModule::zero(a)},
                     {sig, Matrix(2, 0, f)});
    Representation zc = coker_phi(z);
    CHECK(zc.branch(0).dim() == 2);
    CHECK(zc.branch(1).dim() == 1);
    CHECK(zc.arrow_map(0) == sig);

    // non-monic input is rejected
    CHECK_THROWS_AS(coker_phi(rep_Y(a)), Error);
}

TEST_CASE("phi injectivity criterion computes both sides") {
    auto a = dual_numbers();
    auto both = phi_injectivity_criterion(rep_X(a));
    CHECK(both.first);
    CHECK(both.second);

    // two equal path images from the top vertex: both sides false
    Field f = f2();
    Quiver kron({"1", "2"}, {{"a", 1, 0}, {"b", 1, 0}});
    Matrix sig(2, 1, f);
    sig.set(1, 0, f.one());
    Representation bad(a, kron, {AModule::regular(a), simple_k(a)}, {sig, sig});
    auto brs = phi_injectivity_criterion(bad);
    CHECK_FALSE(brs.first);
    CHECK_FALSE(brs.second);

    // zero top branch: trivially injective
    Representation z(a, kron, {AModule::regular(a), AModule::zero(a)},
                     {Matrix(2, 0, f), Matrix(2, 0, f)});
    auto zrs = phi_injectivity_criterion(z);
    CHECK(zrs.first);
    CHECK(zrs.second);
}

TEST_CASE("projectives of a bound quiver algebra vs hereditary") {
    Field f = f2();
    // loop with the square relation: P(1) fails, not hereditary
    auto dual = algebra::truncated_polynomial(f, 2);
    ProjectivesMonicReport loop_rep = projectives_monic_bound_quiver(dual, 8);
    CHECK_FALSE(loop_rep.projectives_monic);
    CHECK(loop_rep.hereditary == TriState::No);

    // relation-free chain: all projectives monic, hereditary
    Quiver a2({"1", "2"}, {{"a", 1, 0}});
    auto ka2 = algebra::bound_quiver_algebra({a2, {}, 2}, f);
    ProjectivesMonicReport chain_rep = projectives_monic_bound_quiver(ka2, 8);
    CHECK(chain_rep.projectives_monic);
    CHECK(chain_rep.hereditary == TriState::Yes);

    // the ten-dimensional two-source algebra: fails, not hereditary
    Quiver q({"1", "2", "3"},
             {{"l1", 0, 0}, {"l2", 1, 1}, {"l3", 2, 2}, {"alpha", 1, 0}, {"beta", 2, 0}});
    exactlin::Field qf = exactlin::Field::rationals();
    std::vector<quiver::RelationElement> rels;
    rels.push_back({q, {{qf.one(), Path(q, {0, 0})}}});
    rels.push_back({q, {{qf.one(), Path(q, {1, 1})}}});
    rels.push_back({q, {{qf.one(), Path(q, {2, 2})}}});
    rels.push_back({q, {{qf.one(), Path(q, {1, 3})}, {qf.neg(qf.one()), Path(q, {3, 0})}}});
    rels.push_back({q, {{qf.one(), Path(q, {2, 4})}, {qf.neg(qf.one()), Path(q, {4, 0})}}});
    auto big = algebra::bound_quiver_algebra({q, rels, 3}, f);
    ProjectivesMonicReport big_rep = projectives_monic_bound_quiver(big, 8);
    CHECK_FALSE(big_rep.projectives_monic);
    CHECK(big_rep.hereditary == TriState::No);
}

TEST_CASE("the two decision routes agree on the fixtures through the split") {
    auto a = dual_numbers();
    GpOracle oracle(a, 8);
    for (bool use_x : {true, false}) {
        Representation rep = use_x ? rep_X(a) : rep_Y(a);
        GPVerdict via_path = gp_decide_path_algebra(rep, oracle);
        SplitTriangularView view = triangular_view_of_split(rep);
        TriangularDecision tri = gp_decide_triangular(view.lambda_prime, a, view.p, view.x_flat,
                                                      view.y, view.phi, 8);
        REQUIRE(via_path.exact());
        REQUIRE(tri.verdict.exact());
        CHECK(via_path.status == tri.verdict.status);
    }
}

TEST_CASE("the whole decision stack runs over the rationals") {
    Field q = Field::rationals();
    auto a = algebra::truncated_polynomial(q, 2);
    AModule k = examples::simple_k(a);
    AModule big = repmod::direct_sum(AModule::regular(a), k);
    Matrix xa(3, 1, q);
    xa.set(2, 0, q.one());
    Matrix xb(3, 1, q);
    xb.set(1, 0, q.one());
    xb.set(2, 0, q.one());
    Representation x(a, two_sources(), {big, k, k}, {xa, xb});
    REQUIRE(validate(x).ok);
    GpOracle oracle(a, 6);
    CHECK(oracle.report().self_injective == TriState::Yes);
    CHECK(check_monic(x).is_monic);
    CHECK(gp_decide_path_algebra(x, oracle).status == GPStatus::GP);
    CHECK(check_monic(coker_phi(x)).is_monic);

    Matrix sigma(2, 1, q);
    sigma.set(1, 0, q.one());
    Representation y(a, two_sources(), {AModule::regular(a), k, k}, {sigma, sigma});
    CHECK(gp_decide_path_algebra(y, oracle).status == GPStatus::NotGP);
}

TEST_CASE("monic representations are closed under direct sums") {
    auto a = dual_numbers();
    std::mt19937_64 rng(5);
    HarnessOptions opts;
    opts.dim_bound = 2;
    opts.seed = 11;
    std::vector<Representation> monics;
    sample_representations(a, two_sources(), opts, 400, [&](const Representation& rep) {
        if (check_monic(rep).is_monic) monics.push_back(rep);
    });
    REQUIRE(monics.size() >= 2);
    for (int it = 0; it < 25; ++it) {
        const auto& x = monics[rng() % monics.size()];
        const auto& y = monics[rng() % monics.size()];
        CHECK(check_monic(repmod::direct_sum(x, y)).is_monic);
    }
}

TEST_CASE("definition equivalence and the split properties on a sample") {
    auto a = dual_numbers();
    HarnessOptions opts;
    opts.dim_bound = 2;
    opts.seed = 3;
    opts.bound = 6;
    auto stats = run_definition_equivalence(a, two_sources(), opts, 300, true);
    CHECK(stats.instances == 300);
    CHECK(stats.characterization_disagreements == 0);
    CHECK(stats.monic_instances > 0);
    CHECK(stats.property_instances > 0);
    CHECK(stats.directness_violations == 0);
    CHECK(stats.coker_monic_violations == 0);
    CHECK(stats.criterion_disagreements == 0);
    CHECK(stats.tensor_gp_violations == 0);
}

TEST_CASE("triangular consistency harness on a small sample") {
    auto a = dual_numbers();
    HarnessOptions opts;
    opts.dim_bound = 2;
    opts.seed = 5;
    opts.bound = 6;
    auto rep = run_triangular_consistency(a, opts, 100);
    CHECK(rep.triples >= 100);
    CHECK(rep.disagreements == 0);
    CHECK(rep.perp_disagreements == 0);
    CHECK(rep.lambda_gorenstein);
    CHECK(rep.lambda_inj_dim == 1);
}

TEST_CASE("equivalence harnesses at tiny scale") {
    auto a = dual_numbers();
    Quiver a2({"1", "2"}, {{"a", 1, 0}});
    HarnessOptions opts;
    opts.dim_bound = 1;
    opts.seed = 7;
    opts.bound = 6;
    auto t51 = self_injectivity_harness(a, a2, opts);
    CHECK(t51.self_injective == TriState::Yes);
    CHECK(t51.mon_equals_gp);
    CHECK(t51.matches_classification);
    CHECK(t51.instances > 0);

    auto t54 = hereditary_harness(a, a2, opts);
    CHECK(t54.projectives_all_monic);
    CHECK(t54.found_monic_nonprojective);
    REQUIRE(t54.witness);
    // the witness is the non-projective simple at the sink
    CHECK(t54.witness->branch(0).dim() == 1);
    CHECK(t54.witness->branch(1).dim() == 0);
    CHECK(t54.lambda_hereditary == TriState::No);
    CHECK(t54.sides_match);

    // arrow-free quivers are rejected
    CHECK_THROWS_AS(hereditary_harness(a, Quiver({"1"}, {}), opts), Error);
}
