#pragma once

// Bundled example inputs: the dual numbers k[x]/(x^2) over F_2, the two-source
// quiver 3 -> 1 <- 2, a Gorenstein-projective representation X and a
// non-example Y on it, and the ten-dimensional bound quiver presentation of
// the same path algebra. Used by the suite command and the test fixtures.

#include "monicrep/algebra.hpp"
#include "monicrep/repmod.hpp"

namespace monicrep::examples {

using algebra::AlgebraPtr;
using exactlin::Field;
using exactlin::Matrix;
using quiver::Quiver;
using repmod::AModule;
using repmod::Representation;

inline Quiver two_sources() {
    return Quiver({"1", "2", "3"}, {{"alpha", 1, 0}, {"beta", 2, 0}});
}

inline AlgebraPtr dual_numbers(const Field& f) { return algebra::truncated_polynomial(f, 2); }

// the simple module k with x acting by zero
inline AModule simple_k(const AlgebraPtr& a) {
    Field f = a->field();
    return AModule::unchecked(a, 1, {Matrix::identity(1, f), Matrix(1, 1, f)});
}

// X: A + k at vertex 1 (coordinates 1, x, k), k at vertices 2 and 3,
// alpha = (0,0,1)^t, beta = (0,1,1)^t. Gorenstein-projective.
inline Representation rep_X(const AlgebraPtr& a) {
    Field f = a->field();
    AModule big = repmod::direct_sum(AModule::regular(a), simple_k(a));
    Matrix xa(3, 1, f);
    xa.set(2, 0, f.one());
    Matrix xb(3, 1, f);
    xb.set(1, 0, f.one());
    xb.set(2, 0, f.one());
    return Representation(a, two_sources(), {big, simple_k(a), simple_k(a)}, {xa, xb});
}

// Y: A at vertex 1, k at vertices 2 and 3, both arrows the socle inclusion.
// Monic fails at vertex 1 (the images collide), so not Gorenstein-projective.
inline Representation rep_Y(const AlgebraPtr& a) {
    Field f = a->field();
    Matrix sigma(2, 1, f);
    sigma.set(1, 0, f.one());
    return Representation(a, two_sources(), {AModule::regular(a), simple_k(a), simple_k(a)},
                          {sigma, sigma});
}

// the two-source quiver with a loop at every vertex, bound by the square and
// commutation relations; its quotient is the path algebra of two_sources over
// the dual numbers (dimension 10)
inline algebra::BoundQuiverPresentation looped_presentation() {
    Quiver q({"1", "2", "3"},
             {{"l1", 0, 0}, {"l2", 1, 1}, {"l3", 2, 2}, {"alpha", 1, 0}, {"beta", 2, 0}});
    Field qf = Field::rationals();
    using quiver::Path;
    using quiver::RelationElement;
    std::vector<RelationElement> rels;
    rels.push_back({q, {{qf.one(), Path(q, {0, 0})}}});
    rels.push_back({q, {{qf.one(), Path(q, {1, 1})}}});
    rels.push_back({q, {{qf.one(), Path(q, {2, 2})}}});
    rels.push_back({q, {{qf.one(), Path(q, {1, 3})}, {qf.neg(qf.one()), Path(q, {3, 0})}}});
    rels.push_back({q, {{qf.one(), Path(q, {2, 4})}, {qf.neg(qf.one()), Path(q, {4, 0})}}});
    return {std::move(q), std::move(rels), 3};
}

} // namespace monicrep::examples
