#pragma once

// Thin adapter over the bundled examples for the test suites.

#include "monicrep/examples.hpp"

namespace fixtures {

using namespace monicrep;
using algebra::AlgebraPtr;
using exactlin::Field;
using exactlin::Matrix;
using quiver::Quiver;
using repmod::AModule;
using repmod::Representation;

inline Field f2() { return Field::prime(2); }
inline Quiver two_sources() { return examples::two_sources(); }
inline AlgebraPtr dual_numbers() { return examples::dual_numbers(f2()); }
inline AModule simple_k(const AlgebraPtr& a) { return examples::simple_k(a); }
inline Representation rep_X(const AlgebraPtr& a) { return examples::rep_X(a); }
inline Representation rep_Y(const AlgebraPtr& a) { return examples::rep_Y(a); }

} // namespace fixtures
