#pragma once

#include "monicrep/monic.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace monicrep::monic {

struct HarnessOptions {
    std::size_t dim_bound = 2;
    long long budget = 100000;  // instance cap for enumeration/sampling
    std::uint64_t seed = 1;
    std::size_t bound = 8;      // homological bound
};

// All valid module structures on k^d, exhaustively when the search space fits
// under the cap, otherwise a seeded sample. Deterministic either way.
std::vector<AModule> module_pool(const AlgebraPtr& a, std::size_t d, long long cap,
                                 std::uint64_t seed);

// Streams valid representations of q over a with branch dims <= dim_bound,
// exhaustively if that fits in the budget and by seeded sampling otherwise.
// Stops after `count` representations or when the enumeration is done.
void sample_representations(const AlgebraPtr& a, const quiver::Quiver& q,
                            const HarnessOptions& opts, long long count,
                            const std::function<void(const Representation&)>& f);

struct DefinitionEquivalenceStats {
    long long instances = 0;
    long long monic_instances = 0;
    long long characterization_disagreements = 0;
    // split-based properties, run on every monic instance
    long long property_instances = 0;
    long long directness_violations = 0;     // top path images not direct
    long long coker_monic_violations = 0;    // Coker phi not monic
    long long criterion_disagreements = 0;   // assembled phi vs path criterion
    long long tensor_gp_violations = 0;      // P x X_n not GP over Q'
};

// Definition-level equivalence plus the split-based property suite.
DefinitionEquivalenceStats run_definition_equivalence(const AlgebraPtr& a, const quiver::Quiver& q,
                                                      const HarnessOptions& opts, long long count,
                                                      bool property_suite);

struct TriangularConsistencyReport {
    long long triples = 0;
    long long disagreements = 0;        // path-algebra vs triangular routes
    long long perp_disagreements = 0;   // vs the Ext-vanishing oracle over Lambda
    bool lambda_gorenstein = false;
    std::size_t lambda_inj_dim = 0;
};

// Compares the two theorem deciders and the Ext-vanishing oracle over the
// chain with two vertices, enumerating triples (X, Y, phi).
TriangularConsistencyReport run_triangular_consistency(const AlgebraPtr& a,
                                                       const HarnessOptions& opts,
                                                       long long min_triples);

struct SelfInjectivityHarnessReport {
    long long instances = 0;
    long long monic_count = 0;
    long long gp_count = 0;
    long long bounded_verdicts = 0;
    long long mismatches = 0; // monic xor GP among exact verdicts
    std::optional<Representation> counterexample;
    TriState self_injective = TriState::Unknown;
    bool mon_equals_gp = false;
    bool matches_classification = false;
};

SelfInjectivityHarnessReport self_injectivity_harness(const AlgebraPtr& a, const quiver::Quiver& q,
                                    const HarnessOptions& opts);

struct HereditaryHarnessReport {
    bool projectives_all_monic = false;
    bool found_monic_nonprojective = false;
    std::optional<Representation> witness;
    TriState lambda_hereditary = TriState::Unknown;
    bool monic_equals_projective = false;
    bool sides_match = false;
};

HereditaryHarnessReport hereditary_harness(const AlgebraPtr& a, const quiver::Quiver& q,
                                    const HarnessOptions& opts);

} // namespace monicrep::monic
