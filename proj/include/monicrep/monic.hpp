#pragma once

#include "monicrep/homological.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monicrep::monic {

using algebra::AlgebraPtr;
using algebra::TriState;
using exactlin::Matrix;
using homological::GpOracle;
using homological::GPStatus;
using homological::GPVerdict;
using repmod::AModule;
using repmod::Representation;

struct MonicVertexReport {
    std::string vertex;
    std::vector<std::string> incoming_arrows;
    std::vector<bool> arrow_injective; // (m1), per incoming arrow
    bool images_direct = true;         // (m2), by iterated subspace sums
    bool collected_injective = true;   // rank of the collected map
    std::size_t collected_rank = 0;
    std::size_t source_total_dim = 0;
};

struct MonicFailure {
    std::string vertex;
    std::string condition; // "m1(<arrow>)" or "m2"
    Matrix witness;        // kernel vector of the collected map
};

struct MonicReport {
    bool is_monic = true;
    std::vector<MonicVertexReport> per_vertex; // in topological label order
    std::optional<MonicFailure> first_failure;
};

// Definition check: both characterizations are computed independently and
// must agree; a mismatch is an internal error.
MonicReport check_monic(const Representation& x);

struct ConditionGVertex {
    std::string vertex;
    GPVerdict branch;
    GPVerdict quotient;
};

struct ConditionGReport {
    std::vector<ConditionGVertex> per_vertex;
    GPStatus overall = GPStatus::GP;
    std::string witness;
};

ConditionGReport condition_G(const Representation& x, const GpOracle& base_oracle);

// The path-algebra decision: monic + condition (G).
GPVerdict gp_decide_path_algebra(const Representation& x, const GpOracle& base_oracle);
GPVerdict gp_decide_path_algebra(const Representation& x, std::size_t bound);

struct TriangularDecision {
    GPVerdict verdict;
    bool phi_injective = false;
    GPVerdict coker_verdict;
    GPVerdict y_verdict;
    std::string last_assertion; // X in GP(A) iff M x Y in GP(A), when decidable
};

// The bimodule decision for (A M; 0 B): phi injective, Coker phi GP over A,
// Y GP over B. phi is given on the tensor coordinates of M tensor_B Y.
TriangularDecision gp_decide_triangular(const AlgebraPtr& a, const AlgebraPtr& b,
                                        const repmod::Bimodule& m, const AModule& x,
                                        const AModule& y, const Matrix& phi, std::size_t bound);

// Vertexwise quotient of X' by the images of all paths from the top vertex;
// requires a monic input.
Representation coker_phi(const Representation& x);

// Directness of the top-path images at every vertex (used inside coker_phi).
bool top_path_images_direct(const Representation& x);

// (assembled phi injectivity, arrow-injectivity + path-image-directness),
// computed independently; requires the restricted arrows to be injective.
std::pair<bool, bool> phi_injectivity_criterion(const Representation& x);

struct ProjectivesMonicReport {
    bool projectives_monic = true;
    TriState hereditary = TriState::Unknown;
    std::vector<std::pair<std::string, bool>> per_projective; // vertex label, monic?
};

// Checks every P(j) of a bound quiver algebra as an I-bounded representation.
ProjectivesMonicReport projectives_monic_bound_quiver(const AlgebraPtr& a, std::size_t bound);

// Split-based triangular view of a representation: the data feeding
// gp_decide_triangular so the two theorems can be compared.
struct SplitTriangularView {
    AlgebraPtr lambda_prime;
    repmod::Bimodule p;
    AModule x_flat; // X' flattened over lambda_prime
    AModule y;      // X_n
    Matrix phi;     // on the tensor coordinates of P tensor_A X_n
};
SplitTriangularView triangular_view_of_split(const Representation& x);

} // namespace monicrep::monic
