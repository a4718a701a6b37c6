#pragma once

#include "monicrep/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monicrep::repmod {

using algebra::Algebra;
using algebra::AlgebraPtr;
using exactlin::Field;
using exactlin::Matrix;
using exactlin::Scalar;

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// Finite-dimensional left module: one action matrix per algebra basis element.
class AModule {
public:
    AModule(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> action);
    static AModule zero(AlgebraPtr alg);
    static AModule regular(AlgebraPtr alg);
    // Skips validation; for module constructions that are correct by build.
    static AModule unchecked(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> action);

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t dim() const { return dim_; }
    const Matrix& action(std::size_t basis_idx) const { return action_[basis_idx]; }
    const std::vector<Matrix>& actions() const { return action_; }
    Matrix action_of(const std::vector<Scalar>& coords) const;

    // nullopt when the axioms hold, else a description of the first failure.
    static std::optional<std::string> check(const AlgebraPtr& alg, std::size_t dim,
                                            const std::vector<Matrix>& action);

    bool operator==(const AModule& o) const;

private:
    AModule() = default;
    AlgebraPtr alg_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
};

AModule direct_sum(const AModule& x, const AModule& y);
// Module structure on an invariant subspace (columns independent).
AModule submodule(const AModule& x, const Matrix& basis_cols);

struct QuotientModule {
    AModule mod;
    Matrix projection;
    Matrix section;
};
QuotientModule quotient_module(const AModule& x, const Matrix& subspace_cols);

// Datum (X_i, X_alpha): branch modules on vertices, compatible maps on arrows.
class Representation {
public:
    Representation(AlgebraPtr alg, quiver::Quiver q, std::vector<AModule> branches,
                   std::vector<Matrix> arrow_maps);

    const AlgebraPtr& algebra() const { return alg_; }
    const quiver::Quiver& q() const { return q_; }
    const AModule& branch(std::size_t v) const { return branches_[v]; }
    const std::vector<AModule>& branches() const { return branches_; }
    const Matrix& arrow_map(std::size_t arrow_idx) const { return arrow_maps_[arrow_idx]; }
    std::size_t total_dim() const;

    bool operator==(const Representation& o) const;

private:
    AlgebraPtr alg_;
    quiver::Quiver q_;
    std::vector<AModule> branches_;
    std::vector<Matrix> arrow_maps_;
};

struct ValidationReport {
    bool ok = true;
    std::string first_failure;
};
ValidationReport validate(const Representation& x);

struct RepMorphism {
    Representation source;
    Representation target;
    std::vector<Matrix> components; // per vertex
};
ValidationReport validate(const RepMorphism& f);

Matrix path_map(const Representation& x, const quiver::Path& p);
Representation direct_sum(const Representation& x, const Representation& y);

// Representation <-> flat module dictionary over Lambda = AQ.
AModule to_flat_module(const Representation& x, const AlgebraPtr& lambda);
Representation from_flat_module(const AModule& m);
// Canonical basis of the idempotent image (1 e_i) m inside the flat module.
Matrix flat_branch_basis(const AModule& m, std::size_t vertex);

struct KernelResult {
    Representation rep;
    RepMorphism inclusion;
};
struct CokernelResult {
    Representation rep;
    RepMorphism projection;
};
KernelResult kernel(const RepMorphism& f);
CokernelResult cokernel(const RepMorphism& f);

// L tensor P(i): branch L^{#paths(i->t)} at t with path-shift arrow maps.
Representation indecomposable_projective(const AModule& l, const quiver::Quiver& q, std::size_t i);

// A-B-bimodule: commuting left A-action and right B-action.
class Bimodule {
public:
    Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Matrix> left_action,
             std::vector<Matrix> right_action);

    const AlgebraPtr& left_algebra() const { return left_; }
    const AlgebraPtr& right_algebra() const { return right_; }
    std::size_t dim() const { return dim_; }
    const Matrix& left_action(std::size_t u) const { return left_action_[u]; }
    const Matrix& right_action(std::size_t v) const { return right_action_[v]; }

    AModule as_left_module() const;
    // The right structure as a left module over opposite(right_algebra).
    AModule as_right_op_module(const AlgebraPtr& right_op) const;

private:
    AlgebraPtr left_, right_;
    std::size_t dim_;
    std::vector<Matrix> left_action_, right_action_;
};

Bimodule regular_bimodule(const AlgebraPtr& a);
Bimodule bimodule_from_structure(const algebra::TriangularStructure& t);

// M tensor_B Y as (M tensor_k Y) / balancing, with the induced left A-action.
struct TensorResult {
    AModule module;
    Matrix projection; // dimM*dimY -> quotient
    Matrix section;
};
TensorResult tensor_bimodule(const Bimodule& m, const AModule& y);
// id_M tensor f on the chosen quotient coordinates.
Matrix tensor_map(const Bimodule& m, const TensorResult& src, const TensorResult& dst,
                  const Matrix& f);

// Top-vertex split X = (X', X_n, phi) over a topologically labeled quiver.
struct SplitData {
    quiver::Quiver q_prime;
    Representation restricted;  // X'
    AModule top_branch;         // X_n
    Representation phi_domain;  // P tensor X_n over Q'
    RepMorphism phi;            // phi_domain -> restricted
    std::vector<std::vector<quiver::Path>> paths_from_top; // per Q' vertex
};
SplitData split_top_vertex(const Representation& x);

// P = A tensor rad P(n) as a Lambda'-A-bimodule, basis (vertex, path, A) major
// to minor; consistent with the flat ordering of SplitData::phi_domain.
Bimodule radical_path_bimodule(const AlgebraPtr& lambda_prime, const AlgebraPtr& a,
                               const quiver::Quiver& q_full);

// Flat module over a triangular extension from the triple (X, Y, phi) with phi
// on the tensor coordinates of M tensor_B Y.
AModule triangular_module(const AlgebraPtr& lambda, const AModule& xa, const AModule& yb,
                          const Matrix& phi, const TensorResult& tensor);

} // namespace monicrep::repmod
