#pragma once

#include "monicrep/exactlin.hpp"
#include "monicrep/quiver.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace monicrep::repmod {
class Bimodule;
}

namespace monicrep::algebra {

using exactlin::Field;
using exactlin::Matrix;
using exactlin::Scalar;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Quiver with admissible relations; all paths of length >= nilpotency_bound
// vanish in the quotient.
struct BoundQuiverPresentation {
    quiver::Quiver q;
    std::vector<quiver::RelationElement> relations;
    std::size_t nilpotency_bound;
};

// Book-keeping carried by path algebras AQ so that representations convert to
// and from flat modules: basis element (path, base-basis) at index
// path_idx * dim(base) + base_idx.
struct PathAlgebraStructure {
    AlgebraPtr base;
    quiver::Quiver q;
    std::vector<quiver::Path> paths;            // basis order
    std::vector<std::size_t> trivial_path_index; // per vertex
    std::vector<std::size_t> arrow_path_index;   // per arrow

    std::size_t basis_index(std::size_t path_idx, std::size_t base_idx) const;
    std::size_t path_index(const quiver::Path& p) const; // throws if absent
};

// Block layout of a triangular extension (A M; 0 B): basis [A | M | B].
struct TriangularStructure {
    AlgebraPtr a;
    AlgebraPtr b;
    std::size_t mdim;
    std::vector<Matrix> m_left_action;  // per A basis element, mdim x mdim
    std::vector<Matrix> m_right_action; // per B basis element, mdim x mdim
};

// Finite-dimensional associative algebra with a distinguished basis, given by
// structure constants b_u * b_v = sum_w c(u,v,w) b_w. Associativity, the unit,
// and any supplied idempotents/radical are verified at construction.
class Algebra {
public:
    using SparseRow = std::vector<std::pair<std::size_t, Scalar>>; // (w, coeff), sorted

    static AlgebraPtr from_structure_constants(
        const Field& f, std::vector<std::string> basis_labels,
        std::vector<std::vector<SparseRow>> table, std::vector<Scalar> unit,
        std::optional<std::vector<std::vector<Scalar>>> idempotents = std::nullopt,
        std::optional<Matrix> radical = std::nullopt);

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::vector<Scalar>& unit() const { return unit_; }
    const SparseRow& basis_product(std::size_t u, std::size_t v) const { return table_[u][v]; }

    const std::optional<std::vector<std::vector<Scalar>>>& idempotents() const {
        return idempotents_;
    }
    const std::optional<Matrix>& radical_basis() const { return radical_; }
    const std::optional<BoundQuiverPresentation>& presentation() const { return presentation_; }
    // For algebras built from a bound quiver: the basis path for each basis index.
    const std::optional<std::vector<quiver::Path>>& basis_paths() const { return basis_paths_; }
    const std::optional<PathAlgebraStructure>& path_structure() const { return path_structure_; }
    const std::optional<TriangularStructure>& triangular_structure() const {
        return tri_structure_;
    }

    std::vector<Scalar> mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
    Matrix left_mult_matrix(const std::vector<Scalar>& x) const;
    Matrix right_mult_matrix(const std::vector<Scalar>& x) const;
    // Dense c(u,v,w) table, mostly for serialization and table comparisons.
    std::vector<std::vector<std::vector<Scalar>>> dense_table() const;

private:
    friend AlgebraPtr attach_presentation(AlgebraPtr, BoundQuiverPresentation,
                                          std::optional<std::vector<quiver::Path>>);
    friend AlgebraPtr attach_path_structure(AlgebraPtr, PathAlgebraStructure);
    friend AlgebraPtr attach_triangular_structure(AlgebraPtr, TriangularStructure);

    Algebra(Field f) : field_(f) {}
    void validate() const;

    Field field_;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<SparseRow>> table_;
    std::vector<Scalar> unit_;
    std::optional<std::vector<std::vector<Scalar>>> idempotents_;
    std::optional<Matrix> radical_;
    std::optional<BoundQuiverPresentation> presentation_;
    std::optional<std::vector<quiver::Path>> basis_paths_;
    std::optional<PathAlgebraStructure> path_structure_;
    std::optional<TriangularStructure> tri_structure_;
};

// Internal: return a copy of the algebra carrying extra structure.
AlgebraPtr attach_presentation(AlgebraPtr a, BoundQuiverPresentation p,
                               std::optional<std::vector<quiver::Path>> basis_paths = std::nullopt);
AlgebraPtr attach_path_structure(AlgebraPtr a, PathAlgebraStructure p);
AlgebraPtr attach_triangular_structure(AlgebraPtr a, TriangularStructure t);

// The ground field as a one-dimensional algebra.
AlgebraPtr field_algebra(const Field& f);

// k[x]/(x^n) with basis 1, x, ..., x^{n-1}.
AlgebraPtr truncated_polynomial(const Field& f, std::size_t n);

// kQ/I with basis the surviving paths of length < nilpotency_bound; throws
// NotAdmissible when the relations do not absorb that power of the arrow ideal.
AlgebraPtr bound_quiver_algebra(const BoundQuiverPresentation& pres, const Field& f);

// Path algebra AQ of an acyclic quiver over a base algebra.
AlgebraPtr path_algebra_over(AlgebraPtr a, const quiver::Quiver& q);

// Upper triangular extension (A M; 0 B) of an A-B-bimodule.
AlgebraPtr triangular_extension(AlgebraPtr a, AlgebraPtr b, const repmod::Bimodule& m);

AlgebraPtr opposite(AlgebraPtr a);

enum class TriState { Yes, No, Unknown };
const char* tri_state_name(TriState t);

// A homological dimension probed up to a bound: either an exact value or
// "not resolved within the bound".
struct DimBound {
    bool exceeds_bound = false;
    std::size_t value = 0;

    static DimBound exact(std::size_t v) { return {false, v}; }
    static DimBound beyond() { return {true, 0}; }
    std::string display(std::size_t bound) const {
        return exceeds_bound ? (">" + std::to_string(bound)) : std::to_string(value);
    }
};

struct AlgebraClassReport {
    TriState self_injective = TriState::Unknown;
    TriState hereditary = TriState::Unknown;
    TriState gorenstein = TriState::Unknown;
    TriState basic = TriState::Unknown;
    TriState connected = TriState::Unknown;
    DimBound global_dim;
    DimBound left_inj_dim;
    DimBound right_inj_dim;
    std::size_t bound_used = 0;
};

// Homological classification up to the bound; fields that need idempotents or
// the radical degrade to Unknown when those are absent.
AlgebraClassReport classify(AlgebraPtr a, std::size_t bound);

} // namespace monicrep::algebra
