#pragma once

#include "monicrep/repmod.hpp"

#include <string>
#include <vector>

namespace monicrep::homological {

using algebra::AlgebraPtr;
using exactlin::Matrix;
using repmod::AModule;

// Basis of the space of A-linear maps x -> y.
std::vector<Matrix> hom_space(const AModule& x, const AModule& y);

// Coordinates of an A-linear map in a hom basis; nullopt when h is not in the span.
std::optional<Matrix> hom_coordinates(const std::vector<Matrix>& basis, const Matrix& h);

// A-linear F: x -> y with F*g == h (resp. k*F == h); nullopt when unsolvable.
std::optional<Matrix> solve_hom_right(const AModule& x, const AModule& y, const Matrix& g,
                                      const Matrix& h);
std::optional<Matrix> solve_hom_left(const AModule& x, const AModule& y, const Matrix& k,
                                     const Matrix& h);

// P(i) = A e_i and its top.
AModule projective_module(const AlgebraPtr& a, std::size_t idem_idx);
AModule simple_module(const AlgebraPtr& a, std::size_t idem_idx);

struct ProjectiveCover {
    AModule cover;
    Matrix surjection;
    std::vector<std::size_t> generator_idempotents; // one P(i) summand each
};
ProjectiveCover projective_cover(const AModule& x);

// Hom(P, y) for P a direct sum of idempotent projectives, through the
// identification Hom(A e_i, y) = e_i y; avoids the generic linear solve.
class ProjHom {
public:
    ProjHom(AlgebraPtr a, const std::vector<std::size_t>& summand_idempotents, const AModule& y);

    std::size_t dim() const { return total_; }
    // full matrix of the basis hom with the given index
    Matrix assemble(std::size_t idx) const;
    // coordinates of an arbitrary hom P -> y in this basis
    Matrix coordinates(const Matrix& h) const;

private:
    AlgebraPtr a_;
    const AModule* y_; // not owned; must outlive this object
    std::vector<std::size_t> idems_;
    std::vector<std::size_t> offsets_; // column offsets of the summands in P
    std::vector<Matrix> pcols_;        // basis of A e_i per summand, in A coords
    std::vector<Matrix> gen_;          // coordinates of e_i in that basis
    std::vector<Matrix> ey_basis_;     // basis of e_i y per summand
    std::size_t total_ = 0;
};
// Kernel of the projective cover, with its inclusion into the cover.
struct Syzygy {
    AModule mod;
    Matrix inclusion;
};
Syzygy syzygy(const AModule& x);

bool is_projective(const AModule& x);

// dim Ext^k(x, y) for k = 0..max_degree, from the minimal projective resolution.
std::vector<std::size_t> ext_dims(const AModule& x, const AModule& y, std::size_t max_degree);
std::size_t ext(const AModule& x, const AModule& y, std::size_t degree, std::size_t bound);

// Hom_A(x, A) as a module over the opposite algebra, keeping the hom basis so
// maps can be dualized.
struct DualModule {
    AModule mod;
    std::vector<Matrix> hom_basis;
};
DualModule dual_star(const AModule& x, const AlgebraPtr& a_op);
// Contravariant dual of a map t: u -> v (modules over the same side).
Matrix dual_map(const DualModule& u_dual, const DualModule& v_dual, const Matrix& t);
// Natural map x -> x** in the chosen bases.
Matrix evaluation_map(const AModule& x, const DualModule& dual, const DualModule& bidual);

enum class GPStatus { GP, NotGP, GPUpToBound };
enum class GPRoute {
    SelfInjective,
    FiniteGlobalDim,
    GorensteinPerp,
    BoundedAuslanderBridger,
    MonicTheorem,
    TriangularTheorem,
};
const char* gp_status_name(GPStatus s);
const char* gp_route_name(GPRoute r);

struct GPVerdict {
    GPStatus status;
    GPRoute route;
    std::size_t bound;
    std::string witness;

    bool exact() const { return status != GPStatus::GPUpToBound; }
};

// Decision ladder for one base algebra at a fixed bound; classification and
// the opposite algebra are computed once and shared across calls.
class GpOracle {
public:
    GpOracle(AlgebraPtr a, std::size_t bound);

    const AlgebraPtr& algebra() const { return a_; }
    const AlgebraPtr& opposite_algebra() const { return a_op_; }
    std::size_t bound() const { return bound_; }
    const algebra::AlgebraClassReport& report() const { return report_; }

    GPVerdict decide(const AModule& x) const;

private:
    AlgebraPtr a_;
    AlgebraPtr a_op_;
    std::size_t bound_;
    algebra::AlgebraClassReport report_;
};

GPVerdict gp_decide_base(const AlgebraPtr& a, const AModule& x, std::size_t bound);

// Window [-n, n] of a complete projective resolution: modules P^i and
// differentials d^i: P^i -> P^{i+1}.
struct ResolutionWindow {
    AlgebraPtr alg;
    int lo = 0;
    int hi = 0;
    std::vector<AModule> modules;
    std::vector<Matrix> differentials;

    const AModule& at(int pos) const { return modules[static_cast<std::size_t>(pos - lo)]; }
    const Matrix& diff(int pos) const { return differentials[static_cast<std::size_t>(pos - lo)]; }
};

struct WindowChecks {
    bool chain = false;
    bool interior_exact = false;
    bool all_projective = false;
    bool hom_dual_exact = false;
    std::string detail;

    bool ok() const { return chain && interior_exact && all_projective && hom_dual_exact; }
};
WindowChecks verify_window(const ResolutionWindow& w);

// Complete resolution window of a Gorenstein-projective module: minimal
// resolution on the left, the dualized resolution of the dual on the right.
// Throws LiftFailed when the verification finds the module was not GP.
struct BaseWindow {
    ResolutionWindow window;
    Matrix embed; // g -> P^0
    Matrix surj;  // P^{-1} -> g
};
BaseWindow complete_window_base(const AlgebraPtr& a, const AModule& g, std::size_t n);

// Certificate for (X, Y, phi) over the triangular extension (A M; 0 B); phi is
// given on the tensor coordinates of M tensor_B Y.
struct TriangularCert {
    AModule x;
    AModule y;
    Matrix phi;
};

// Assembles and verifies the window of the extension's complete resolution by
// solving for the comparison maps degree by degree.
ResolutionWindow complete_resolution_window(const AlgebraPtr& lambda, const repmod::Bimodule& m,
                                            const TriangularCert& cert, std::size_t n);

} // namespace monicrep::homological
