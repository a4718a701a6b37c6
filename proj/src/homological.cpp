#include "monicrep/homological.hpp"

#include <algorithm>

namespace monicrep::homological {

using algebra::TriState;
using exactlin::Field;
using exactlin::Scalar;

namespace {

Matrix vec(const Matrix& m) {
    // column-major flattening
    Matrix v(m.rows() * m.cols(), 1, m.field());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) v.set(c * m.rows() + r, 0, m.at(r, c));
    return v;
}

Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols, v.field());
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) m.set(r, c, v.at(c * rows + r, 0));
    return m;
}

std::vector<Scalar> basis_vector(const AlgebraPtr& a, std::size_t u) {
    std::vector<Scalar> e(a->dim(), a->field().zero());
    e[u] = a->field().one();
    return e;
}

} // namespace

std::vector<Matrix> hom_space(const AModule& x, const AModule& y) {
    if (!repmod::same_algebra(x.algebra(), y.algebra()))
        throw Error(ErrorCode::DimensionMismatch, "hom space over different algebras");
    const Field& f = x.algebra()->field();
    std::size_t dx = x.dim(), dy = y.dim(), da = x.algebra()->dim();
    std::size_t unknowns = dx * dy;
    // F rho_x(u) - rho_y(u) F = 0, vectorized over all basis elements
    Matrix sys(da * unknowns, unknowns, f);
    Matrix idx = Matrix::identity(dx, f), idy = Matrix::identity(dy, f);
    for (std::size_t u = 0; u < da; ++u) {
        Matrix block = exactlin::kron(x.action(u).transpose(), idy) - exactlin::kron(idx, y.action(u));
        for (std::size_t r = 0; r < unknowns; ++r)
            for (std::size_t c = 0; c < unknowns; ++c) sys.set(u * unknowns + r, c, block.at(r, c));
    }
    Matrix k = exactlin::kernel_basis(sys);
    std::vector<Matrix> basis;
    basis.reserve(k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j) basis.push_back(unvec(k.column(j), dy, dx));
    return basis;
}

std::optional<Matrix> hom_coordinates(const std::vector<Matrix>& basis, const Matrix& h) {
    const Field& f = h.field();
    Matrix stacked(h.rows() * h.cols(), basis.size(), f);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Matrix v = vec(basis[j]);
        for (std::size_t r = 0; r < v.rows(); ++r) stacked.set(r, j, v.at(r, 0));
    }
    return exactlin::solve(stacked, vec(h));
}

// F: x -> y with F * g == h, solved inside Hom_A(x, y); nullopt if impossible.
std::optional<Matrix> solve_hom_right(const AModule& x, const AModule& y, const Matrix& g,
                                      const Matrix& h) {
    std::vector<Matrix> basis = hom_space(x, y);
    std::vector<Matrix> images;
    images.reserve(basis.size());
    for (const auto& b : basis) images.push_back(b * g);
    auto coords = hom_coordinates(images, h);
    if (!coords) return std::nullopt;
    Matrix out(y.dim(), x.dim(), h.field());
    for (std::size_t j = 0; j < basis.size(); ++j)
        out = out + basis[j].scaled(coords->at(j, 0));
    return out;
}

// F: x -> y with k * F == h.
std::optional<Matrix> solve_hom_left(const AModule& x, const AModule& y, const Matrix& k,
                                     const Matrix& h) {
    std::vector<Matrix> basis = hom_space(x, y);
    std::vector<Matrix> images;
    images.reserve(basis.size());
    for (const auto& b : basis) images.push_back(k * b);
    auto coords = hom_coordinates(images, h);
    if (!coords) return std::nullopt;
    Matrix out(y.dim(), x.dim(), h.field());
    for (std::size_t j = 0; j < basis.size(); ++j)
        out = out + basis[j].scaled(coords->at(j, 0));
    return out;
}

AModule projective_module(const AlgebraPtr& a, std::size_t idem_idx) {
    if (!a->idempotents()) throw Error(ErrorCode::MissingIdempotents, "no idempotents supplied");
    const auto& e = (*a->idempotents())[idem_idx];
    Matrix image = exactlin::column_space_basis(a->right_mult_matrix(e));
    return repmod::submodule(AModule::regular(a), image);
}

AModule simple_module(const AlgebraPtr& a, std::size_t idem_idx) {
    if (!a->radical_basis()) throw Error(ErrorCode::MissingIdempotents, "no radical supplied");
    const auto& e = (*a->idempotents())[idem_idx];
    Matrix pcols = exactlin::column_space_basis(a->right_mult_matrix(e));
    AModule p = repmod::submodule(AModule::regular(a), pcols);
    // rad P(i) = (rad A) e_i, written in the coordinates of P(i)
    Matrix rad_in_a = a->right_mult_matrix(e) * *a->radical_basis();
    auto inside = exactlin::solve(pcols, rad_in_a);
    if (!inside) throw std::logic_error("radical escapes the projective");
    return repmod::quotient_module(p, *inside).mod;
}

ProjectiveCover projective_cover(const AModule& x) {
    const AlgebraPtr& a = x.algebra();
    if (!a->idempotents() || !a->radical_basis())
        throw Error(ErrorCode::MissingIdempotents, "projective covers need idempotents and radical");
    const Field& f = a->field();
    std::size_t da = a->dim();

    // rad x
    std::vector<Matrix> rad_cols;
    for (std::size_t c = 0; c < a->radical_basis()->cols(); ++c) {
        std::vector<Scalar> r(da);
        for (std::size_t u = 0; u < da; ++u) r[u] = a->radical_basis()->at(u, c);
        rad_cols.push_back(x.action_of(r));
    }
    Matrix current = rad_cols.empty()
                         ? Matrix(x.dim(), 0, f)
                         : exactlin::column_space_basis(exactlin::hstack(rad_cols, x.dim(), f));

    std::vector<std::size_t> gen_idem;
    std::vector<Matrix> gen_vec;
    for (std::size_t i = 0; i < a->idempotents()->size(); ++i) {
        Matrix part = exactlin::column_space_basis(x.action_of((*a->idempotents())[i]));
        for (std::size_t c = 0; c < part.cols(); ++c) {
            Matrix v = part.column(c);
            if (exactlin::rank(exactlin::hstack(current, v)) == current.cols()) continue;
            gen_idem.push_back(i);
            gen_vec.push_back(v);
            // grow by the whole A-orbit of v
            std::vector<Matrix> orbit = {current};
            for (std::size_t u = 0; u < da; ++u) orbit.push_back(x.action(u) * v);
            current = exactlin::column_space_basis(exactlin::hstack(orbit, x.dim(), f));
        }
    }
    if (current.cols() != x.dim())
        throw std::logic_error("projective cover generators do not span");

    AModule cover = AModule::zero(a);
    std::vector<Matrix> blocks;
    for (std::size_t g = 0; g < gen_idem.size(); ++g) {
        AModule p = projective_module(a, gen_idem[g]);
        // basis of P(i) inside A, as coordinates
        Matrix pcols = exactlin::column_space_basis(a->right_mult_matrix((*a->idempotents())[gen_idem[g]]));
        Matrix block(x.dim(), p.dim(), f);
        for (std::size_t c = 0; c < p.dim(); ++c) {
            std::vector<Scalar> coords(da);
            for (std::size_t u = 0; u < da; ++u) coords[u] = pcols.at(u, c);
            Matrix img = x.action_of(coords) * gen_vec[g];
            for (std::size_t r = 0; r < x.dim(); ++r) block.set(r, c, img.at(r, 0));
        }
        blocks.push_back(std::move(block));
        cover = repmod::direct_sum(cover, p);
    }
    Matrix surj = blocks.empty() ? Matrix(x.dim(), 0, f) : exactlin::hstack(blocks, x.dim(), f);
    return {std::move(cover), std::move(surj), std::move(gen_idem)};
}

Syzygy syzygy(const AModule& x) {
    ProjectiveCover pc = projective_cover(x);
    Matrix k = exactlin::kernel_basis(pc.surjection);
    return {repmod::submodule(pc.cover, k), std::move(k)};
}

bool is_projective(const AModule& x) {
    if (x.dim() == 0) return true;
    return projective_cover(x).cover.dim() == x.dim();
}

ProjHom::ProjHom(AlgebraPtr a, const std::vector<std::size_t>& summand_idempotents,
                 const AModule& y)
    : a_(std::move(a)), y_(&y), idems_(summand_idempotents) {
    const Field& f = a_->field();
    std::size_t off = 0;
    for (std::size_t i : idems_) {
        const auto& e = (*a_->idempotents())[i];
        Matrix cols = exactlin::column_space_basis(a_->right_mult_matrix(e));
        Matrix ecol(a_->dim(), 1, f);
        for (std::size_t u = 0; u < a_->dim(); ++u) ecol.set(u, 0, e[u]);
        auto gen = exactlin::solve(cols, ecol);
        if (!gen) throw std::logic_error("idempotent escapes its own projective");
        offsets_.push_back(off);
        off += cols.cols();
        pcols_.push_back(std::move(cols));
        gen_.push_back(std::move(*gen));
        ey_basis_.push_back(exactlin::column_space_basis(y.action_of(e)));
        total_ += ey_basis_.back().cols();
    }
    offsets_.push_back(off);
}

Matrix ProjHom::assemble(std::size_t idx) const {
    const Field& f = a_->field();
    std::size_t g = 0;
    while (idx >= ey_basis_[g].cols()) idx -= ey_basis_[g].cols(), ++g;
    Matrix v = ey_basis_[g].column(idx);
    Matrix out(y_->dim(), offsets_.back(), f);
    for (std::size_t c = 0; c < pcols_[g].cols(); ++c) {
        std::vector<Scalar> coords(a_->dim());
        for (std::size_t u = 0; u < a_->dim(); ++u) coords[u] = pcols_[g].at(u, c);
        Matrix img = y_->action_of(coords) * v;
        for (std::size_t r = 0; r < y_->dim(); ++r) out.set(r, offsets_[g] + c, img.at(r, 0));
    }
    return out;
}

Matrix ProjHom::coordinates(const Matrix& h) const {
    const Field& f = a_->field();
    Matrix out(total_, 1, f);
    std::size_t pos = 0;
    for (std::size_t g = 0; g < idems_.size(); ++g) {
        // value at the summand generator determines the hom
        Matrix gen_vec(offsets_.back(), 1, f);
        for (std::size_t r = 0; r < gen_[g].rows(); ++r)
            gen_vec.set(offsets_[g] + r, 0, gen_[g].at(r, 0));
        auto coords = exactlin::solve(ey_basis_[g], h * gen_vec);
        if (!coords) throw std::logic_error("hom value escapes e_i y");
        for (std::size_t r = 0; r < ey_basis_[g].cols(); ++r) out.set(pos + r, 0, coords->at(r, 0));
        pos += ey_basis_[g].cols();
    }
    return out;
}

std::vector<std::size_t> ext_dims(const AModule& x, const AModule& y, std::size_t max_degree) {
    // minimal resolution ... -> P_1 -> P_0 -> x -> 0, depth max_degree + 1
    std::vector<ProjectiveCover> covers;
    std::vector<Matrix> d; // d[k]: P_{k+1} -> P_k
    covers.push_back(projective_cover(x));
    Matrix incl = exactlin::kernel_basis(covers[0].surjection); // syzygy inside P_k
    AModule omega = repmod::submodule(covers[0].cover, incl);
    for (std::size_t kdeg = 1; kdeg <= max_degree + 1; ++kdeg) {
        ProjectiveCover step = projective_cover(omega);
        d.push_back(incl * step.surjection);
        incl = exactlin::kernel_basis(step.surjection);
        omega = repmod::submodule(step.cover, incl);
        covers.push_back(std::move(step));
    }

    // Hom(P_k, y) in summand coordinates and the induced maps
    const Field& f = x.algebra()->field();
    std::vector<ProjHom> homs;
    for (const auto& c : covers) homs.emplace_back(x.algebra(), c.generator_idempotents, y);
    std::vector<Matrix> maps; // maps[k]: Hom(P_k, y) -> Hom(P_{k+1}, y)
    for (std::size_t k = 0; k + 1 < covers.size(); ++k) {
        Matrix m(homs[k + 1].dim(), homs[k].dim(), f);
        for (std::size_t j = 0; j < homs[k].dim(); ++j) {
            Matrix col = homs[k + 1].coordinates(homs[k].assemble(j) * d[k]);
            for (std::size_t r = 0; r < m.rows(); ++r) m.set(r, j, col.at(r, 0));
        }
        maps.push_back(std::move(m));
    }

    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k <= max_degree; ++k) {
        std::size_t zk = homs[k].dim() - exactlin::rank(maps[k]); // dim ker(-> Hom(P_{k+1}))
        std::size_t bk = k == 0 ? 0 : exactlin::rank(maps[k - 1]);
        dims.push_back(zk - bk);
    }
    return dims;
}

std::size_t ext(const AModule& x, const AModule& y, std::size_t degree, std::size_t bound) {
    if (degree > bound) throw Error(ErrorCode::DimensionMismatch, "degree exceeds the bound");
    return ext_dims(x, y, degree)[degree];
}

DualModule dual_star(const AModule& x, const AlgebraPtr& a_op) {
    const AlgebraPtr& a = x.algebra();
    const Field& f = a->field();
    std::vector<Matrix> basis = hom_space(x, AModule::regular(a));
    std::size_t h = basis.size();
    std::vector<Matrix> action;
    for (std::size_t u = 0; u < a_op->dim(); ++u) {
        Matrix ru = a->right_mult_matrix(basis_vector(a, u));
        Matrix act(h, h, f);
        for (std::size_t j = 0; j < h; ++j) {
            auto coords = hom_coordinates(basis, ru * basis[j]);
            if (!coords) throw std::logic_error("right action left the hom space");
            for (std::size_t r = 0; r < h; ++r) act.set(r, j, coords->at(r, 0));
        }
        action.push_back(std::move(act));
    }
    return {AModule::unchecked(a_op, h, std::move(action)), std::move(basis)};
}

Matrix dual_map(const DualModule& u_dual, const DualModule& v_dual, const Matrix& t) {
    // t: u -> v induces t*: v* -> u*, g |-> g o t
    const Field& f = t.field();
    Matrix m(u_dual.mod.dim(), v_dual.mod.dim(), f);
    for (std::size_t j = 0; j < v_dual.hom_basis.size(); ++j) {
        auto coords = hom_coordinates(u_dual.hom_basis, v_dual.hom_basis[j] * t);
        if (!coords) throw std::logic_error("dualized map left the hom space");
        for (std::size_t r = 0; r < u_dual.mod.dim(); ++r) m.set(r, j, coords->at(r, 0));
    }
    return m;
}

Matrix evaluation_map(const AModule& x, const DualModule& dual, const DualModule& bidual) {
    const Field& f = x.algebra()->field();
    Matrix ev(bidual.mod.dim(), x.dim(), f);
    for (std::size_t c = 0; c < x.dim(); ++c) {
        // ev(e_c): dual -> A, f |-> f(e_c)
        Matrix g(dual.hom_basis.empty() ? 0 : dual.hom_basis.front().rows(), dual.mod.dim(), f);
        for (std::size_t j = 0; j < dual.hom_basis.size(); ++j)
            for (std::size_t r = 0; r < g.rows(); ++r) g.set(r, j, dual.hom_basis[j].at(r, c));
        auto coords = hom_coordinates(bidual.hom_basis, g);
        if (!coords) throw std::logic_error("evaluation left the bidual");
        for (std::size_t r = 0; r < bidual.mod.dim(); ++r) ev.set(r, c, coords->at(r, 0));
    }
    return ev;
}

const char* gp_status_name(GPStatus s) {
    switch (s) {
        case GPStatus::GP: return "GP";
        case GPStatus::NotGP: return "NotGP";
        case GPStatus::GPUpToBound: return "GPUpToBound";
    }
    return "?";
}

const char* gp_route_name(GPRoute r) {
    switch (r) {
        case GPRoute::SelfInjective: return "SelfInjective";
        case GPRoute::FiniteGlobalDim: return "FiniteGlobalDim";
        case GPRoute::GorensteinPerp: return "GorensteinPerp";
        case GPRoute::BoundedAuslanderBridger: return "BoundedAuslanderBridger";
        case GPRoute::MonicTheorem: return "MonicTheorem";
        case GPRoute::TriangularTheorem: return "TriangularTheorem";
    }
    return "?";
}

GpOracle::GpOracle(AlgebraPtr a, std::size_t bound)
    : a_(std::move(a)), a_op_(algebra::opposite(a_)), bound_(bound),
      report_(algebra::classify(a_, bound)) {}

GPVerdict GpOracle::decide(const AModule& x) const {
    if (report_.self_injective == TriState::Yes)
        return {GPStatus::GP, GPRoute::SelfInjective, bound_, "base algebra is self-injective"};
    if (!a_->idempotents() || !a_->radical_basis())
        throw Error(ErrorCode::MissingIdempotents,
                    "no decision route applies without idempotents and radical");
    if (!report_.global_dim.exceeds_bound) {
        // finite global dimension: GP = projective
        if (is_projective(x))
            return {GPStatus::GP, GPRoute::FiniteGlobalDim, bound_, "projective"};
        return {GPStatus::NotGP, GPRoute::FiniteGlobalDim, bound_,
                "not projective over an algebra of global dimension " +
                    report_.global_dim.display(bound_)};
    }
    if (report_.gorenstein == TriState::Yes) {
        std::size_t d = std::max(report_.left_inj_dim.value, report_.right_inj_dim.value);
        auto dims = ext_dims(x, AModule::regular(a_), d);
        for (std::size_t i = 1; i <= d; ++i)
            if (dims[i] != 0)
                return {GPStatus::NotGP, GPRoute::GorensteinPerp, bound_,
                        "Ext^" + std::to_string(i) + "(X, A) has dimension " +
                            std::to_string(dims[i])};
        return {GPStatus::GP, GPRoute::GorensteinPerp, bound_,
                "Ext^i(X, A) = 0 for 1 <= i <= " + std::to_string(d) +
                    " over a Gorenstein algebra"};
    }
    // bounded fallback: projectivity wins exactly, any Ext obstruction loses
    // exactly, and a clean bill within the bound stays bounded.
    if (is_projective(x))
        return {GPStatus::GP, GPRoute::BoundedAuslanderBridger, bound_, "projective"};
    auto dims = ext_dims(x, AModule::regular(a_), bound_);
    for (std::size_t i = 1; i <= bound_; ++i)
        if (dims[i] != 0)
            return {GPStatus::NotGP, GPRoute::BoundedAuslanderBridger, bound_,
                    "Ext^" + std::to_string(i) + "(X, A) has dimension " + std::to_string(dims[i])};
    DualModule dual = dual_star(x, a_op_);
    DualModule bidual = dual_star(dual.mod, a_);
    Matrix ev = evaluation_map(x, dual, bidual);
    if (ev.rows() != ev.cols() || exactlin::rank(ev) != ev.rows())
        return {GPStatus::NotGP, GPRoute::BoundedAuslanderBridger, bound_,
                "evaluation X -> X** is not an isomorphism"};
    auto op_dims = ext_dims(dual.mod, AModule::regular(a_op_), bound_);
    for (std::size_t i = 1; i <= bound_; ++i)
        if (op_dims[i] != 0)
            return {GPStatus::NotGP, GPRoute::BoundedAuslanderBridger, bound_,
                    "Ext^" + std::to_string(i) + "(X*, A^op) has dimension " +
                        std::to_string(op_dims[i])};
    return {GPStatus::GPUpToBound, GPRoute::BoundedAuslanderBridger, bound_,
            "all obstructions vanish up to degree " + std::to_string(bound_)};
}

GPVerdict gp_decide_base(const AlgebraPtr& a, const AModule& x, std::size_t bound) {
    return GpOracle(a, bound).decide(x);
}

} // namespace monicrep::homological
