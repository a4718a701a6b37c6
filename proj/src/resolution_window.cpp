#include "monicrep/homological.hpp"

namespace monicrep::homological {

using exactlin::Field;
using exactlin::Matrix;
using repmod::AModule;

WindowChecks verify_window(const ResolutionWindow& w) {
    WindowChecks out;
    out.chain = true;
    for (int p = w.lo; p + 1 < w.hi; ++p) {
        if (!(w.diff(p + 1) * w.diff(p)).is_zero()) {
            out.chain = false;
            out.detail = "d o d != 0 at position " + std::to_string(p);
            return out;
        }
    }
    out.interior_exact = true;
    for (int p = w.lo + 1; p < w.hi; ++p) {
        std::size_t image = exactlin::rank(w.diff(p - 1));
        std::size_t kernel = w.at(p).dim() - exactlin::rank(w.diff(p));
        if (image != kernel) {
            out.interior_exact = false;
            out.detail = "not exact at position " + std::to_string(p);
            return out;
        }
    }
    out.all_projective = true;
    for (int p = w.lo; p <= w.hi; ++p) {
        if (!is_projective(w.at(p))) {
            out.all_projective = false;
            out.detail = "module at position " + std::to_string(p) + " is not projective";
            return out;
        }
    }
    // Hom(-, A) must stay exact at the interior positions. Each P^i is
    // projective, so its cover is an isomorphism; conjugating the
    // differentials into cover coordinates lets the idempotent hom
    // identification do the work.
    AModule reg = AModule::regular(w.alg);
    std::vector<ProjectiveCover> covers;
    std::vector<Matrix> cover_inv;
    for (int p = w.lo; p <= w.hi; ++p) {
        covers.push_back(projective_cover(w.at(p)));
        auto inv = exactlin::inverse(covers.back().surjection);
        if (!inv) throw std::logic_error("cover of a projective window module is not square");
        cover_inv.push_back(std::move(*inv));
    }
    std::vector<ProjHom> homs;
    std::vector<std::size_t> hom_dims;
    for (std::size_t k = 0; k < covers.size(); ++k) {
        homs.emplace_back(w.alg, covers[k].generator_idempotents, reg);
        hom_dims.push_back(homs.back().dim());
    }
    std::vector<std::size_t> ranks; // rank of Hom(P^{p+1}, A) -> Hom(P^p, A)
    for (int p = w.lo; p < w.hi; ++p) {
        std::size_t k = static_cast<std::size_t>(p - w.lo);
        Matrix conj = cover_inv[k + 1] * w.diff(p) * covers[k].surjection;
        Matrix m(hom_dims[k], hom_dims[k + 1], w.alg->field());
        for (std::size_t j = 0; j < hom_dims[k + 1]; ++j) {
            Matrix col = homs[k].coordinates(homs[k + 1].assemble(j) * conj);
            for (std::size_t r = 0; r < m.rows(); ++r) m.set(r, j, col.at(r, 0));
        }
        ranks.push_back(exactlin::rank(m));
    }
    out.hom_dual_exact = true;
    for (int p = w.lo + 1; p < w.hi; ++p) {
        std::size_t idx = static_cast<std::size_t>(p - w.lo);
        std::size_t image = ranks[idx];          // from Hom(P^{p+1}, A)
        std::size_t kernel = hom_dims[idx] - ranks[idx - 1];
        if (image != kernel) {
            out.hom_dual_exact = false;
            out.detail = "Hom(-, A) not exact at position " + std::to_string(p);
            return out;
        }
    }
    return out;
}

BaseWindow complete_window_base(const AlgebraPtr& a, const AModule& g, std::size_t n) {
    if (n < 1) throw Error(ErrorCode::WindowTooShort, "window half-width must be at least 1");
    AlgebraPtr a_op = algebra::opposite(a);

    // left tail: minimal projective resolution of g
    std::vector<AModule> left_mods;  // P^{-1}, P^{-2}, ...
    std::vector<Matrix> left_diffs;  // d^{-k}: P^{-k} -> P^{-k+1} for k >= 2
    ProjectiveCover pc = projective_cover(g);
    left_mods.push_back(pc.cover);
    Matrix surj_g = pc.surjection;
    Matrix incl = exactlin::kernel_basis(pc.surjection);
    AModule omega = repmod::submodule(pc.cover, incl);
    for (std::size_t k = 2; k <= n; ++k) {
        ProjectiveCover step = projective_cover(omega);
        left_mods.push_back(step.cover);
        left_diffs.push_back(incl * step.surjection);
        incl = exactlin::kernel_basis(step.surjection);
        omega = repmod::submodule(step.cover, incl);
    }

    // right tail: dualize the minimal resolution of g* over the opposite side
    DualModule gdual = dual_star(g, a_op);
    std::vector<DualModule> rdual; // (R_k)* with hom bases
    std::vector<AModule> right_mods;
    std::vector<Matrix> right_diffs; // d^k: P^k -> P^{k+1} for k >= 0
    {
        std::vector<AModule> r;
        std::vector<Matrix> rd; // r_k: R_k -> R_{k-1}
        ProjectiveCover rc = projective_cover(gdual.mod);
        r.push_back(rc.cover);
        Matrix rsurj = rc.surjection;
        Matrix rincl = exactlin::kernel_basis(rc.surjection);
        AModule romega = repmod::submodule(rc.cover, rincl);
        for (std::size_t k = 1; k <= n; ++k) {
            ProjectiveCover step = projective_cover(romega);
            r.push_back(step.cover);
            rd.push_back(rincl * step.surjection);
            rincl = exactlin::kernel_basis(step.surjection);
            romega = repmod::submodule(step.cover, rincl);
        }
        for (const auto& rk : r) rdual.push_back(dual_star(rk, a));
        for (std::size_t k = 0; k <= n; ++k) right_mods.push_back(rdual[k].mod);
        for (std::size_t k = 0; k < n; ++k)
            right_diffs.push_back(dual_map(rdual[k + 1], rdual[k], rd[k]));

        // embedding g -> (R_0)* through the bidual
        DualModule bidual = dual_star(gdual.mod, a);
        Matrix ev = evaluation_map(g, gdual, bidual);
        if (ev.rows() != ev.cols() || exactlin::rank(ev) != ev.rows())
            throw Error(ErrorCode::LiftFailed, "module is not reflexive; no complete resolution");
        // rsurj: R_0 -> g*, so its dual goes g** -> (R_0)*
        Matrix surj_dual = dual_map(rdual[0], bidual, rsurj);
        Matrix embed = surj_dual * ev;

        ResolutionWindow w;
        w.alg = a;
        w.lo = -static_cast<int>(n);
        w.hi = static_cast<int>(n);
        for (std::size_t k = n; k >= 1; --k) w.modules.push_back(left_mods[k - 1]);
        for (std::size_t k = 0; k <= n; ++k) w.modules.push_back(right_mods[k]);
        for (std::size_t k = n; k >= 2; --k) w.differentials.push_back(left_diffs[k - 2]);
        w.differentials.push_back(embed * surj_g);
        for (std::size_t k = 0; k < n; ++k) w.differentials.push_back(right_diffs[k]);

        WindowChecks checks = verify_window(w);
        if (!checks.ok())
            throw Error(ErrorCode::LiftFailed, "complete resolution window failed: " + checks.detail);
        return {std::move(w), std::move(embed), std::move(surj_g)};
    }
}

ResolutionWindow complete_resolution_window(const AlgebraPtr& lambda, const repmod::Bimodule& m,
                                            const TriangularCert& cert, std::size_t n) {
    if (n < 1) throw Error(ErrorCode::WindowTooShort, "window half-width must be at least 1");
    const auto& ts = lambda->triangular_structure();
    if (!ts) throw Error(ErrorCode::ParseError, "algebra is not a triangular extension");
    const AlgebraPtr& a = ts->a;
    const AlgebraPtr& b = ts->b;
    const Field& f = lambda->field();

    // hypothesis: M projective on both sides
    if (!is_projective(m.as_left_module()))
        throw Error(ErrorCode::HypothesisViolated, "M is not projective as a left module");
    AlgebraPtr b_op = algebra::opposite(b);
    if (!is_projective(m.as_right_op_module(b_op)))
        throw Error(ErrorCode::HypothesisViolated, "M is not projective as a right module");

    repmod::TensorResult tensor_y = repmod::tensor_bimodule(m, cert.y);
    if (cert.phi.cols() != tensor_y.module.dim() || cert.phi.rows() != cert.x.dim())
        throw Error(ErrorCode::DimensionMismatch, "phi has the wrong shape");
    if (!exactlin::is_injective(cert.phi))
        throw Error(ErrorCode::LiftFailed, "phi is not injective");

    repmod::QuotientModule coker = repmod::quotient_module(cert.x, cert.phi);
    // When the X-side algebra is itself a path algebra, the split of Coker phi
    // must again have an injective comparison map; gate on that necessary
    // condition so a bad certificate fails at the step that breaks.
    if (a->path_structure() && a->path_structure()->q.vertex_count() >= 2) {
        repmod::Representation coker_rep = repmod::from_flat_module(coker.mod);
        repmod::SplitData split = repmod::split_top_vertex(coker_rep);
        for (const auto& comp : split.phi.components)
            if (!exactlin::is_injective(comp))
                throw Error(ErrorCode::LiftFailed,
                            "phi is not injective in the nested split of Coker phi");
    }
    BaseWindow wa = complete_window_base(a, coker.mod, n);
    BaseWindow wb = complete_window_base(b, cert.y, n);

    int lo = -static_cast<int>(n), hi = static_cast<int>(n);
    auto idx = [lo](int p) { return static_cast<std::size_t>(p - lo); };

    // M tensor Q^i and the induced differentials
    std::vector<repmod::TensorResult> mq;
    for (int p = lo; p <= hi; ++p) mq.push_back(repmod::tensor_bimodule(m, wb.window.at(p)));
    std::vector<Matrix> delta; // delta^p: MQ^p -> MQ^{p+1}
    for (int p = lo; p < hi; ++p)
        delta.push_back(repmod::tensor_map(m, mq[idx(p)], mq[idx(p + 1)], wb.window.diff(p)));

    // comparison maps sigma^p: P^p -> MQ^{p+1}
    Matrix u = repmod::tensor_map(m, tensor_y, mq[idx(0)], wb.embed); // M x Y -> MQ^0
    auto t_opt = solve_hom_right(cert.x, mq[idx(0)].module, cert.phi, u);
    if (!t_opt) throw Error(ErrorCode::LiftFailed, "no extension of M x Y -> M x Q^0 over X");
    Matrix t = *t_opt;
    Matrix eps_p = wa.embed * coker.projection; // X -> P^0

    std::vector<Matrix> sigma(static_cast<std::size_t>(hi - lo), Matrix(0, 0, f)); // sigma[idx(p)]
    {
        Matrix rhs = -(delta[idx(0)] * t);
        auto s0 = solve_hom_right(wa.window.at(0), mq[idx(1)].module, eps_p, rhs);
        if (!s0) throw Error(ErrorCode::LiftFailed, "sigma^0 has no solution");
        sigma[idx(0)] = *s0;
    }
    for (int p = 0; p + 1 < hi; ++p) {
        Matrix rhs = -(delta[idx(p + 1)] * sigma[idx(p)]);
        auto s = solve_hom_right(wa.window.at(p + 1), mq[idx(p + 2)].module, wa.window.diff(p), rhs);
        if (!s) throw Error(ErrorCode::LiftFailed, "sigma^" + std::to_string(p + 1) + " has no solution");
        sigma[idx(p + 1)] = *s;
    }
    // left of zero: sigma^{-1} = t o omega_P, then solve downward
    {
        auto omega_p = solve_hom_left(wa.window.at(-1), cert.x, coker.projection, wa.surj);
        if (!omega_p) throw Error(ErrorCode::LiftFailed, "no lift of the cover through X");
        sigma[idx(-1)] = t * *omega_p;
    }
    for (int p = -1; p - 1 >= lo; --p) {
        Matrix rhs = -(sigma[idx(p)] * wa.window.diff(p - 1));
        auto s = solve_hom_left(wa.window.at(p - 1), mq[idx(p)].module, delta[idx(p)], rhs);
        if (!s)
            throw Error(ErrorCode::LiftFailed, "sigma^" + std::to_string(p - 1) + " has no solution");
        sigma[idx(p - 1)] = *s;
    }

    // assemble the Lambda-modules and differentials
    ResolutionWindow w;
    w.alg = lambda;
    w.lo = lo;
    w.hi = hi;
    std::vector<std::size_t> xdim, ydim;
    for (int p = lo; p <= hi; ++p) {
        const AModule& pp = wa.window.at(p);
        const AModule& qq = wb.window.at(p);
        const repmod::TensorResult& tq = mq[idx(p)];
        AModule xpart = repmod::direct_sum(pp, tq.module);
        Matrix phi_l(xpart.dim(), tq.module.dim(), f);
        for (std::size_t r = 0; r < tq.module.dim(); ++r) phi_l.set(pp.dim() + r, r, f.one());
        w.modules.push_back(repmod::triangular_module(lambda, xpart, qq, phi_l, tq));
        xdim.push_back(xpart.dim());
        ydim.push_back(qq.dim());
    }
    for (int p = lo; p < hi; ++p) {
        std::size_t rows = xdim[idx(p + 1)] + ydim[idx(p + 1)];
        std::size_t cols = xdim[idx(p)] + ydim[idx(p)];
        Matrix dmat(rows, cols, f);
        const Matrix& dp = wa.window.diff(p);
        const Matrix& dq = wb.window.diff(p);
        const Matrix& dl = delta[idx(p)];
        const Matrix& sg = sigma[idx(p)];
        std::size_t p_rows = dp.rows();
        std::size_t p_cols = dp.cols();
        for (std::size_t r = 0; r < dp.rows(); ++r)
            for (std::size_t c = 0; c < dp.cols(); ++c) dmat.set(r, c, dp.at(r, c));
        for (std::size_t r = 0; r < sg.rows(); ++r)
            for (std::size_t c = 0; c < sg.cols(); ++c) dmat.set(p_rows + r, c, sg.at(r, c));
        for (std::size_t r = 0; r < dl.rows(); ++r)
            for (std::size_t c = 0; c < dl.cols(); ++c) dmat.set(p_rows + r, p_cols + c, dl.at(r, c));
        for (std::size_t r = 0; r < dq.rows(); ++r)
            for (std::size_t c = 0; c < dq.cols(); ++c)
                dmat.set(xdim[idx(p + 1)] + r, xdim[idx(p)] + c, dq.at(r, c));
        w.differentials.push_back(std::move(dmat));
    }

    WindowChecks checks = verify_window(w);
    if (!checks.ok())
        throw Error(ErrorCode::LiftFailed, "assembled window failed verification: " + checks.detail);
    return w;
}

} // namespace monicrep::homological
