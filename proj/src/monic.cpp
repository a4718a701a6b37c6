#include "monicrep/monic.hpp"

#include <algorithm>

namespace monicrep::monic {

using exactlin::Field;
using exactlin::Scalar;
using quiver::Path;
using quiver::Quiver;

namespace {

std::vector<std::size_t> vertex_processing_order(const Quiver& q) {
    if (!quiver::is_acyclic(q)) {
        std::vector<std::size_t> order(q.vertex_count());
        for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
        return order;
    }
    std::vector<std::size_t> perm = quiver::topological_label(q);
    std::vector<std::size_t> order(q.vertex_count());
    for (std::size_t v = 0; v < q.vertex_count(); ++v) order[perm[v]] = v;
    return order;
}

} // namespace

MonicReport check_monic(const Representation& x) {
    const Quiver& q = x.q();
    const Field& f = x.algebra()->field();
    MonicReport report;
    for (std::size_t v : vertex_processing_order(q)) {
        MonicVertexReport vr;
        vr.vertex = q.vertex_label(v);
        std::vector<std::size_t> incoming = q.arrows_into(v);
        std::vector<Matrix> maps;
        for (std::size_t a : incoming) {
            vr.incoming_arrows.push_back(q.arrow(a).name);
            maps.push_back(x.arrow_map(a));
            vr.source_total_dim += x.branch(q.arrow(a).source).dim();
        }
        Matrix collected = exactlin::hstack(maps, x.branch(v).dim(), f);
        vr.collected_rank = exactlin::rank(collected);
        vr.collected_injective = vr.collected_rank == vr.source_total_dim;
        // (m1) and (m2), computed without reusing the collected rank
        bool m1 = true;
        for (const auto& m : maps) {
            vr.arrow_injective.push_back(exactlin::is_injective(m));
            m1 = m1 && vr.arrow_injective.back();
        }
        Matrix acc(x.branch(v).dim(), 0, f);
        vr.images_direct = true;
        for (const auto& m : maps) {
            std::size_t before = exactlin::rank(acc);
            acc = exactlin::hstack(acc, m);
            if (exactlin::rank(acc) != before + exactlin::rank(m)) vr.images_direct = false;
        }
        if (vr.collected_injective != (m1 && vr.images_direct))
            throw std::logic_error("the two monicity characterizations disagree at vertex " +
                                   vr.vertex);
        if (!vr.collected_injective && !report.first_failure) {
            std::string condition = "m2";
            if (!m1) {
                for (std::size_t k = 0; k < maps.size(); ++k)
                    if (!vr.arrow_injective[k]) {
                        condition = "m1(" + vr.incoming_arrows[k] + ")";
                        break;
                    }
            }
            Matrix ker = exactlin::kernel_basis(collected);
            Matrix witness = ker.cols() > 0 ? ker.column(0) : Matrix(collected.cols(), 0, f);
            report.first_failure = MonicFailure{vr.vertex, condition, std::move(witness)};
        }
        report.is_monic = report.is_monic && vr.collected_injective;
        report.per_vertex.push_back(std::move(vr));
    }
    return report;
}

namespace {

GPStatus combine(GPStatus a, GPStatus b) {
    if (a == GPStatus::NotGP || b == GPStatus::NotGP) return GPStatus::NotGP;
    if (a == GPStatus::GPUpToBound || b == GPStatus::GPUpToBound) return GPStatus::GPUpToBound;
    return GPStatus::GP;
}

} // namespace

ConditionGReport condition_G(const Representation& x, const GpOracle& oracle) {
    const Quiver& q = x.q();
    const Field& f = x.algebra()->field();
    ConditionGReport report;
    for (std::size_t v : vertex_processing_order(q)) {
        ConditionGVertex cv;
        cv.vertex = q.vertex_label(v);
        cv.branch = oracle.decide(x.branch(v));
        std::vector<Matrix> maps;
        for (std::size_t a : q.arrows_into(v)) maps.push_back(x.arrow_map(a));
        Matrix span = exactlin::hstack(maps, x.branch(v).dim(), f);
        cv.quotient = oracle.decide(repmod::quotient_module(x.branch(v), span).mod);

        GPStatus here = combine(cv.branch.status, cv.quotient.status);
        if (here != GPStatus::GP && report.witness.empty()) {
            const GPVerdict& bad = cv.branch.status != GPStatus::GP ? cv.branch : cv.quotient;
            report.witness = "vertex " + cv.vertex +
                             (cv.branch.status != GPStatus::GP ? " branch: " : " quotient: ") +
                             bad.witness;
        }
        report.overall = combine(report.overall, here);
        report.per_vertex.push_back(std::move(cv));
    }
    return report;
}

GPVerdict gp_decide_path_algebra(const Representation& x, const GpOracle& oracle) {
    if (!quiver::is_acyclic(x.q()))
        throw Error(ErrorCode::CyclicQuiver, "the decision needs an acyclic quiver");
    MonicReport monic = check_monic(x);
    if (!monic.is_monic) {
        const auto& fail = *monic.first_failure;
        std::string witness = "not monic at vertex " + fail.vertex + " (" + fail.condition + ")";
        return {GPStatus::NotGP, homological::GPRoute::MonicTheorem, oracle.bound(), witness};
    }
    ConditionGReport g = condition_G(x, oracle);
    switch (g.overall) {
        case GPStatus::GP:
            return {GPStatus::GP, homological::GPRoute::MonicTheorem, oracle.bound(),
                    "monic and condition (G) holds"};
        case GPStatus::NotGP:
            return {GPStatus::NotGP, homological::GPRoute::MonicTheorem, oracle.bound(),
                    "condition (G) fails: " + g.witness};
        case GPStatus::GPUpToBound:
            return {GPStatus::GPUpToBound, homological::GPRoute::MonicTheorem, oracle.bound(),
                    "monic; condition (G) only certified up to the bound: " + g.witness};
    }
    throw std::logic_error("unreachable");
}

GPVerdict gp_decide_path_algebra(const Representation& x, std::size_t bound) {
    return gp_decide_path_algebra(x, GpOracle(x.algebra(), bound));
}

TriangularDecision gp_decide_triangular(const AlgebraPtr& a, const AlgebraPtr& b,
                                        const repmod::Bimodule& m, const AModule& x,
                                        const AModule& y, const Matrix& phi, std::size_t bound) {
    if (!homological::is_projective(m.as_left_module()))
        throw Error(ErrorCode::HypothesisViolated, "M is not projective as a left A-module");
    AlgebraPtr b_op = algebra::opposite(b);
    if (!homological::is_projective(m.as_right_op_module(b_op)))
        throw Error(ErrorCode::HypothesisViolated, "M is not projective as a right B-module");

    repmod::TensorResult tensor = repmod::tensor_bimodule(m, y);
    if (phi.cols() != tensor.module.dim() || phi.rows() != x.dim())
        throw Error(ErrorCode::DimensionMismatch, "phi has the wrong shape");

    GpOracle oracle_a(a, bound);
    GpOracle oracle_b(b, bound);

    TriangularDecision out;
    out.phi_injective = exactlin::is_injective(phi);
    repmod::QuotientModule coker = repmod::quotient_module(x, phi);
    out.coker_verdict = oracle_a.decide(coker.mod);
    out.y_verdict = oracle_b.decide(y);

    if (!out.phi_injective) {
        Matrix ker = exactlin::kernel_basis(phi);
        out.verdict = {GPStatus::NotGP, homological::GPRoute::TriangularTheorem, bound,
                       "phi is not injective (kernel dimension " + std::to_string(ker.cols()) + ")"};
    } else {
        GPStatus status = combine(out.coker_verdict.status, out.y_verdict.status);
        std::string witness;
        switch (status) {
            case GPStatus::GP:
                witness = "phi injective, Coker phi GP over A, Y GP over B";
                break;
            case GPStatus::NotGP:
                witness = out.coker_verdict.status == GPStatus::NotGP
                              ? "Coker phi: " + out.coker_verdict.witness
                              : "Y: " + out.y_verdict.witness;
                break;
            case GPStatus::GPUpToBound:
                witness = "conditions certified only up to the bound";
                break;
        }
        out.verdict = {status, homological::GPRoute::TriangularTheorem, bound, witness};
    }
    if (out.verdict.status == GPStatus::GP) {
        GPVerdict vx = oracle_a.decide(x);
        GPVerdict vmy = oracle_a.decide(tensor.module);
        if (vx.exact() && vmy.exact()) {
            bool agree = (vx.status == GPStatus::GP) == (vmy.status == GPStatus::GP);
            out.last_assertion = std::string("X in GP(A): ") + (vx.status == GPStatus::GP ? "yes" : "no") +
                                 "; M x Y in GP(A): " + (vmy.status == GPStatus::GP ? "yes" : "no") +
                                 "; equivalent: " + (agree ? "yes" : "NO");
        }
    }
    return out;
}

bool top_path_images_direct(const Representation& x) {
    const Quiver& q = x.q();
    std::size_t top = q.vertex_count() - 1;
    const Field& f = x.algebra()->field();
    for (std::size_t i = 0; i + 1 < q.vertex_count(); ++i) {
        std::vector<Matrix> images;
        for (const Path& p : quiver::paths_between(q, top, i)) images.push_back(repmod::path_map(x, p));
        if (!exactlin::sum_is_direct(images, x.branch(i).dim(), f)) return false;
    }
    return true;
}

Representation coker_phi(const Representation& x) {
    if (!check_monic(x).is_monic)
        throw Error(ErrorCode::NotMonic, "coker_phi is only defined for monic representations");
    const Quiver& q = x.q();
    if (!quiver::is_acyclic(q) || !quiver::is_topologically_labeled(q))
        throw Error(ErrorCode::CyclicQuiver, "coker_phi needs a topologically labeled quiver");
    if (!top_path_images_direct(x))
        throw std::logic_error("top path images of a monic representation must be direct");

    // vertexwise quotient by the direct sum of the top-path images, with the
    // arrow maps induced on the quotients
    std::size_t top = q.vertex_count() - 1;
    const Field& f = x.algebra()->field();
    std::vector<std::string> labels(q.vertex_labels().begin(), q.vertex_labels().end() - 1);
    std::vector<quiver::Arrow> arrows_prime;
    std::vector<std::size_t> arrow_back;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        if (q.arrow(a).source == top || q.arrow(a).target == top) continue;
        arrow_back.push_back(a);
        arrows_prime.push_back(q.arrow(a));
    }
    Quiver qp(labels, arrows_prime);

    std::vector<repmod::QuotientModule> quot;
    std::vector<AModule> branches;
    for (std::size_t i = 0; i + 1 < q.vertex_count(); ++i) {
        std::vector<Matrix> images;
        for (const Path& p : quiver::paths_between(q, top, i))
            images.push_back(repmod::path_map(x, p));
        Matrix span = exactlin::hstack(images, x.branch(i).dim(), f);
        quot.push_back(repmod::quotient_module(x.branch(i), span));
        branches.push_back(quot.back().mod);
    }
    std::vector<Matrix> maps;
    for (std::size_t pa = 0; pa < qp.arrows().size(); ++pa) {
        const auto& arrow = qp.arrow(pa);
        maps.push_back(quot[arrow.target].projection * x.arrow_map(arrow_back[pa]) *
                       quot[arrow.source].section);
    }
    return Representation(x.algebra(), qp, std::move(branches), std::move(maps));
}

std::pair<bool, bool> phi_injectivity_criterion(const Representation& x) {
    repmod::SplitData split = repmod::split_top_vertex(x);
    for (std::size_t a = 0; a < split.q_prime.arrows().size(); ++a)
        if (!exactlin::is_injective(split.restricted.arrow_map(a)))
            throw Error(ErrorCode::HypothesisViolated,
                        "arrow " + split.q_prime.arrow(a).name + " of Q' is not injective");
    bool direct_route = true;
    for (const auto& comp : split.phi.components)
        direct_route = direct_route && exactlin::is_injective(comp);
    // the criterion side: every arrow map injective and path images direct
    bool rhs = top_path_images_direct(x);
    for (std::size_t a = 0; a < x.q().arrows().size(); ++a)
        rhs = rhs && exactlin::is_injective(x.arrow_map(a));
    return {direct_route, rhs};
}

ProjectivesMonicReport projectives_monic_bound_quiver(const AlgebraPtr& a, std::size_t bound) {
    const auto& pres = a->presentation();
    const auto& paths = a->basis_paths();
    if (!pres || !paths)
        throw Error(ErrorCode::ParseError, "algebra carries no bound quiver presentation");
    const Quiver& q = pres->q;
    const Field& f = a->field();
    AlgebraPtr k = algebra::field_algebra(f);

    ProjectivesMonicReport report;
    report.hereditary = algebra::classify(a, bound).hereditary;
    for (std::size_t j = 0; j < q.vertex_count(); ++j) {
        // branches e_t A e_j: basis paths from j to t
        std::vector<std::vector<std::size_t>> branch_idx(q.vertex_count());
        for (std::size_t bi = 0; bi < paths->size(); ++bi)
            if ((*paths)[bi].source() == j) branch_idx[(*paths)[bi].target()].push_back(bi);
        std::vector<repmod::AModule> branches;
        for (std::size_t t = 0; t < q.vertex_count(); ++t) {
            std::size_t d = branch_idx[t].size();
            branches.push_back(repmod::AModule::unchecked(k, d, {Matrix::identity(d, f)}));
        }
        std::vector<Matrix> arrows;
        for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
            const auto& arrow = q.arrow(ai);
            const auto& src = branch_idx[arrow.source];
            const auto& dst = branch_idx[arrow.target];
            // left multiplication by the arrow, in the quotient algebra
            std::size_t arrow_basis = paths->size();
            for (std::size_t bi = 0; bi < paths->size(); ++bi)
                if ((*paths)[bi].length() == 1 && (*paths)[bi].arrow_indices()[0] == ai)
                    arrow_basis = bi;
            Matrix mat(dst.size(), src.size(), f);
            if (arrow_basis < paths->size()) {
                for (std::size_t c = 0; c < src.size(); ++c) {
                    const auto& prod = a->basis_product(arrow_basis, src[c]);
                    for (const auto& [w, coeff] : prod) {
                        for (std::size_t r = 0; r < dst.size(); ++r)
                            if (dst[r] == w) mat.set(r, c, coeff);
                    }
                }
            }
            arrows.push_back(std::move(mat));
        }
        Representation pj(k, q, std::move(branches), std::move(arrows));
        bool monic = check_monic(pj).is_monic;
        report.per_projective.push_back({q.vertex_label(j), monic});
        report.projectives_monic = report.projectives_monic && monic;
    }
    return report;
}

SplitTriangularView triangular_view_of_split(const Representation& x) {
    repmod::SplitData split = repmod::split_top_vertex(x);
    const AlgebraPtr& a = x.algebra();
    const Field& f = a->field();
    AlgebraPtr lambda_prime = algebra::path_algebra_over(a, split.q_prime);
    repmod::Bimodule p = repmod::radical_path_bimodule(lambda_prime, a, x.q());
    AModule x_flat = repmod::to_flat_module(split.restricted, lambda_prime);
    const AModule& y = split.top_branch;

    repmod::TensorResult tensor = repmod::tensor_bimodule(p, y);
    // canonical map P tensor_k X_n -> flat(phi domain):
    // (b_u x path) x v  |->  slot(path), rho(b_u) v
    std::size_t da = a->dim(), dy = y.dim();
    std::size_t slots = p.dim() / da;
    Matrix g(slots * dy, p.dim() * dy, f);
    for (std::size_t s = 0; s < slots; ++s)
        for (std::size_t u = 0; u < da; ++u) {
            std::vector<Scalar> eu(da, f.zero());
            eu[u] = f.one();
            Matrix act = y.action_of(eu);
            for (std::size_t c = 0; c < dy; ++c)
                for (std::size_t r = 0; r < dy; ++r)
                    g.set(s * dy + r, (s * da + u) * dy + c, act.at(r, c));
        }
    // flat phi: block diagonal of the vertexwise components
    Matrix phi_flat(0, 0, f);
    for (const auto& comp : split.phi.components) phi_flat = exactlin::block_diag(phi_flat, comp);
    Matrix phi = phi_flat * g * tensor.section;
    return {std::move(lambda_prime), std::move(p), std::move(x_flat), y, std::move(phi)};
}

} // namespace monicrep::monic
