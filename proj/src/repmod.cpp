#include "monicrep/repmod.hpp"

#include <algorithm>

namespace monicrep::repmod {

using quiver::Path;
using quiver::Quiver;

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a.get() == b.get()) return true;
    return a->field() == b->field() && a->dim() == b->dim() &&
           a->basis_labels() == b->basis_labels() && a->dense_table() == b->dense_table() &&
           a->unit() == b->unit();
}

AModule::AModule(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> action) {
    if (auto bad = check(alg, dim, action)) throw Error(ErrorCode::BadUnit, *bad);
    alg_ = std::move(alg);
    dim_ = dim;
    action_ = std::move(action);
}

AModule AModule::zero(AlgebraPtr alg) {
    std::vector<Matrix> act(alg->dim(), Matrix(0, 0, alg->field()));
    return unchecked(std::move(alg), 0, std::move(act));
}

AModule AModule::regular(AlgebraPtr alg) {
    std::vector<Matrix> act;
    act.reserve(alg->dim());
    const Field& f = alg->field();
    std::size_t d = alg->dim();
    for (std::size_t u = 0; u < d; ++u) {
        std::vector<Scalar> eu(d, f.zero());
        eu[u] = f.one();
        act.push_back(alg->left_mult_matrix(eu));
    }
    return unchecked(std::move(alg), d, std::move(act));
}

AModule AModule::unchecked(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> action) {
    AModule m;
    m.alg_ = std::move(alg);
    m.dim_ = dim;
    m.action_ = std::move(action);
    return m;
}

Matrix AModule::action_of(const std::vector<Scalar>& coords) const {
    const Field& f = alg_->field();
    Matrix acc(dim_, dim_, f);
    for (std::size_t u = 0; u < coords.size(); ++u) {
        if (f.is_zero(coords[u])) continue;
        acc = acc + action_[u].scaled(coords[u]);
    }
    return acc;
}

std::optional<std::string> AModule::check(const AlgebraPtr& alg, std::size_t dim,
                                          const std::vector<Matrix>& action) {
    const Field& f = alg->field();
    if (action.size() != alg->dim()) return "one action matrix per basis element required";
    for (const auto& m : action)
        if (m.rows() != dim || m.cols() != dim || m.field() != f)
            return "action matrix has wrong shape or field";
    // rho(1) = id
    Matrix unit_act(dim, dim, f);
    for (std::size_t u = 0; u < alg->dim(); ++u)
        if (!f.is_zero(alg->unit()[u])) unit_act = unit_act + action[u].scaled(alg->unit()[u]);
    if (unit_act != Matrix::identity(dim, f)) return "unit does not act as the identity";
    // rho(b_u) rho(b_v) = sum_w c(u,v,w) rho(b_w)
    for (std::size_t u = 0; u < alg->dim(); ++u)
        for (std::size_t v = 0; v < alg->dim(); ++v) {
            Matrix lhs = action[u] * action[v];
            Matrix rhs(dim, dim, f);
            for (const auto& [w, c] : alg->basis_product(u, v)) rhs = rhs + action[w].scaled(c);
            if (lhs != rhs)
                return "structure constants violated at (" + alg->basis_labels()[u] + ", " +
                       alg->basis_labels()[v] + ")";
        }
    return std::nullopt;
}

bool AModule::operator==(const AModule& o) const {
    return dim_ == o.dim_ && action_ == o.action_ && same_algebra(alg_, o.alg_);
}

AModule direct_sum(const AModule& x, const AModule& y) {
    if (!same_algebra(x.algebra(), y.algebra()))
        throw Error(ErrorCode::DimensionMismatch, "direct sum over different algebras");
    std::vector<Matrix> act;
    for (std::size_t u = 0; u < x.algebra()->dim(); ++u)
        act.push_back(exactlin::block_diag(x.action(u), y.action(u)));
    return AModule::unchecked(x.algebra(), x.dim() + y.dim(), std::move(act));
}

AModule submodule(const AModule& x, const Matrix& basis_cols) {
    std::vector<Matrix> act;
    for (std::size_t u = 0; u < x.algebra()->dim(); ++u) {
        auto sol = exactlin::solve(basis_cols, x.action(u) * basis_cols);
        if (!sol) throw std::logic_error("submodule: subspace is not invariant");
        act.push_back(std::move(*sol));
    }
    return AModule::unchecked(x.algebra(), basis_cols.cols(), std::move(act));
}

QuotientModule quotient_module(const AModule& x, const Matrix& subspace_cols) {
    auto qm = exactlin::quotient_maps(subspace_cols, x.dim());
    std::vector<Matrix> act;
    for (std::size_t u = 0; u < x.algebra()->dim(); ++u)
        act.push_back(qm.projection * x.action(u) * qm.section);
    AModule mod = AModule::unchecked(x.algebra(), qm.projection.rows(), std::move(act));
    return {std::move(mod), std::move(qm.projection), std::move(qm.section)};
}

Representation::Representation(AlgebraPtr alg, Quiver q, std::vector<AModule> branches,
                               std::vector<Matrix> arrow_maps)
    : alg_(std::move(alg)), q_(std::move(q)), branches_(std::move(branches)),
      arrow_maps_(std::move(arrow_maps)) {
    if (branches_.size() != q_.vertex_count() || arrow_maps_.size() != q_.arrows().size())
        throw Error(ErrorCode::DimensionMismatch, "representation shape does not match the quiver");
    for (std::size_t a = 0; a < arrow_maps_.size(); ++a) {
        if (arrow_maps_[a].rows() != branches_[q_.arrow(a).target].dim() ||
            arrow_maps_[a].cols() != branches_[q_.arrow(a).source].dim())
            throw Error(ErrorCode::DimensionMismatch,
                        "arrow map " + q_.arrow(a).name + " has wrong shape");
    }
}

std::size_t Representation::total_dim() const {
    std::size_t d = 0;
    for (const auto& b : branches_) d += b.dim();
    return d;
}

bool Representation::operator==(const Representation& o) const {
    return q_ == o.q_ && branches_ == o.branches_ && arrow_maps_ == o.arrow_maps_ &&
           same_algebra(alg_, o.alg_);
}

ValidationReport validate(const Representation& x) {
    for (std::size_t v = 0; v < x.q().vertex_count(); ++v) {
        if (auto bad = AModule::check(x.algebra(), x.branch(v).dim(), x.branch(v).actions()))
            return {false, "branch " + x.q().vertex_label(v) + ": " + *bad};
    }
    for (std::size_t a = 0; a < x.q().arrows().size(); ++a) {
        const auto& arrow = x.q().arrow(a);
        for (std::size_t u = 0; u < x.algebra()->dim(); ++u) {
            if (x.arrow_map(a) * x.branch(arrow.source).action(u) !=
                x.branch(arrow.target).action(u) * x.arrow_map(a))
                return {false, "arrow " + arrow.name + " is not A-linear at basis element " +
                                   x.algebra()->basis_labels()[u]};
        }
    }
    return {true, ""};
}

ValidationReport validate(const RepMorphism& f) {
    const auto& q = f.source.q();
    if (!(q == f.target.q())) return {false, "source and target quivers differ"};
    if (f.components.size() != q.vertex_count()) return {false, "wrong number of components"};
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        for (std::size_t u = 0; u < f.source.algebra()->dim(); ++u)
            if (f.components[v] * f.source.branch(v).action(u) !=
                f.target.branch(v).action(u) * f.components[v])
                return {false, "component at " + q.vertex_label(v) + " is not A-linear"};
    }
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arrow = q.arrow(a);
        if (f.components[arrow.target] * f.source.arrow_map(a) !=
            f.target.arrow_map(a) * f.components[arrow.source])
            return {false, "square at arrow " + arrow.name + " does not commute"};
    }
    return {true, ""};
}

Matrix path_map(const Representation& x, const Path& p) {
    Matrix m = Matrix::identity(x.branch(p.source()).dim(), x.algebra()->field());
    for (std::size_t a : p.arrow_indices()) m = x.arrow_map(a) * m;
    return m;
}

Representation direct_sum(const Representation& x, const Representation& y) {
    if (!(x.q() == y.q()) || !same_algebra(x.algebra(), y.algebra()))
        throw Error(ErrorCode::DimensionMismatch, "direct sum needs matching quiver and algebra");
    std::vector<AModule> branches;
    for (std::size_t v = 0; v < x.q().vertex_count(); ++v)
        branches.push_back(direct_sum(x.branch(v), y.branch(v)));
    std::vector<Matrix> arrows;
    for (std::size_t a = 0; a < x.q().arrows().size(); ++a)
        arrows.push_back(exactlin::block_diag(x.arrow_map(a), y.arrow_map(a)));
    return Representation(x.algebra(), x.q(), std::move(branches), std::move(arrows));
}

AModule to_flat_module(const Representation& x, const AlgebraPtr& lambda) {
    const auto& ps = lambda->path_structure();
    if (!ps) throw Error(ErrorCode::ParseError, "flattening needs a path algebra");
    if (!(ps->q == x.q()))
        throw Error(ErrorCode::DimensionMismatch, "representation and path algebra quivers differ");
    const Field& f = lambda->field();
    std::size_t n = x.q().vertex_count();
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + x.branch(v).dim();
    std::size_t dim = offset[n];
    std::size_t da = ps->base->dim();

    std::vector<Matrix> action;
    action.reserve(lambda->dim());
    for (std::size_t pi = 0; pi < ps->paths.size(); ++pi) {
        const Path& p = ps->paths[pi];
        Matrix xp = path_map(x, p);
        for (std::size_t u = 0; u < da; ++u) {
            Matrix act(dim, dim, f);
            Matrix block = x.branch(p.target()).action(u) * xp;
            for (std::size_t r = 0; r < block.rows(); ++r)
                for (std::size_t c = 0; c < block.cols(); ++c)
                    act.set(offset[p.target()] + r, offset[p.source()] + c, block.at(r, c));
            action.push_back(std::move(act));
        }
    }
    return AModule::unchecked(lambda, dim, std::move(action));
}

namespace {

std::vector<Scalar> lambda_coords(const AlgebraPtr& lambda, std::size_t path_idx,
                                  const std::vector<Scalar>& a_coords) {
    const auto& ps = *lambda->path_structure();
    std::vector<Scalar> v(lambda->dim(), lambda->field().zero());
    for (std::size_t u = 0; u < a_coords.size(); ++u) v[ps.basis_index(path_idx, u)] = a_coords[u];
    return v;
}

} // namespace

Matrix flat_branch_basis(const AModule& m, std::size_t vertex) {
    const auto& ps = *m.algebra()->path_structure();
    Matrix proj = m.action_of(lambda_coords(m.algebra(), ps.trivial_path_index[vertex],
                                            ps.base->unit()));
    return exactlin::column_space_basis(proj);
}

Representation from_flat_module(const AModule& m) {
    const auto& ps = m.algebra()->path_structure();
    if (!ps) throw Error(ErrorCode::ParseError, "module is not over a path algebra");
    const AlgebraPtr& a = ps->base;
    const Quiver& q = ps->q;
    std::size_t da = a->dim();
    const Field& f = a->field();

    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) bases.push_back(flat_branch_basis(m, v));

    std::vector<AModule> branches;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        std::vector<Matrix> act;
        for (std::size_t u = 0; u < da; ++u) {
            std::vector<Scalar> eu(da, f.zero());
            eu[u] = f.one();
            Matrix big = m.action_of(lambda_coords(m.algebra(), ps->trivial_path_index[v], eu));
            auto sol = exactlin::solve(bases[v], big * bases[v]);
            if (!sol) throw std::logic_error("idempotent image is not invariant");
            act.push_back(std::move(*sol));
        }
        branches.push_back(AModule::unchecked(a, bases[v].cols(), std::move(act)));
    }
    std::vector<Matrix> arrows;
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        Matrix big = m.action_of(lambda_coords(m.algebra(), ps->arrow_path_index[ai], a->unit()));
        auto sol = exactlin::solve(bases[q.arrow(ai).target], big * bases[q.arrow(ai).source]);
        if (!sol) throw std::logic_error("arrow action leaves the idempotent images");
        arrows.push_back(std::move(*sol));
    }
    return Representation(a, q, std::move(branches), std::move(arrows));
}

KernelResult kernel(const RepMorphism& f) {
    const Quiver& q = f.source.q();
    std::vector<Matrix> bases;
    std::vector<AModule> branches;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        Matrix k = exactlin::kernel_basis(f.components[v]);
        branches.push_back(submodule(f.source.branch(v), k));
        bases.push_back(std::move(k));
    }
    std::vector<Matrix> arrows;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arrow = q.arrow(a);
        auto sol = exactlin::solve(bases[arrow.target], f.source.arrow_map(a) * bases[arrow.source]);
        if (!sol) throw std::logic_error("kernel is not arrow-invariant");
        arrows.push_back(std::move(*sol));
    }
    Representation rep(f.source.algebra(), q, std::move(branches), std::move(arrows));
    RepMorphism incl{rep, f.source, std::move(bases)};
    return {std::move(rep), std::move(incl)};
}

CokernelResult cokernel(const RepMorphism& f) {
    const Quiver& q = f.target.q();
    std::vector<QuotientModule> quot;
    std::vector<AModule> branches;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        quot.push_back(quotient_module(f.target.branch(v), f.components[v]));
        branches.push_back(quot.back().mod);
    }
    std::vector<Matrix> arrows;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arrow = q.arrow(a);
        arrows.push_back(quot[arrow.target].projection * f.target.arrow_map(a) *
                         quot[arrow.source].section);
    }
    Representation rep(f.target.algebra(), q, std::move(branches), std::move(arrows));
    std::vector<Matrix> projs;
    for (auto& qm : quot) projs.push_back(std::move(qm.projection));
    RepMorphism proj{f.target, rep, std::move(projs)};
    return {std::move(rep), std::move(proj)};
}

Representation indecomposable_projective(const AModule& l, const Quiver& q, std::size_t i) {
    if (!quiver::is_acyclic(q)) throw Error(ErrorCode::CyclicQuiver, "projective needs acyclic quiver");
    const Field& f = l.algebra()->field();
    std::size_t n = q.vertex_count();
    std::vector<std::vector<Path>> paths(n);
    for (std::size_t t = 0; t < n; ++t) paths[t] = quiver::paths_between(q, i, t);

    std::vector<AModule> branches;
    for (std::size_t t = 0; t < n; ++t) {
        // path-major copies of L
        std::vector<Matrix> act(l.algebra()->dim(),
                                Matrix(paths[t].size() * l.dim(), paths[t].size() * l.dim(), f));
        for (std::size_t u = 0; u < l.algebra()->dim(); ++u) {
            for (std::size_t c = 0; c < paths[t].size(); ++c)
                for (std::size_t r = 0; r < l.dim(); ++r)
                    for (std::size_t s = 0; s < l.dim(); ++s)
                        act[u].set(c * l.dim() + r, c * l.dim() + s, l.action(u).at(r, s));
        }
        branches.push_back(AModule::unchecked(l.algebra(), paths[t].size() * l.dim(), std::move(act)));
    }
    std::vector<Matrix> arrows;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arrow = q.arrow(a);
        const auto& src = paths[arrow.source];
        const auto& dst = paths[arrow.target];
        Matrix m(dst.size() * l.dim(), src.size() * l.dim(), f);
        for (std::size_t c = 0; c < src.size(); ++c) {
            Path extended = src[c].then(q, a);
            for (std::size_t r = 0; r < dst.size(); ++r) {
                if (!(dst[r] == extended)) continue;
                for (std::size_t k = 0; k < l.dim(); ++k)
                    m.set(r * l.dim() + k, c * l.dim() + k, f.one());
            }
        }
        arrows.push_back(std::move(m));
    }
    return Representation(l.algebra(), q, std::move(branches), std::move(arrows));
}

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim,
                   std::vector<Matrix> left_action, std::vector<Matrix> right_action)
    : left_(std::move(left)), right_(std::move(right)), dim_(dim),
      left_action_(std::move(left_action)), right_action_(std::move(right_action)) {
    if (auto bad = AModule::check(left_, dim_, left_action_))
        throw Error(ErrorCode::BadBimodule, "left action: " + *bad);
    // right action is a homomorphism from the opposite algebra
    const Field& f = right_->field();
    if (right_action_.size() != right_->dim())
        throw Error(ErrorCode::BadBimodule, "one right action matrix per basis element required");
    Matrix unit_act(dim_, dim_, f);
    for (std::size_t u = 0; u < right_->dim(); ++u)
        if (!f.is_zero(right_->unit()[u])) unit_act = unit_act + right_action_[u].scaled(right_->unit()[u]);
    if (unit_act != Matrix::identity(dim_, f))
        throw Error(ErrorCode::BadBimodule, "right unit does not act as the identity");
    for (std::size_t u = 0; u < right_->dim(); ++u)
        for (std::size_t v = 0; v < right_->dim(); ++v) {
            Matrix lhs = right_action_[u] * right_action_[v];
            Matrix rhs(dim_, dim_, f);
            for (const auto& [w, c] : right_->basis_product(v, u))
                rhs = rhs + right_action_[w].scaled(c);
            if (lhs != rhs) throw Error(ErrorCode::BadBimodule, "right action violates the table");
        }
    for (std::size_t u = 0; u < left_->dim(); ++u)
        for (std::size_t v = 0; v < right_->dim(); ++v)
            if (left_action_[u] * right_action_[v] != right_action_[v] * left_action_[u])
                throw Error(ErrorCode::BadBimodule, "left and right actions do not commute");
}

AModule Bimodule::as_left_module() const { return AModule::unchecked(left_, dim_, left_action_); }

AModule Bimodule::as_right_op_module(const AlgebraPtr& right_op) const {
    return AModule::unchecked(right_op, dim_, right_action_);
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
    const Field& f = a->field();
    std::vector<Matrix> left, right;
    for (std::size_t u = 0; u < a->dim(); ++u) {
        std::vector<Scalar> eu(a->dim(), f.zero());
        eu[u] = f.one();
        left.push_back(a->left_mult_matrix(eu));
        right.push_back(a->right_mult_matrix(eu));
    }
    return Bimodule(a, a, a->dim(), std::move(left), std::move(right));
}

Bimodule bimodule_from_structure(const algebra::TriangularStructure& t) {
    return Bimodule(t.a, t.b, t.mdim, t.m_left_action, t.m_right_action);
}

TensorResult tensor_bimodule(const Bimodule& m, const AModule& y) {
    if (!same_algebra(m.right_algebra(), y.algebra()))
        throw Error(ErrorCode::DimensionMismatch, "tensor over mismatched algebras");
    const Field& f = m.left_algebra()->field();
    std::size_t dm = m.dim(), dy = y.dim();
    std::size_t big = dm * dy;
    // balancing subspace: images of R_v x I - I x rho(v), m-major coordinates
    std::vector<Matrix> gens;
    Matrix idm = Matrix::identity(dm, f), idy = Matrix::identity(dy, f);
    for (std::size_t v = 0; v < m.right_algebra()->dim(); ++v)
        gens.push_back(exactlin::kron(m.right_action(v), idy) - exactlin::kron(idm, y.action(v)));
    Matrix span = gens.empty() ? Matrix(big, 0, f) : exactlin::hstack(gens, big, f);
    auto qm = exactlin::quotient_maps(span, big);
    std::vector<Matrix> act;
    for (std::size_t u = 0; u < m.left_algebra()->dim(); ++u)
        act.push_back(qm.projection * exactlin::kron(m.left_action(u), idy) * qm.section);
    AModule mod = AModule::unchecked(m.left_algebra(), qm.projection.rows(), std::move(act));
    return {std::move(mod), std::move(qm.projection), std::move(qm.section)};
}

Matrix tensor_map(const Bimodule& m, const TensorResult& src, const TensorResult& dst,
                  const Matrix& f) {
    Matrix idm = Matrix::identity(m.dim(), m.left_algebra()->field());
    return dst.projection * exactlin::kron(idm, f) * src.section;
}

SplitData split_top_vertex(const Representation& x) {
    const Quiver& q = x.q();
    if (!quiver::is_acyclic(q) || !quiver::is_topologically_labeled(q))
        throw Error(ErrorCode::CyclicQuiver, "split needs a topologically labeled acyclic quiver");
    std::size_t n = q.vertex_count();
    if (n < 2) throw Error(ErrorCode::DimensionMismatch, "split needs at least two vertices");
    std::size_t top = n - 1;

    std::vector<std::string> labels(q.vertex_labels().begin(), q.vertex_labels().end() - 1);
    std::vector<quiver::Arrow> arrows_prime;
    std::vector<std::size_t> arrow_back; // Q' arrow -> Q arrow index
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        if (q.arrow(a).source == top || q.arrow(a).target == top) continue;
        arrow_back.push_back(a);
        arrows_prime.push_back(q.arrow(a));
    }
    Quiver qp(labels, arrows_prime);

    std::vector<AModule> branches(x.branches().begin(), x.branches().end() - 1);
    std::vector<Matrix> maps;
    for (std::size_t a : arrow_back) maps.push_back(x.arrow_map(a));
    Representation restricted(x.algebra(), qp, branches, std::move(maps));

    const AModule& xn = x.branch(top);
    const Field& f = x.algebra()->field();
    std::vector<std::vector<Path>> paths(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) paths[i] = quiver::paths_between(q, top, i);

    std::vector<AModule> dom_branches;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t copies = paths[i].size();
        std::vector<Matrix> act(x.algebra()->dim(), Matrix(copies * xn.dim(), copies * xn.dim(), f));
        for (std::size_t u = 0; u < x.algebra()->dim(); ++u)
            for (std::size_t c = 0; c < copies; ++c)
                for (std::size_t r = 0; r < xn.dim(); ++r)
                    for (std::size_t s = 0; s < xn.dim(); ++s)
                        act[u].set(c * xn.dim() + r, c * xn.dim() + s, xn.action(u).at(r, s));
        dom_branches.push_back(AModule::unchecked(x.algebra(), copies * xn.dim(), std::move(act)));
    }
    std::vector<Matrix> dom_arrows;
    for (std::size_t pa = 0; pa < qp.arrows().size(); ++pa) {
        const auto& arrow = qp.arrow(pa);
        const auto& src = paths[arrow.source];
        const auto& dst = paths[arrow.target];
        Matrix mmat(dst.size() * xn.dim(), src.size() * xn.dim(), f);
        for (std::size_t c = 0; c < src.size(); ++c) {
            Path extended = src[c].then(q, arrow_back[pa]);
            for (std::size_t r = 0; r < dst.size(); ++r) {
                if (!(dst[r] == extended)) continue;
                for (std::size_t k = 0; k < xn.dim(); ++k)
                    mmat.set(r * xn.dim() + k, c * xn.dim() + k, f.one());
            }
        }
        dom_arrows.push_back(std::move(mmat));
    }
    Representation phi_domain(x.algebra(), qp, std::move(dom_branches), std::move(dom_arrows));

    std::vector<Matrix> phi_comps;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<Matrix> blocks;
        for (const Path& p : paths[i]) blocks.push_back(path_map(x, p));
        phi_comps.push_back(blocks.empty() ? Matrix(x.branch(i).dim(), 0, f)
                                           : exactlin::hstack(blocks, x.branch(i).dim(), f));
    }
    RepMorphism phi{phi_domain, restricted, std::move(phi_comps)};
    return {std::move(qp), std::move(restricted), xn, std::move(phi_domain), std::move(phi),
            std::move(paths)};
}

Bimodule radical_path_bimodule(const AlgebraPtr& lambda_prime, const AlgebraPtr& a,
                               const Quiver& q_full) {
    if (!quiver::is_topologically_labeled(q_full) || !quiver::is_acyclic(q_full))
        throw Error(ErrorCode::CyclicQuiver, "needs a topologically labeled acyclic quiver");
    const auto& ps = lambda_prime->path_structure();
    if (!ps) throw Error(ErrorCode::ParseError, "left algebra must be a path algebra");
    const Field& f = a->field();
    std::size_t n = q_full.vertex_count();
    std::size_t top = n - 1;
    std::size_t da = a->dim();

    // global path list: vertex-major, then the deterministic path order
    std::vector<Path> plist;
    std::vector<std::size_t> vertex_of;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (const Path& p : quiver::paths_between(q_full, top, i)) {
            plist.push_back(p);
            vertex_of.push_back(i);
        }
    std::size_t dim = plist.size() * da;

    // right A-action: (b_u x p) . b_w = (b_u b_w) x p
    std::vector<Matrix> right(a->dim(), Matrix(dim, dim, f));
    for (std::size_t w = 0; w < a->dim(); ++w) {
        std::vector<Scalar> ew(da, f.zero());
        ew[w] = f.one();
        Matrix rm = a->right_mult_matrix(ew);
        for (std::size_t pi = 0; pi < plist.size(); ++pi)
            for (std::size_t r = 0; r < da; ++r)
                for (std::size_t c = 0; c < da; ++c)
                    right[w].set(pi * da + r, pi * da + c, rm.at(r, c));
    }
    // left Lambda'-action: (b_v x q') . (b_u x p) = (b_v b_u) x (q' o p)
    std::vector<Matrix> left(lambda_prime->dim(), Matrix(dim, dim, f));
    for (std::size_t qi = 0; qi < ps->paths.size(); ++qi) {
        const Path& qpath = ps->paths[qi];
        for (std::size_t v = 0; v < da; ++v) {
            std::vector<Scalar> ev(da, f.zero());
            ev[v] = f.one();
            Matrix lm = a->left_mult_matrix(ev);
            Matrix& dest = left[ps->basis_index(qi, v)];
            for (std::size_t pi = 0; pi < plist.size(); ++pi) {
                if (vertex_of[pi] != qpath.source()) continue;
                // compose inside the full quiver: the Q' path lifts arrow-wise
                Path composed = plist[pi];
                bool ok = true;
                for (std::size_t ar : qpath.arrow_indices()) {
                    const auto& arr = ps->q.arrow(ar);
                    // find the same-named arrow in the full quiver
                    std::size_t full_idx = q_full.arrow_index(arr.name);
                    if (q_full.arrow(full_idx).source != composed.target()) {
                        ok = false;
                        break;
                    }
                    composed = composed.then(q_full, full_idx);
                }
                if (!ok) continue;
                std::size_t target_pi = plist.size();
                for (std::size_t k = 0; k < plist.size(); ++k)
                    if (plist[k] == composed) {
                        target_pi = k;
                        break;
                    }
                if (target_pi == plist.size()) continue;
                for (std::size_t r = 0; r < da; ++r)
                    for (std::size_t c = 0; c < da; ++c)
                        dest.set(target_pi * da + r, pi * da + c, lm.at(r, c));
            }
        }
    }
    return Bimodule(lambda_prime, a, dim, std::move(left), std::move(right));
}

AModule triangular_module(const AlgebraPtr& lambda, const AModule& xa, const AModule& yb,
                          const Matrix& phi, const TensorResult& tensor) {
    const auto& ts = lambda->triangular_structure();
    if (!ts) throw Error(ErrorCode::ParseError, "algebra is not a triangular extension");
    const Field& f = lambda->field();
    std::size_t dx = xa.dim(), dy = yb.dim();
    std::size_t dim = dx + dy;
    std::vector<Matrix> action;
    action.reserve(lambda->dim());
    auto embed = [&](const Matrix& xblock, const Matrix& yblock, const Matrix& cross) {
        Matrix m(dim, dim, f);
        for (std::size_t r = 0; r < dx; ++r)
            for (std::size_t c = 0; c < dx; ++c) m.set(r, c, xblock.at(r, c));
        for (std::size_t r = 0; r < dy; ++r)
            for (std::size_t c = 0; c < dy; ++c) m.set(dx + r, dx + c, yblock.at(r, c));
        for (std::size_t r = 0; r < dx; ++r)
            for (std::size_t c = 0; c < dy; ++c) m.set(r, dx + c, cross.at(r, c));
        return m;
    };
    Matrix zx(dx, dx, f), zy(dy, dy, f), zc(dx, dy, f);
    for (std::size_t u = 0; u < ts->a->dim(); ++u) action.push_back(embed(xa.action(u), zy, zc));
    for (std::size_t j = 0; j < ts->mdim; ++j) {
        // m_j sends the Y-part through phi(m_j tensor -)
        Matrix inj(ts->mdim * dy, dy, f);
        for (std::size_t c = 0; c < dy; ++c) inj.set(j * dy + c, c, f.one());
        Matrix cross = phi * tensor.projection * inj;
        action.push_back(embed(zx, zy, cross));
    }
    for (std::size_t v = 0; v < ts->b->dim(); ++v) action.push_back(embed(zx, yb.action(v), zc));
    return AModule::unchecked(lambda, dim, std::move(action));
}

} // namespace monicrep::repmod

namespace monicrep::algebra {

AlgebraPtr triangular_extension(AlgebraPtr a, AlgebraPtr b, const repmod::Bimodule& m) {
    if (!repmod::same_algebra(a, m.left_algebra()) || !repmod::same_algebra(b, m.right_algebra()))
        throw Error(ErrorCode::BadBimodule, "bimodule does not match the factors");
    const Field& f = a->field();
    if (b->field() != f) throw Error(ErrorCode::BadBimodule, "factors over different fields");
    std::size_t da = a->dim(), dm = m.dim(), db = b->dim();
    std::size_t dim = da + dm + db;
    std::vector<std::string> labels;
    for (const auto& l : a->basis_labels()) labels.push_back("a:" + l);
    for (std::size_t j = 0; j < dm; ++j) labels.push_back("m:" + std::to_string(j));
    for (const auto& l : b->basis_labels()) labels.push_back("b:" + l);

    std::vector<std::vector<Algebra::SparseRow>> table(dim, std::vector<Algebra::SparseRow>(dim));
    for (std::size_t u = 0; u < da; ++u)
        for (std::size_t v = 0; v < da; ++v) table[u][v] = a->basis_product(u, v);
    for (std::size_t u = 0; u < db; ++u)
        for (std::size_t v = 0; v < db; ++v) {
            Algebra::SparseRow row;
            for (const auto& [w, c] : b->basis_product(u, v)) row.push_back({da + dm + w, c});
            table[da + dm + u][da + dm + v] = std::move(row);
        }
    // a * m and m * b land in the middle block
    for (std::size_t u = 0; u < da; ++u)
        for (std::size_t j = 0; j < dm; ++j) {
            Algebra::SparseRow row;
            for (std::size_t w = 0; w < dm; ++w)
                if (!f.is_zero(m.left_action(u).at(w, j))) row.push_back({da + w, m.left_action(u).at(w, j)});
            table[u][da + j] = std::move(row);
        }
    for (std::size_t j = 0; j < dm; ++j)
        for (std::size_t v = 0; v < db; ++v) {
            Algebra::SparseRow row;
            for (std::size_t w = 0; w < dm; ++w)
                if (!f.is_zero(m.right_action(v).at(w, j)))
                    row.push_back({da + w, m.right_action(v).at(w, j)});
            table[da + j][da + dm + v] = std::move(row);
        }

    std::vector<Scalar> unit(dim, f.zero());
    for (std::size_t u = 0; u < da; ++u) unit[u] = a->unit()[u];
    for (std::size_t v = 0; v < db; ++v) unit[da + dm + v] = b->unit()[v];

    std::optional<std::vector<std::vector<Scalar>>> idems;
    if (a->idempotents() && b->idempotents()) {
        std::vector<std::vector<Scalar>> list;
        for (const auto& e : *a->idempotents()) {
            std::vector<Scalar> big(dim, f.zero());
            for (std::size_t u = 0; u < da; ++u) big[u] = e[u];
            list.push_back(std::move(big));
        }
        for (const auto& e : *b->idempotents()) {
            std::vector<Scalar> big(dim, f.zero());
            for (std::size_t v = 0; v < db; ++v) big[da + dm + v] = e[v];
            list.push_back(std::move(big));
        }
        idems = std::move(list);
    }
    std::optional<Matrix> rad;
    if (a->radical_basis() && b->radical_basis()) {
        const Matrix& ra = *a->radical_basis();
        const Matrix& rb = *b->radical_basis();
        Matrix r(dim, ra.cols() + dm + rb.cols(), f);
        for (std::size_t c = 0; c < ra.cols(); ++c)
            for (std::size_t u = 0; u < da; ++u) r.set(u, c, ra.at(u, c));
        for (std::size_t j = 0; j < dm; ++j) r.set(da + j, ra.cols() + j, f.one());
        for (std::size_t c = 0; c < rb.cols(); ++c)
            for (std::size_t v = 0; v < db; ++v) r.set(da + dm + v, ra.cols() + dm + c, rb.at(v, c));
        rad = std::move(r);
    }

    auto alg = Algebra::from_structure_constants(f, std::move(labels), std::move(table),
                                                 std::move(unit), std::move(idems), std::move(rad));
    std::vector<Matrix> la, ra2;
    for (std::size_t u = 0; u < da; ++u) la.push_back(m.left_action(u));
    for (std::size_t v = 0; v < db; ++v) ra2.push_back(m.right_action(v));
    return attach_triangular_structure(alg,
                                       TriangularStructure{a, b, dm, std::move(la), std::move(ra2)});
}

} // namespace monicrep::algebra
