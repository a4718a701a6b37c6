#include "monicrep/algebra.hpp"

#include <algorithm>
#include <map>

namespace monicrep::algebra {

using quiver::Path;
using quiver::Quiver;

std::size_t PathAlgebraStructure::basis_index(std::size_t path_idx, std::size_t base_idx) const {
    return path_idx * base->dim() + base_idx;
}

std::size_t PathAlgebraStructure::path_index(const Path& p) const {
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (paths[i] == p) return i;
    throw Error(ErrorCode::ParseError, "path is not a basis path");
}

namespace {

Algebra::SparseRow normalize_row(const Field& f, Algebra::SparseRow row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Algebra::SparseRow out;
    for (auto& [w, c] : row) {
        if (!out.empty() && out.back().first == w)
            out.back().second = f.add(out.back().second, c);
        else
            out.push_back({w, c});
    }
    std::erase_if(out, [&](const auto& e) { return f.is_zero(e.second); });
    return out;
}

void accumulate(const Field& f, std::vector<Scalar>& acc, const Algebra::SparseRow& row,
                const Scalar& coeff) {
    for (const auto& [w, c] : row) acc[w] = f.add(acc[w], f.mul(coeff, c));
}

} // namespace

AlgebraPtr Algebra::from_structure_constants(
    const Field& f, std::vector<std::string> basis_labels,
    std::vector<std::vector<SparseRow>> table, std::vector<Scalar> unit,
    std::optional<std::vector<std::vector<Scalar>>> idempotents, std::optional<Matrix> radical) {
    auto alg = std::shared_ptr<Algebra>(new Algebra(f));
    alg->dim_ = basis_labels.size();
    alg->labels_ = std::move(basis_labels);
    if (table.size() != alg->dim_)
        throw Error(ErrorCode::DimensionMismatch, "structure constant table has wrong size");
    for (auto& row : table) {
        if (row.size() != alg->dim_)
            throw Error(ErrorCode::DimensionMismatch, "structure constant table has wrong size");
        for (auto& cell : row) {
            for (auto& [w, c] : cell)
                if (w >= alg->dim_)
                    throw Error(ErrorCode::DimensionMismatch, "structure constant index out of range");
            cell = normalize_row(f, cell);
        }
    }
    alg->table_ = std::move(table);
    if (unit.size() != alg->dim_) throw Error(ErrorCode::BadUnit, "unit vector has wrong length");
    alg->unit_ = std::move(unit);
    alg->idempotents_ = std::move(idempotents);
    alg->radical_ = std::move(radical);
    alg->validate();
    return alg;
}

std::vector<Scalar> Algebra::mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw Error(ErrorCode::DimensionMismatch, "algebra element has wrong length");
    std::vector<Scalar> acc(dim_, field_.zero());
    for (std::size_t u = 0; u < dim_; ++u) {
        if (field_.is_zero(x[u])) continue;
        for (std::size_t v = 0; v < dim_; ++v) {
            if (field_.is_zero(y[v])) continue;
            accumulate(field_, acc, table_[u][v], field_.mul(x[u], y[v]));
        }
    }
    return acc;
}

Matrix Algebra::left_mult_matrix(const std::vector<Scalar>& x) const {
    Matrix m(dim_, dim_, field_);
    for (std::size_t v = 0; v < dim_; ++v) {
        std::vector<Scalar> col(dim_, field_.zero());
        for (std::size_t u = 0; u < dim_; ++u) {
            if (field_.is_zero(x[u])) continue;
            accumulate(field_, col, table_[u][v], x[u]);
        }
        for (std::size_t w = 0; w < dim_; ++w) m.set(w, v, col[w]);
    }
    return m;
}

Matrix Algebra::right_mult_matrix(const std::vector<Scalar>& x) const {
    Matrix m(dim_, dim_, field_);
    for (std::size_t u = 0; u < dim_; ++u) {
        std::vector<Scalar> col(dim_, field_.zero());
        for (std::size_t v = 0; v < dim_; ++v) {
            if (field_.is_zero(x[v])) continue;
            accumulate(field_, col, table_[u][v], x[v]);
        }
        for (std::size_t w = 0; w < dim_; ++w) m.set(w, u, col[w]);
    }
    return m;
}

std::vector<std::vector<std::vector<Scalar>>> Algebra::dense_table() const {
    std::vector<std::vector<std::vector<Scalar>>> t(
        dim_, std::vector<std::vector<Scalar>>(dim_, std::vector<Scalar>(dim_, field_.zero())));
    for (std::size_t u = 0; u < dim_; ++u)
        for (std::size_t v = 0; v < dim_; ++v)
            for (const auto& [w, c] : table_[u][v]) t[u][v][w] = c;
    return t;
}

void Algebra::validate() const {
    const Field& f = field_;
    // unit axiom
    for (std::size_t v = 0; v < dim_; ++v) {
        std::vector<Scalar> ev(dim_, f.zero());
        ev[v] = f.one();
        if (mul(unit_, ev) != ev || mul(ev, unit_) != ev)
            throw Error(ErrorCode::BadUnit, "unit fails on basis element " + labels_[v]);
    }
    // associativity on basis triples, sparse
    for (std::size_t u = 0; u < dim_; ++u) {
        for (std::size_t v = 0; v < dim_; ++v) {
            const SparseRow& uv = table_[u][v];
            for (std::size_t w = 0; w < dim_; ++w) {
                std::vector<Scalar> lhs(dim_, f.zero());
                for (const auto& [z, c] : uv) accumulate(f, lhs, table_[z][w], c);
                std::vector<Scalar> rhs(dim_, f.zero());
                for (const auto& [z, c] : table_[v][w]) accumulate(f, rhs, table_[u][z], c);
                if (lhs != rhs)
                    throw Error(ErrorCode::NotAssociative,
                                "(" + labels_[u] + "*" + labels_[v] + ")*" + labels_[w] +
                                    " != " + labels_[u] + "*(" + labels_[v] + "*" + labels_[w] + ")");
            }
        }
    }
    if (idempotents_) {
        std::vector<Scalar> total(dim_, f.zero());
        for (std::size_t i = 0; i < idempotents_->size(); ++i) {
            const auto& ei = (*idempotents_)[i];
            if (ei.size() != dim_) throw Error(ErrorCode::BadIdempotents, "idempotent length");
            if (mul(ei, ei) != ei)
                throw Error(ErrorCode::BadIdempotents, "element " + std::to_string(i) + " not idempotent");
            for (std::size_t j = 0; j < idempotents_->size(); ++j) {
                if (i == j) continue;
                std::vector<Scalar> prod = mul(ei, (*idempotents_)[j]);
                for (const auto& s : prod)
                    if (!f.is_zero(s))
                        throw Error(ErrorCode::BadIdempotents, "idempotents not orthogonal");
            }
            for (std::size_t k = 0; k < dim_; ++k) total[k] = f.add(total[k], ei[k]);
        }
        if (total != unit_) throw Error(ErrorCode::BadIdempotents, "idempotents do not sum to 1");
    }
    if (radical_) {
        if (radical_->rows() != dim_) throw Error(ErrorCode::BadRadical, "radical basis shape");
        Matrix r = exactlin::column_space_basis(*radical_);
        std::size_t rdim = r.cols();
        // two-sided ideal
        for (std::size_t u = 0; u < dim_; ++u) {
            std::vector<Scalar> eu(dim_, f.zero());
            eu[u] = f.one();
            Matrix lm = left_mult_matrix(eu) * r;
            Matrix rm = right_mult_matrix(eu) * r;
            if (exactlin::rank(exactlin::hstack(r, lm)) != rdim ||
                exactlin::rank(exactlin::hstack(r, rm)) != rdim)
                throw Error(ErrorCode::BadRadical, "radical is not a two-sided ideal");
        }
        // nilpotency by powering
        Matrix power = r;
        while (power.cols() > 0) {
            std::vector<Matrix> prods;
            for (std::size_t i = 0; i < power.cols(); ++i)
                for (std::size_t j = 0; j < r.cols(); ++j) {
                    std::vector<Scalar> x(dim_), y(dim_);
                    for (std::size_t k = 0; k < dim_; ++k) {
                        x[k] = power.at(k, i);
                        y[k] = r.at(k, j);
                    }
                    std::vector<Scalar> p = mul(x, y);
                    Matrix col(dim_, 1, f);
                    for (std::size_t k = 0; k < dim_; ++k) col.set(k, 0, p[k]);
                    prods.push_back(std::move(col));
                }
            Matrix next = prods.empty() ? Matrix(dim_, 0, f)
                                        : exactlin::column_space_basis(
                                              exactlin::hstack(prods, dim_, f));
            if (next.cols() >= power.cols() && next.cols() > 0)
                throw Error(ErrorCode::BadRadical, "radical is not nilpotent");
            power = std::move(next);
        }
    }
}

AlgebraPtr attach_presentation(AlgebraPtr a, BoundQuiverPresentation p,
                               std::optional<std::vector<quiver::Path>> basis_paths) {
    auto copy = std::shared_ptr<Algebra>(new Algebra(*a));
    copy->presentation_ = std::move(p);
    copy->basis_paths_ = std::move(basis_paths);
    return copy;
}

AlgebraPtr field_algebra(const Field& f) {
    std::vector<std::vector<Algebra::SparseRow>> table(1, std::vector<Algebra::SparseRow>(1));
    table[0][0] = {{0, f.one()}};
    std::vector<Scalar> unit = {f.one()};
    std::vector<std::vector<Scalar>> idems = {unit};
    return Algebra::from_structure_constants(f, {"1"}, std::move(table), std::move(unit),
                                             std::move(idems), Matrix(1, 0, f));
}

AlgebraPtr attach_path_structure(AlgebraPtr a, PathAlgebraStructure p) {
    auto copy = std::shared_ptr<Algebra>(new Algebra(*a));
    copy->path_structure_ = std::move(p);
    return copy;
}

AlgebraPtr attach_triangular_structure(AlgebraPtr a, TriangularStructure t) {
    auto copy = std::shared_ptr<Algebra>(new Algebra(*a));
    copy->tri_structure_ = std::move(t);
    return copy;
}

AlgebraPtr truncated_polynomial(const Field& f, std::size_t n) {
    if (n < 1) throw Error(ErrorCode::ParseError, "truncated polynomial algebra needs n >= 1");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    std::vector<std::vector<Algebra::SparseRow>> table(n, std::vector<Algebra::SparseRow>(n));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u + v < n) table[u][v] = {{u + v, f.one()}};
    std::vector<Scalar> unit(n, f.zero());
    unit[0] = f.one();
    std::vector<std::vector<Scalar>> idems = {unit};
    Matrix rad(n, n - 1, f);
    for (std::size_t i = 1; i < n; ++i) rad.set(i, i - 1, f.one());
    auto alg = Algebra::from_structure_constants(f, std::move(labels), std::move(table),
                                                 std::move(unit), std::move(idems), std::move(rad));
    // loop with relation x^n, so the bound-quiver machinery can cross-check
    Quiver loop({"1"}, {{"x", 0, 0}});
    std::vector<Path> basis_paths;
    basis_paths.push_back(Path::trivial(loop, 0));
    for (std::size_t i = 1; i < n; ++i) basis_paths.push_back(Path(loop, std::vector<std::size_t>(i, 0)));
    if (n >= 2) {
        std::vector<std::size_t> seq(n, 0);
        quiver::RelationElement rel(loop, {{f.one(), Path(loop, seq)}});
        return attach_presentation(alg, BoundQuiverPresentation{loop, {rel}, n}, std::move(basis_paths));
    }
    return attach_presentation(alg, BoundQuiverPresentation{loop, {}, 1}, std::move(basis_paths));
}

namespace {

// All paths of the quiver with length <= max_len (every source), in the order
// (length, arrow-name sequence, source vertex).
std::vector<Path> all_paths_up_to(const Quiver& q, std::size_t max_len) {
    std::vector<Path> out;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        std::vector<Path> stack = {Path::trivial(q, v)};
        while (!stack.empty()) {
            Path cur = stack.back();
            stack.pop_back();
            out.push_back(cur);
            if (cur.length() < max_len)
                for (std::size_t a : q.arrows_out_of(cur.target())) stack.push_back(cur.then(q, a));
        }
    }
    std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        auto an = a.arrow_names(q), bn = b.arrow_names(q);
        if (an != bn) return an < bn;
        return a.source() < b.source();
    });
    return out;
}

std::size_t find_path(const std::vector<Path>& paths, const Path& p) {
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (paths[i] == p) return i;
    throw Error(ErrorCode::ParseError, "path not in enumeration");
}

} // namespace

AlgebraPtr bound_quiver_algebra(const BoundQuiverPresentation& pres, const Field& f) {
    const Quiver& q = pres.q;
    const std::size_t n_bound = pres.nilpotency_bound;
    if (n_bound < 1) throw Error(ErrorCode::NotAdmissible, "nilpotency bound must be >= 1");
    std::size_t max_term = 2;
    for (const auto& rel : pres.relations)
        for (const auto& term : rel.terms) {
            if (term.path.length() < 2)
                throw Error(ErrorCode::NotAdmissible, "relation term of length < 2");
            max_term = std::max(max_term, term.path.length());
        }
    const std::size_t window = n_bound + max_term;
    std::vector<Path> paths = all_paths_up_to(q, window);

    // Ideal generators u * r * v inside the length window, as row vectors over
    // the path coordinates.
    std::vector<std::vector<Scalar>> gens;
    for (const auto& rel : pres.relations) {
        std::size_t rel_min = rel.terms.front().path.length(),
                    rel_max = rel.terms.front().path.length();
        for (const auto& t : rel.terms) {
            rel_min = std::min(rel_min, t.path.length());
            rel_max = std::max(rel_max, t.path.length());
        }
        std::size_t rs = rel.terms.front().path.source();
        std::size_t re = rel.terms.front().path.target();
        for (const Path& v : paths) {
            if (v.target() != rs) continue;
            for (const Path& u : paths) {
                if (u.source() != re) continue;
                if (u.length() + v.length() + rel_max > window) continue;
                std::vector<Scalar> row(paths.size(), f.zero());
                for (const auto& term : rel.terms) {
                    Path full = v.composed_with(q, term.path).composed_with(q, u);
                    std::size_t idx = find_path(paths, full);
                    // coefficients arrive either over f or as field-agnostic rationals
                    Scalar c = term.coeff.is_residue()
                                   ? term.coeff
                                   : exactlin::into_field(term.coeff, Field::rationals(), f);
                    row[idx] = f.add(row[idx], c);
                }
                gens.push_back(std::move(row));
            }
        }
    }

    Matrix w(gens.size(), paths.size(), f);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < paths.size(); ++j) w.set(i, j, gens[i][j]);

    // J^N must land in the ideal: every length-N path reduces into the span.
    {
        std::vector<std::size_t> len_n;
        for (std::size_t i = 0; i < paths.size(); ++i)
            if (paths[i].length() == n_bound) len_n.push_back(i);
        Matrix probe(len_n.size(), paths.size(), f);
        for (std::size_t i = 0; i < len_n.size(); ++i) probe.set(i, len_n[i], f.one());
        if (exactlin::rank(exactlin::vstack(w, probe)) != exactlin::rank(w))
            throw Error(ErrorCode::NotAdmissible,
                        "arrow ideal power " + std::to_string(n_bound) + " escapes the relations");
    }

    // Quotient basis: paths of length < N, eliminated against the projected span.
    std::vector<std::size_t> short_paths;
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (paths[i].length() < n_bound) short_paths.push_back(i);
    Matrix wshort(gens.size(), short_paths.size(), f);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < short_paths.size(); ++j) wshort.set(i, j, gens[i][short_paths[j]]);
    exactlin::RrefResult red = exactlin::rref(wshort);

    std::vector<bool> is_pivot(short_paths.size(), false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;
    std::vector<std::size_t> basis_local; // indices into short_paths
    for (std::size_t j = 0; j < short_paths.size(); ++j)
        if (!is_pivot[j]) basis_local.push_back(j);

    // reduce a <N path-coordinate vector to the surviving basis
    auto reduce = [&](std::vector<Scalar> vec) {
        for (std::size_t r = 0; r < red.pivots.size(); ++r) {
            std::size_t pc = red.pivots[r];
            if (f.is_zero(vec[pc])) continue;
            Scalar c = vec[pc];
            for (std::size_t j = 0; j < short_paths.size(); ++j)
                vec[j] = f.sub(vec[j], f.mul(c, red.mat.at(r, j)));
        }
        return vec;
    };

    std::size_t dim = basis_local.size();
    std::vector<Path> basis_paths;
    std::vector<std::string> labels;
    for (std::size_t j : basis_local) {
        basis_paths.push_back(paths[short_paths[j]]);
        labels.push_back(paths[short_paths[j]].display(q));
    }
    std::map<std::size_t, std::size_t> local_of_global; // path idx -> position in short_paths
    for (std::size_t j = 0; j < short_paths.size(); ++j) local_of_global[short_paths[j]] = j;

    std::vector<std::vector<Algebra::SparseRow>> table(dim, std::vector<Algebra::SparseRow>(dim));
    for (std::size_t bi = 0; bi < dim; ++bi) {
        for (std::size_t bj = 0; bj < dim; ++bj) {
            const Path& p = basis_paths[bi];
            const Path& qq = basis_paths[bj];
            if (p.source() != qq.target()) continue; // p*q applies q first
            Path comp = qq.composed_with(q, p);
            if (comp.length() >= n_bound) continue;
            std::vector<Scalar> vec(short_paths.size(), f.zero());
            vec[local_of_global.at(find_path(paths, comp))] = f.one();
            vec = reduce(std::move(vec));
            Algebra::SparseRow row;
            for (std::size_t k = 0; k < basis_local.size(); ++k)
                if (!f.is_zero(vec[basis_local[k]])) row.push_back({k, vec[basis_local[k]]});
            table[bi][bj] = std::move(row);
        }
    }

    std::vector<Scalar> unit(dim, f.zero());
    std::vector<std::vector<Scalar>> idems;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        Path e = Path::trivial(q, v);
        std::size_t k = 0;
        for (; k < dim; ++k)
            if (basis_paths[k] == e) break;
        if (k == dim) throw Error(ErrorCode::NotAdmissible, "trivial path eliminated by relations");
        unit[k] = f.one();
        std::vector<Scalar> idem(dim, f.zero());
        idem[k] = f.one();
        idems.push_back(std::move(idem));
    }
    std::vector<std::size_t> rad_cols;
    for (std::size_t k = 0; k < dim; ++k)
        if (basis_paths[k].length() >= 1) rad_cols.push_back(k);
    Matrix rad(dim, rad_cols.size(), f);
    for (std::size_t c = 0; c < rad_cols.size(); ++c) rad.set(rad_cols[c], c, f.one());

    auto alg = Algebra::from_structure_constants(f, std::move(labels), std::move(table),
                                                 std::move(unit), std::move(idems), std::move(rad));
    return attach_presentation(alg, pres, std::move(basis_paths));
}

AlgebraPtr path_algebra_over(AlgebraPtr a, const Quiver& q) {
    if (!quiver::is_acyclic(q))
        throw Error(ErrorCode::CyclicQuiver, "path algebra over a cyclic quiver is infinite-dimensional");
    if (!a->idempotents())
        throw Error(ErrorCode::MissingIdempotents, "base algebra carries no idempotents");
    const Field& f = a->field();
    std::size_t da = a->dim();

    std::vector<Path> paths = all_paths_up_to(q, q.vertex_count());
    // basis order: (target vertex, length, arrow names); path-major over the base basis
    std::sort(paths.begin(), paths.end(), [&](const Path& x, const Path& y) {
        if (x.target() != y.target()) return x.target() < y.target();
        if (x.length() != y.length()) return x.length() < y.length();
        auto xn = x.arrow_names(q), yn = y.arrow_names(q);
        if (xn != yn) return xn < yn;
        return x.source() < y.source();
    });
    std::size_t np = paths.size();
    std::size_t dim = np * da;

    std::vector<std::string> labels;
    for (const Path& p : paths)
        for (std::size_t u = 0; u < da; ++u)
            labels.push_back(a->basis_labels()[u] + "@" + p.display(q));

    std::vector<std::vector<Algebra::SparseRow>> table(dim, std::vector<Algebra::SparseRow>(dim));
    for (std::size_t pi = 0; pi < np; ++pi) {
        for (std::size_t qi = 0; qi < np; ++qi) {
            if (paths[pi].source() != paths[qi].target()) continue;
            Path comp = paths[qi].composed_with(q, paths[pi]);
            std::size_t ci = find_path(paths, comp);
            for (std::size_t u = 0; u < da; ++u)
                for (std::size_t v = 0; v < da; ++v) {
                    Algebra::SparseRow row;
                    for (const auto& [w, c] : a->basis_product(u, v))
                        row.push_back({ci * da + w, c});
                    table[pi * da + u][qi * da + v] = std::move(row);
                }
        }
    }

    std::vector<Scalar> unit(dim, f.zero());
    std::vector<std::size_t> trivial_idx(q.vertex_count());
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        std::size_t ti = find_path(paths, Path::trivial(q, v));
        trivial_idx[v] = ti;
        for (std::size_t u = 0; u < da; ++u) unit[ti * da + u] = a->unit()[u];
    }
    std::vector<std::size_t> arrow_idx(q.arrows().size());
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai)
        arrow_idx[ai] = find_path(paths, Path(q, {ai}));

    std::vector<std::vector<Scalar>> idems;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        for (const auto& fi : *a->idempotents()) {
            std::vector<Scalar> e(dim, f.zero());
            for (std::size_t u = 0; u < da; ++u) e[trivial_idx[v] * da + u] = fi[u];
            idems.push_back(std::move(e));
        }

    std::optional<Matrix> rad;
    if (a->radical_basis()) {
        const Matrix& ra = *a->radical_basis();
        std::vector<Matrix> cols;
        for (std::size_t v = 0; v < q.vertex_count(); ++v)
            for (std::size_t c = 0; c < ra.cols(); ++c) {
                Matrix col(dim, 1, f);
                for (std::size_t u = 0; u < da; ++u)
                    col.set(trivial_idx[v] * da + u, 0, ra.at(u, c));
                cols.push_back(std::move(col));
            }
        for (std::size_t pi = 0; pi < np; ++pi) {
            if (paths[pi].length() == 0) continue;
            for (std::size_t u = 0; u < da; ++u) {
                Matrix col(dim, 1, f);
                col.set(pi * da + u, 0, f.one());
                cols.push_back(std::move(col));
            }
        }
        rad = cols.empty() ? Matrix(dim, 0, f) : exactlin::hstack(cols, dim, f);
    }

    auto alg = Algebra::from_structure_constants(f, std::move(labels), std::move(table),
                                                 std::move(unit), std::move(idems), std::move(rad));
    PathAlgebraStructure ps{a, q, std::move(paths), std::move(trivial_idx), std::move(arrow_idx)};
    return attach_path_structure(alg, std::move(ps));
}

AlgebraPtr opposite(AlgebraPtr a) {
    std::size_t d = a->dim();
    std::vector<std::vector<Algebra::SparseRow>> table(d, std::vector<Algebra::SparseRow>(d));
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) table[u][v] = a->basis_product(v, u);
    return Algebra::from_structure_constants(a->field(), a->basis_labels(), std::move(table),
                                             a->unit(), a->idempotents(), a->radical_basis());
}

const char* tri_state_name(TriState t) {
    switch (t) {
        case TriState::Yes: return "yes";
        case TriState::No: return "no";
        case TriState::Unknown: return "unknown";
    }
    return "unknown";
}

} // namespace monicrep::algebra
