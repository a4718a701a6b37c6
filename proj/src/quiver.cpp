#include "monicrep/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace monicrep::quiver {

Quiver::Quiver(std::vector<std::string> vertex_labels, std::vector<Arrow> arrows)
    : labels_(std::move(vertex_labels)), arrows_(std::move(arrows)) {
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw Error(ErrorCode::ParseError, "duplicate vertex label " + l);
    std::set<std::string> names;
    for (const auto& a : arrows_) {
        if (a.source >= labels_.size() || a.target >= labels_.size())
            throw Error(ErrorCode::ParseError, "arrow " + a.name + " has an invalid endpoint");
        if (!names.insert(a.name).second)
            throw Error(ErrorCode::ParseError, "duplicate arrow name " + a.name);
    }
}

std::size_t Quiver::vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw Error(ErrorCode::ParseError, "unknown vertex " + label);
}

std::size_t Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == name) return i;
    throw Error(ErrorCode::ParseError, "unknown arrow " + name);
}

std::vector<std::size_t> Quiver::arrows_into(std::size_t vertex) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].target == vertex) out.push_back(i);
    std::sort(out.begin(), out.end(),
              [&](std::size_t a, std::size_t b) { return arrows_[a].name < arrows_[b].name; });
    return out;
}

std::vector<std::size_t> Quiver::arrows_out_of(std::size_t vertex) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].source == vertex) out.push_back(i);
    std::sort(out.begin(), out.end(),
              [&](std::size_t a, std::size_t b) { return arrows_[a].name < arrows_[b].name; });
    return out;
}

bool Quiver::operator==(const Quiver& o) const {
    if (labels_ != o.labels_ || arrows_.size() != o.arrows_.size()) return false;
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        if (arrows_[i].name != o.arrows_[i].name || arrows_[i].source != o.arrows_[i].source ||
            arrows_[i].target != o.arrows_[i].target)
            return false;
    }
    return true;
}

Path Path::trivial(const Quiver& q, std::size_t vertex) {
    if (vertex >= q.vertex_count()) throw Error(ErrorCode::ParseError, "trivial path off the quiver");
    Path p;
    p.source_ = p.target_ = vertex;
    return p;
}

Path::Path(const Quiver& q, std::vector<std::size_t> arrow_indices) : arrows_(std::move(arrow_indices)) {
    if (arrows_.empty())
        throw Error(ErrorCode::ParseError, "empty arrow sequence needs a vertex; use Path::trivial");
    source_ = q.arrow(arrows_.front()).source;
    target_ = q.arrow(arrows_.back()).target;
    for (std::size_t i = 0; i + 1 < arrows_.size(); ++i)
        if (q.arrow(arrows_[i]).target != q.arrow(arrows_[i + 1]).source)
            throw Error(ErrorCode::ParseError, "arrows do not compose");
}

Path Path::then(const Quiver& q, std::size_t arrow_index) const {
    if (q.arrow(arrow_index).source != target_)
        throw Error(ErrorCode::ParseError, "arrow does not extend path");
    Path p = *this;
    p.arrows_.push_back(arrow_index);
    p.target_ = q.arrow(arrow_index).target;
    return p;
}

Path Path::composed_with(const Quiver& q, const Path& later) const {
    if (later.source_ != target_) throw Error(ErrorCode::ParseError, "paths do not compose");
    Path p = *this;
    for (std::size_t a : later.arrows_) p = p.then(q, a);
    if (p.is_trivial()) p.target_ = later.target_;
    return p;
}

std::vector<std::string> Path::arrow_names(const Quiver& q) const {
    std::vector<std::string> names;
    names.reserve(arrows_.size());
    for (std::size_t a : arrows_) names.push_back(q.arrow(a).name);
    return names;
}

std::string Path::display(const Quiver& q) const {
    if (is_trivial()) return "e_" + q.vertex_label(source_);
    std::string s;
    // written right-to-left, matching composition order
    for (std::size_t i = arrows_.size(); i-- > 0;) {
        s += q.arrow(arrows_[i]).name;
        if (i > 0) s += "*";
    }
    return s;
}

RelationElement::RelationElement(const Quiver& q, std::vector<Term> t) : terms(std::move(t)) {
    if (terms.empty()) throw Error(ErrorCode::ParseError, "empty relation element");
    for (const auto& term : terms) {
        if (term.path.source() != terms.front().path.source() ||
            term.path.target() != terms.front().path.target())
            throw Error(ErrorCode::ParseError,
                        "relation element with non-parallel paths: " + term.path.display(q));
    }
}

bool is_acyclic(const Quiver& q) {
    std::size_t n = q.vertex_count();
    std::vector<std::size_t> outdeg(n, 0);
    for (const auto& a : q.arrows()) ++outdeg[a.source];
    // peel vertices whose successors are all gone (sinks first)
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (outdeg[v] == 0) ready.push_back(v);
    std::size_t done = 0;
    std::vector<bool> removed(n, false);
    while (!ready.empty()) {
        std::size_t v = ready.back();
        ready.pop_back();
        removed[v] = true;
        ++done;
        for (const auto& a : q.arrows())
            if (a.target == v && !removed[a.source] && --outdeg[a.source] == 0)
                ready.push_back(a.source);
    }
    return done == n;
}

std::vector<std::size_t> topological_label(const Quiver& q) {
    std::size_t n = q.vertex_count();
    std::vector<std::size_t> outdeg(n, 0);
    for (const auto& a : q.arrows()) ++outdeg[a.source];
    std::vector<std::size_t> perm(n, n);
    std::vector<bool> labeled(n, false);
    // Assign labels 0..n-1 sinks-first; ties break on the original index so an
    // already well-labeled quiver maps to the identity.
    for (std::size_t next = 0; next < n; ++next) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (!labeled[v] && outdeg[v] == 0) {
                pick = v;
                break;
            }
        }
        if (pick == n) throw Error(ErrorCode::CyclicQuiver, "quiver has an oriented cycle");
        labeled[pick] = true;
        perm[pick] = next;
        for (const auto& a : q.arrows())
            if (a.target == pick && !labeled[a.source]) --outdeg[a.source];
    }
    return perm;
}

bool is_topologically_labeled(const Quiver& q) {
    for (const auto& a : q.arrows())
        if (a.source <= a.target) return false;
    return true;
}

Quiver apply_vertex_permutation(const Quiver& q, const std::vector<std::size_t>& perm) {
    std::size_t n = q.vertex_count();
    std::vector<std::string> labels(n);
    for (std::size_t old = 0; old < n; ++old) labels[perm[old]] = q.vertex_label(old);
    std::vector<Arrow> arrows;
    arrows.reserve(q.arrows().size());
    for (const auto& a : q.arrows()) arrows.push_back({a.name, perm[a.source], perm[a.target]});
    return Quiver(std::move(labels), std::move(arrows));
}

namespace {

void dfs_paths(const Quiver& q, const Path& cur, std::size_t goal,
               std::optional<std::size_t> max_len, std::vector<Path>& out) {
    if (cur.target() == goal) out.push_back(cur);
    if (max_len && cur.length() >= *max_len) return;
    for (std::size_t a : q.arrows_out_of(cur.target())) dfs_paths(q, cur.then(q, a), goal, max_len, out);
}

} // namespace

std::vector<Path> paths_between(const Quiver& q, std::size_t j, std::size_t i,
                                std::optional<std::size_t> max_len) {
    if (!max_len && !is_acyclic(q))
        throw Error(ErrorCode::CyclicQuiver, "unbounded path enumeration on a cyclic quiver");
    std::vector<Path> out;
    dfs_paths(q, Path::trivial(q, j), i, max_len, out);
    return out;
}

std::vector<std::vector<long long>> path_count_matrix(const Quiver& q) {
    if (!is_acyclic(q)) throw Error(ErrorCode::CyclicQuiver, "path counts need an acyclic quiver");
    std::size_t n = q.vertex_count();
    std::vector<std::size_t> perm = topological_label(q);
    // process sources of the relabeled order last; counts[j][i] by DP over arrows
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[perm[v]] = v;
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (std::size_t v = 0; v < n; ++v) m[v][v] = 1;
    for (std::size_t lab = 0; lab < n; ++lab) {
        std::size_t j = order[lab]; // all targets of arrows out of j carry smaller labels
        for (std::size_t a = 0; a < q.arrows().size(); ++a) {
            if (q.arrow(a).source != j) continue;
            std::size_t t = q.arrow(a).target;
            for (std::size_t i = 0; i < n; ++i) m[j][i] += m[t][i];
        }
    }
    return m;
}

TensorQuiverResult tensor_quiver(const Quiver& q, const Quiver& q2,
                                 const std::vector<RelationElement>* rel_q,
                                 const std::vector<RelationElement>* rel_q2,
                                 const exactlin::Field* lift_field) {
    std::size_t n = q.vertex_count(), n2 = q2.vertex_count();
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> vidx(n, std::vector<std::size_t>(n2));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < n2; ++t) {
            vidx[i][t] = labels.size();
            labels.push_back("(" + q.vertex_label(i) + "," + q2.vertex_label(t) + ")");
        }
    std::vector<Arrow> arrows;
    std::vector<std::vector<std::size_t>> left(q.arrows().size(), std::vector<std::size_t>(n2));
    std::vector<std::vector<std::size_t>> right(n, std::vector<std::size_t>(q2.arrows().size()));
    std::set<std::string> used;
    auto fresh = [&used](std::string name) {
        while (used.count(name)) name += "'";
        used.insert(name);
        return name;
    };
    for (std::size_t a = 0; a < q.arrows().size(); ++a)
        for (std::size_t t = 0; t < n2; ++t) {
            left[a][t] = arrows.size();
            arrows.push_back({fresh("(" + q.arrow(a).name + "," + q2.vertex_label(t) + ")"),
                              vidx[q.arrow(a).source][t], vidx[q.arrow(a).target][t]});
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < q2.arrows().size(); ++b) {
            right[i][b] = arrows.size();
            arrows.push_back({fresh("(" + q.vertex_label(i) + "," + q2.arrow(b).name + ")"),
                              vidx[i][q2.arrow(b).source], vidx[i][q2.arrow(b).target]});
        }
    Quiver prod(std::move(labels), std::move(arrows));

    exactlin::Field f = lift_field ? *lift_field : exactlin::Field::rationals();
    std::vector<RelationElement> rels;
    // one commutativity square per pair (alpha, beta'):
    // (alpha, t')(i, beta') - (j, beta')(alpha, s') from (i, s') to (j, t')
    for (std::size_t a = 0; a < q.arrows().size(); ++a)
        for (std::size_t b = 0; b < q2.arrows().size(); ++b) {
            std::size_t i = q.arrow(a).source, j = q.arrow(a).target;
            std::size_t s = q2.arrow(b).source, t = q2.arrow(b).target;
            Path p1 = Path(prod, {right[i][b], left[a][t]});
            Path p2 = Path(prod, {left[a][s], right[j][b]});
            rels.push_back(RelationElement(
                prod, {{f.one(), p1}, {f.neg(f.one()), p2}}));
        }
    auto lift = [&](const std::vector<RelationElement>& src, bool from_left) {
        const Quiver& factor = from_left ? q : q2;
        std::size_t other_count = from_left ? n2 : n;
        for (const auto& rel : src) {
            for (std::size_t t = 0; t < other_count; ++t) {
                std::vector<RelationElement::Term> terms;
                for (const auto& term : rel.terms) {
                    std::vector<std::size_t> seq;
                    for (std::size_t a : term.path.arrow_indices())
                        seq.push_back(from_left ? left[a][t] : right[t][a]);
                    if (seq.empty())
                        throw Error(ErrorCode::NotAdmissible, "relation with a trivial path");
                    (void)factor;
                    terms.push_back({term.coeff, Path(prod, seq)});
                }
                rels.push_back(RelationElement(prod, std::move(terms)));
            }
        }
    };
    if (rel_q) lift(*rel_q, true);
    if (rel_q2) lift(*rel_q2, false);
    return {std::move(prod), std::move(rels), std::move(vidx), std::move(left), std::move(right)};
}

bool tensor_hereditary_check(const Quiver& qa, const std::vector<RelationElement>& rel_a,
                             const Quiver& qb, const std::vector<RelationElement>& rel_b) {
    bool a_vertices_only = qa.arrows().empty() && rel_a.empty();
    bool b_vertices_only = qb.arrows().empty() && rel_b.empty();
    return (a_vertices_only && rel_b.empty()) || (b_vertices_only && rel_a.empty());
}

} // namespace monicrep::quiver
