#include "monicrep/io.hpp"

#include "monicrep/homological.hpp"

#include <set>

namespace monicrep::io {

using quiver::Path;
using quiver::RelationElement;

json field_to_json(const Field& f) { return json{{"char", f.characteristic()}}; }

Field field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("char"))
        throw Error(ErrorCode::ParseError, "field must be an object with a \"char\" entry");
    std::int64_t p = j.at("char").get<std::int64_t>();
    return p == 0 ? Field::rationals() : Field::prime(p);
}

json matrix_to_json(const Matrix& m) {
    const Field& f = m.field();
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (f.kind() == Field::Kind::PrimeField)
                row.push_back(m.at(r, c).residue());
            else
                row.push_back(f.to_string(m.at(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

namespace {

Scalar scalar_from_json(const json& j, const Field& f) {
    if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
    if (j.is_string()) return f.parse(j.get<std::string>());
    throw Error(ErrorCode::ParseError, "matrix entries must be integers or \"a/b\" strings");
}

} // namespace

Matrix matrix_from_json(const json& j, const Field& f) {
    const json* entries = &j;
    std::optional<std::size_t> rows, cols;
    if (j.is_object()) {
        entries = &j.at("entries");
        if (j.contains("rows")) rows = j.at("rows").get<std::size_t>();
        if (j.contains("cols")) cols = j.at("cols").get<std::size_t>();
    }
    if (!entries->is_array())
        throw Error(ErrorCode::ParseError, "matrix entries must be a nested array");
    std::size_t r = entries->size();
    std::size_t c = r == 0 ? cols.value_or(0) : entries->at(0).size();
    if (rows && *rows != r) throw Error(ErrorCode::ParseError, "matrix row count mismatch");
    if (cols && *cols != c) throw Error(ErrorCode::ParseError, "matrix column count mismatch");
    Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i) {
        const json& row = entries->at(i);
        if (!row.is_array() || row.size() != c)
            throw Error(ErrorCode::ParseError, "ragged matrix rows");
        for (std::size_t k = 0; k < c; ++k) m.set(i, k, scalar_from_json(row.at(k), f));
    }
    return m;
}

json quiver_to_json(const Quiver& q) {
    json arrows = json::array();
    for (const auto& a : q.arrows())
        arrows.push_back(json{{"name", a.name},
                              {"source", q.vertex_label(a.source)},
                              {"target", q.vertex_label(a.target)}});
    return json{{"vertices", q.vertex_labels()}, {"arrows", std::move(arrows)}};
}

Quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices"))
        throw Error(ErrorCode::ParseError, "quiver needs a \"vertices\" list");
    std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
    std::vector<quiver::Arrow> arrows;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
    if (j.contains("arrows")) {
        for (const auto& a : j.at("arrows")) {
            std::string src = a.at("source").get<std::string>();
            std::string tgt = a.at("target").get<std::string>();
            if (!index.count(src) || !index.count(tgt))
                throw Error(ErrorCode::ParseError, "arrow endpoint is not a vertex");
            arrows.push_back({a.at("name").get<std::string>(), index[src], index[tgt]});
        }
    }
    return Quiver(std::move(labels), std::move(arrows));
}

json path_to_json(const Path& p, const Quiver& q) {
    if (p.is_trivial()) return json{{"vertex", q.vertex_label(p.source())}};
    json names = json::array();
    for (const auto& n : p.arrow_names(q)) names.push_back(n);
    return names;
}

Path path_from_json(const json& j, const Quiver& q) {
    if (j.is_object() && j.contains("vertex"))
        return Path::trivial(q, q.vertex_index(j.at("vertex").get<std::string>()));
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "path must be an arrow list or a vertex");
    std::vector<std::size_t> arrows;
    for (const auto& n : j) arrows.push_back(q.arrow_index(n.get<std::string>()));
    return Path(q, std::move(arrows));
}

json representation_to_json(const Representation& x) {
    const AlgebraPtr& a = x.algebra();
    json branches = json::object();
    for (std::size_t v = 0; v < x.q().vertex_count(); ++v) {
        json action = json::object();
        for (std::size_t u = 0; u < a->dim(); ++u)
            action[a->basis_labels()[u]] = matrix_to_json(x.branch(v).action(u));
        branches[x.q().vertex_label(v)] =
            json{{"dim", x.branch(v).dim()}, {"action", std::move(action)}};
    }
    json arrows = json::object();
    for (std::size_t ai = 0; ai < x.q().arrows().size(); ++ai)
        arrows[x.q().arrow(ai).name] = matrix_to_json(x.arrow_map(ai));
    return json{{"quiver", quiver_to_json(x.q())},
                {"field", field_to_json(a->field())},
                {"branches", std::move(branches)},
                {"arrows", std::move(arrows)}};
}

namespace {

struct AlgebraResolver {
    const json* section = nullptr;
    std::map<std::string, AlgebraPtr>* done;
    const std::map<std::string, Quiver>* quivers;
    const std::map<std::string, repmod::Bimodule>* bimodules = nullptr;
    std::set<std::string> in_progress;

    AlgebraPtr resolve(const json& spec);
    AlgebraPtr by_name(const std::string& name) {
        auto it = done->find(name);
        if (it != done->end()) return it->second;
        if (!section || !section->contains(name))
            throw Error(ErrorCode::ParseError, "unknown algebra \"" + name + "\"");
        if (!in_progress.insert(name).second)
            throw Error(ErrorCode::ParseError, "algebra reference cycle at \"" + name + "\"");
        AlgebraPtr a = resolve(section->at(name));
        in_progress.erase(name);
        done->emplace(name, a);
        return a;
    }
    Quiver quiver_ref(const json& j) {
        if (j.is_string()) {
            auto it = quivers->find(j.get<std::string>());
            if (it == quivers->end())
                throw Error(ErrorCode::ParseError, "unknown quiver \"" + j.get<std::string>() + "\"");
            return it->second;
        }
        return quiver_from_json(j);
    }
};

AlgebraPtr AlgebraResolver::resolve(const json& spec) {
    if (spec.is_string()) return by_name(spec.get<std::string>());
    Field f = field_from_json(spec.at("field"));
    std::string type = spec.at("type").get<std::string>();
    if (type == "field") return algebra::field_algebra(f);
    if (type == "truncated_poly")
        return algebra::truncated_polynomial(f, spec.at("n").get<std::size_t>());
    if (type == "structure_constants") {
        std::vector<std::string> labels = spec.at("basis").get<std::vector<std::string>>();
        std::size_t d = labels.size();
        const json& table = spec.at("table");
        std::vector<std::vector<algebra::Algebra::SparseRow>> t(
            d, std::vector<algebra::Algebra::SparseRow>(d));
        for (std::size_t u = 0; u < d; ++u)
            for (std::size_t v = 0; v < d; ++v)
                for (std::size_t w = 0; w < d; ++w) {
                    Scalar c = scalar_from_json(table.at(u).at(v).at(w), f);
                    if (!f.is_zero(c)) t[u][v].push_back({w, c});
                }
        std::vector<Scalar> unit;
        for (const auto& e : spec.at("unit")) unit.push_back(scalar_from_json(e, f));
        std::optional<std::vector<std::vector<Scalar>>> idems;
        if (spec.contains("idempotents")) {
            std::vector<std::vector<Scalar>> list;
            for (const auto& row : spec.at("idempotents")) {
                std::vector<Scalar> e;
                for (const auto& c : row) e.push_back(scalar_from_json(c, f));
                list.push_back(std::move(e));
            }
            idems = std::move(list);
        }
        std::optional<Matrix> rad;
        if (spec.contains("radical")) rad = matrix_from_json(spec.at("radical"), f);
        return algebra::Algebra::from_structure_constants(f, std::move(labels), std::move(t),
                                                          std::move(unit), std::move(idems),
                                                          std::move(rad));
    }
    if (type == "bound_quiver") {
        Quiver q = quiver_ref(spec.at("quiver"));
        std::vector<RelationElement> rels;
        if (spec.contains("relations")) {
            for (const auto& rel : spec.at("relations")) {
                std::vector<RelationElement::Term> terms;
                for (const auto& term : rel.at("terms"))
                    terms.push_back(
                        {scalar_from_json(term.at("coeff"), f), path_from_json(term.at("path"), q)});
                rels.push_back(RelationElement(q, std::move(terms)));
            }
        }
        return algebra::bound_quiver_algebra(
            {q, std::move(rels), spec.at("bound").get<std::size_t>()}, f);
    }
    if (type == "path_algebra_over") {
        AlgebraPtr base = resolve(spec.at("base"));
        return algebra::path_algebra_over(base, quiver_ref(spec.at("quiver")));
    }
    if (type == "triangular") {
        if (!bimodules)
            throw Error(ErrorCode::ParseError, "triangular algebras resolve after bimodules");
        std::string mname = spec.at("bimodule").get<std::string>();
        auto it = bimodules->find(mname);
        if (it == bimodules->end())
            throw Error(ErrorCode::ParseError, "unknown bimodule \"" + mname + "\"");
        AlgebraPtr a = resolve(spec.at("a"));
        AlgebraPtr b = resolve(spec.at("b"));
        return algebra::triangular_extension(a, b, it->second);
    }
    throw Error(ErrorCode::ParseError, "unknown algebra type \"" + type + "\"");
}

} // namespace

Workspace Workspace::load(const json& bundle) {
    if (!bundle.is_object()) throw Error(ErrorCode::ParseError, "workspace must be a JSON object");
    Workspace w;
    for (const auto& key : {"quivers", "algebras", "bimodules", "representations"})
        if (bundle.contains(key)) w.raw_[key] = bundle.at(key);

    if (bundle.contains("quivers"))
        for (const auto& [name, spec] : bundle.at("quivers").items())
            w.quivers_.emplace(name, quiver_from_json(spec));

    AlgebraResolver resolver;
    json algebras = bundle.contains("algebras") ? bundle.at("algebras") : json::object();
    resolver.section = &algebras;
    resolver.done = &w.algebras_;
    resolver.quivers = &w.quivers_;
    resolver.bimodules = &w.bimodules_;
    // triangular extensions need the bimodules, so they resolve in a second pass
    for (const auto& [name, spec] : algebras.items()) {
        if (spec.is_object() && spec.contains("type") && spec.at("type") == "triangular") continue;
        resolver.by_name(name);
    }

    if (bundle.contains("bimodules")) {
        for (const auto& [name, spec] : bundle.at("bimodules").items()) {
            AlgebraPtr left = resolver.resolve(spec.at("left"));
            AlgebraPtr right = resolver.resolve(spec.at("right"));
            std::size_t dim = spec.at("dim").get<std::size_t>();
            const Field& f = left->field();
            std::vector<Matrix> la, ra;
            for (const auto& m : spec.at("left_action")) la.push_back(matrix_from_json(m, f));
            for (const auto& m : spec.at("right_action")) ra.push_back(matrix_from_json(m, f));
            w.bimodules_.emplace(name,
                                 repmod::Bimodule(left, right, dim, std::move(la), std::move(ra)));
        }
    }

    for (const auto& [name, spec] : algebras.items())
        if (!w.algebras_.count(name)) resolver.by_name(name);

    if (bundle.contains("representations")) {
        for (const auto& [name, spec] : bundle.at("representations").items()) {
            AlgebraPtr a = resolver.resolve(spec.at("algebra"));
            const json& qref = spec.at("quiver");
            Quiver q = qref.is_string() ? w.quiver(qref.get<std::string>()) : quiver_from_json(qref);
            const Field& f = a->field();
            std::vector<repmod::AModule> branches;
            for (std::size_t v = 0; v < q.vertex_count(); ++v) {
                const json& b = spec.at("branches").at(q.vertex_label(v));
                std::size_t d = b.at("dim").get<std::size_t>();
                std::vector<Matrix> action;
                for (std::size_t u = 0; u < a->dim(); ++u) {
                    const std::string& label = a->basis_labels()[u];
                    if (!b.at("action").contains(label))
                        throw Error(ErrorCode::ParseError, "branch " + q.vertex_label(v) +
                                                               " lacks the action of " + label);
                    action.push_back(matrix_from_json(b.at("action").at(label), f));
                }
                if (auto bad = repmod::AModule::check(a, d, action))
                    throw Error(ErrorCode::ParseError,
                                "branch " + q.vertex_label(v) + ": " + *bad);
                branches.push_back(repmod::AModule::unchecked(a, d, std::move(action)));
            }
            std::vector<Matrix> arrows;
            for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
                const std::string& aname = q.arrow(ai).name;
                if (!spec.at("arrows").contains(aname))
                    throw Error(ErrorCode::ParseError, "missing arrow map " + aname);
                arrows.push_back(matrix_from_json(spec.at("arrows").at(aname), f));
            }
            Representation rep(a, q, std::move(branches), std::move(arrows));
            auto report = repmod::validate(rep);
            if (!report.ok)
                throw Error(ErrorCode::ParseError,
                            "representation " + name + ": " + report.first_failure);
            w.representations_.emplace(name, std::move(rep));
        }
    }
    if (bundle.contains("target")) w.target_ = bundle.at("target").get<std::string>();
    return w;
}

const Quiver& Workspace::quiver(const std::string& name) const {
    auto it = quivers_.find(name);
    if (it == quivers_.end()) throw Error(ErrorCode::ParseError, "unknown quiver \"" + name + "\"");
    return it->second;
}

const AlgebraPtr& Workspace::algebra(const std::string& name) const {
    auto it = algebras_.find(name);
    if (it == algebras_.end()) throw Error(ErrorCode::ParseError, "unknown algebra \"" + name + "\"");
    return it->second;
}

const repmod::Bimodule& Workspace::bimodule(const std::string& name) const {
    auto it = bimodules_.find(name);
    if (it == bimodules_.end())
        throw Error(ErrorCode::ParseError, "unknown bimodule \"" + name + "\"");
    return it->second;
}

const Representation& Workspace::representation(const std::string& name) const {
    auto it = representations_.find(name);
    if (it == representations_.end())
        throw Error(ErrorCode::ParseError, "unknown representation \"" + name + "\"");
    return it->second;
}

std::string Workspace::default_target() const {
    if (target_) return *target_;
    if (representations_.size() == 1) return representations_.begin()->first;
    throw Error(ErrorCode::ParseError,
                "no \"target\" entry and the bundle does not have exactly one representation");
}

std::string Workspace::default_algebra_target() const {
    if (target_ && algebras_.count(*target_)) return *target_;
    if (algebras_.size() == 1) return algebras_.begin()->first;
    throw Error(ErrorCode::ParseError,
                "no algebra \"target\" and the bundle does not have exactly one algebra");
}

std::string Workspace::default_quiver_target() const {
    if (target_ && quivers_.count(*target_)) return *target_;
    if (quivers_.size() == 1) return quivers_.begin()->first;
    throw Error(ErrorCode::ParseError,
                "no quiver \"target\" and the bundle does not have exactly one quiver");
}

std::string content_hash(const json& j) {
    std::string dump = j.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace monicrep::io
