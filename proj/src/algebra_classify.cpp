#include "monicrep/algebra.hpp"
#include "monicrep/homological.hpp"

#include <numeric>

namespace monicrep::algebra {

using exactlin::Matrix;
using exactlin::Scalar;
using homological::ext_dims;
using homological::simple_module;
using repmod::AModule;

namespace {

// inj.dim of the regular module, probed through Ext^i(S, A) over all simples
DimBound injective_dimension(const AlgebraPtr& a, const std::vector<AModule>& simples,
                             std::size_t bound) {
    std::vector<bool> nonzero(bound + 1, false);
    AModule reg = AModule::regular(a);
    for (const auto& s : simples) {
        auto dims = ext_dims(s, reg, bound);
        for (std::size_t i = 1; i <= bound; ++i)
            if (dims[i] != 0) nonzero[i] = true;
    }
    if (nonzero[bound]) return DimBound::beyond();
    std::size_t last = 0;
    for (std::size_t i = 1; i <= bound; ++i)
        if (nonzero[i]) last = i;
    return DimBound::exact(last);
}

struct SideReport {
    DimBound inj_dim;
    DimBound global_dim;
    TriState hereditary;
    TriState self_injective;
};

SideReport classify_side(const AlgebraPtr& a, std::size_t bound) {
    std::vector<AModule> simples;
    for (std::size_t i = 0; i < a->idempotents()->size(); ++i)
        simples.push_back(simple_module(a, i));

    SideReport out;
    out.inj_dim = injective_dimension(a, simples, bound);
    out.self_injective = TriState::Unknown;
    {
        bool all_vanish = true;
        AModule reg = AModule::regular(a);
        for (const auto& s : simples)
            if (ext_dims(s, reg, 1)[1] != 0) all_vanish = false;
        out.self_injective = all_vanish ? TriState::Yes : TriState::No;
    }
    // projective dimensions of the simples by syzygy chains
    bool beyond = false;
    std::size_t gl = 0;
    bool hered = true;
    for (const auto& s : simples) {
        AModule omega = s;
        std::size_t depth = 0;
        while (depth <= bound && omega.dim() != 0 && !homological::is_projective(omega)) {
            omega = homological::syzygy(omega).mod;
            ++depth;
        }
        bool resolved = omega.dim() == 0 || homological::is_projective(omega);
        if (depth > bound || !resolved) {
            beyond = true;
        } else {
            gl = std::max(gl, depth);
        }
        // hereditary needs pd <= 1, decidable from the first syzygy alone
        if (!homological::is_projective(s) && !homological::is_projective(homological::syzygy(s).mod))
            hered = false;
    }
    out.global_dim = beyond ? DimBound::beyond() : DimBound::exact(gl);
    out.hereditary = hered ? TriState::Yes : TriState::No;
    return out;
}

} // namespace

AlgebraClassReport classify(AlgebraPtr a, std::size_t bound) {
    AlgebraClassReport rep;
    rep.bound_used = bound;
    if (!a->idempotents() || !a->radical_basis()) return rep; // everything unknown

    SideReport left = classify_side(a, bound);
    AlgebraPtr op = opposite(a);
    SideReport right = classify_side(op, bound);

    rep.self_injective = left.self_injective;
    rep.global_dim = left.global_dim; // gldim is left-right symmetric for these algebras
    rep.hereditary = left.hereditary;
    rep.left_inj_dim = left.inj_dim;
    rep.right_inj_dim = right.inj_dim;
    rep.gorenstein = (!left.inj_dim.exceeds_bound && !right.inj_dim.exceeds_bound)
                         ? TriState::Yes
                         : TriState::Unknown;

    // basic: no two indecomposable projectives share a top
    {
        std::vector<AModule> simples;
        for (std::size_t i = 0; i < a->idempotents()->size(); ++i)
            simples.push_back(simple_module(a, i));
        bool basic = true;
        for (std::size_t i = 0; i < simples.size() && basic; ++i)
            for (std::size_t j = i + 1; j < simples.size() && basic; ++j)
                if (!homological::hom_space(simples[i], simples[j]).empty()) basic = false;
        rep.basic = basic ? TriState::Yes : TriState::No;
    }
    // connected: idempotent linkage graph e_i A e_j != 0
    {
        std::size_t k = a->idempotents()->size();
        std::vector<std::size_t> parent(k);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (i == j) continue;
                Matrix link = a->left_mult_matrix((*a->idempotents())[i]) *
                              a->right_mult_matrix((*a->idempotents())[j]);
                if (!link.is_zero()) parent[find(i)] = find(j);
            }
        std::size_t roots = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (find(i) == i) ++roots;
        rep.connected = roots <= 1 ? TriState::Yes : TriState::No;
    }
    return rep;
}

} // namespace monicrep::algebra
