#include "monicrep/harness.hpp"

#include <algorithm>
#include <random>

namespace monicrep::monic {

using exactlin::Field;
using exactlin::Scalar;
using quiver::Quiver;

namespace {

// odometer over mixed radices; returns false when it wraps around
bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < radix[i]) return true;
        digits[i] = 0;
    }
    return false;
}

double pow_checked(double base, double exp, double limit) {
    double r = 1;
    for (double i = 0; i < exp; ++i) {
        r *= base;
        if (r > limit) return limit + 1;
    }
    return r;
}

Matrix matrix_from_digits(const Field& f, std::size_t rows, std::size_t cols,
                          const std::size_t* digits) {
    Matrix m(rows, cols, f);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, f.from_int(static_cast<std::int64_t>(digits[r * cols + c])));
    return m;
}

} // namespace

std::vector<AModule> module_pool(const AlgebraPtr& a, std::size_t d, long long cap,
                                 std::uint64_t seed) {
    const Field& f = a->field();
    if (f.kind() != Field::Kind::PrimeField)
        throw Error(ErrorCode::PreconditionUnknown, "module enumeration needs a finite field");
    std::size_t p = static_cast<std::size_t>(f.characteristic());
    if (d == 0) return {AModule::zero(a)};

    // the unit acts as the identity; everything else is free up to the axioms
    std::vector<std::size_t> free_idx;
    {
        std::size_t unit_idx = a->dim();
        std::size_t nonzero = 0;
        for (std::size_t u = 0; u < a->dim(); ++u)
            if (!f.is_zero(a->unit()[u])) {
                ++nonzero;
                unit_idx = u;
            }
        bool unit_is_basis = nonzero == 1 && a->unit()[unit_idx] == f.one();
        for (std::size_t u = 0; u < a->dim(); ++u)
            if (!unit_is_basis || u != unit_idx) free_idx.push_back(u);
    }

    std::size_t cells = free_idx.size() * d * d;
    std::vector<AModule> pool;
    auto try_tuple = [&](const std::vector<std::size_t>& digits) {
        std::vector<Matrix> action(a->dim(), Matrix(d, d, f));
        std::vector<bool> fixed(a->dim(), true);
        for (std::size_t k = 0; k < free_idx.size(); ++k) {
            action[free_idx[k]] = matrix_from_digits(f, d, d, digits.data() + k * d * d);
            fixed[free_idx[k]] = false;
        }
        for (std::size_t u = 0; u < a->dim(); ++u)
            if (fixed[u]) action[u] = Matrix::identity(d, f); // the unit basis element
        if (AModule::check(a, d, action)) return;
        pool.push_back(AModule::unchecked(a, d, std::move(action)));
    };

    if (pow_checked(static_cast<double>(p), static_cast<double>(cells),
                    static_cast<double>(cap)) <= static_cast<double>(cap)) {
        std::vector<std::size_t> digits(cells, 0);
        std::vector<std::size_t> radix(cells, p);
        do {
            try_tuple(digits);
        } while (advance(digits, radix));
    } else {
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull + d));
        long long attempts = cap;
        while (attempts-- > 0 && static_cast<long long>(pool.size()) < cap / 4) {
            std::vector<std::size_t> digits(cells);
            for (auto& x : digits) x = static_cast<std::size_t>(rng() % p);
            try_tuple(digits);
        }
    }
    return pool;
}

void sample_representations(const AlgebraPtr& a, const Quiver& q, const HarnessOptions& opts,
                            long long count, const std::function<void(const Representation&)>& f) {
    const Field& field = a->field();
    std::size_t p = static_cast<std::size_t>(field.characteristic());
    std::size_t n = q.vertex_count();

    std::vector<std::vector<AModule>> pools;
    for (std::size_t d = 0; d <= opts.dim_bound; ++d)
        pools.push_back(module_pool(a, d, opts.budget, opts.seed));

    // count exhaustive size: product over vertices of pool sizes, times the
    // arrow hom-space sizes (which depend on the chosen modules, so we only
    // pre-check the vertex part and bail to sampling when it already blows up)
    double vertex_choices = 1;
    std::size_t total_pool = 0;
    for (const auto& pool : pools) total_pool += pool.size();
    for (std::size_t v = 0; v < n; ++v) vertex_choices *= static_cast<double>(total_pool);

    long long emitted = 0;
    auto emit = [&](const Representation& rep) {
        f(rep);
        ++emitted;
    };

    if (vertex_choices <= static_cast<double>(opts.budget)) {
        // exhaustive over module choices; per choice, exhaustive over arrow maps
        std::vector<const AModule*> flat_pool;
        for (const auto& pool : pools)
            for (const auto& m : pool) flat_pool.push_back(&m);
        std::vector<std::size_t> digits(n, 0);
        std::vector<std::size_t> radix(n, flat_pool.size());
        do {
            std::vector<AModule> branches;
            for (std::size_t v = 0; v < n; ++v) branches.push_back(*flat_pool[digits[v]]);
            // hom bases per arrow
            std::vector<std::vector<Matrix>> hom;
            double arrow_choices = 1;
            for (const auto& arrow : q.arrows()) {
                hom.push_back(homological::hom_space(branches[arrow.source], branches[arrow.target]));
                arrow_choices = pow_checked(static_cast<double>(p),
                                            static_cast<double>(hom.back().size()),
                                            static_cast<double>(opts.budget)) *
                                arrow_choices;
            }
            if (arrow_choices > static_cast<double>(opts.budget)) continue; // skip huge cells
            std::size_t coeffs = 0;
            for (const auto& h : hom) coeffs += h.size();
            std::vector<std::size_t> cd(coeffs, 0);
            std::vector<std::size_t> cr(coeffs, p);
            do {
                std::vector<Matrix> arrows;
                std::size_t off = 0;
                for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
                    const auto& arrow = q.arrow(ai);
                    Matrix m(branches[arrow.target].dim(), branches[arrow.source].dim(), field);
                    for (std::size_t j = 0; j < hom[ai].size(); ++j)
                        if (cd[off + j] != 0)
                            m = m + hom[ai][j].scaled(field.from_int(
                                        static_cast<std::int64_t>(cd[off + j])));
                    off += hom[ai].size();
                    arrows.push_back(std::move(m));
                }
                emit(Representation(a, q, branches, std::move(arrows)));
                if (emitted >= count) return;
            } while (advance(cd, cr));
        } while (advance(digits, radix));
        return;
    }

    // seeded sampling
    std::mt19937_64 rng(opts.seed);
    while (emitted < count) {
        std::vector<AModule> branches;
        for (std::size_t v = 0; v < n; ++v) {
            const auto& pool = pools[rng() % pools.size()];
            if (pool.empty()) {
                branches.push_back(AModule::zero(a));
                continue;
            }
            branches.push_back(pool[rng() % pool.size()]);
        }
        std::vector<Matrix> arrows;
        for (const auto& arrow : q.arrows()) {
            auto hom = homological::hom_space(branches[arrow.source], branches[arrow.target]);
            Matrix m(branches[arrow.target].dim(), branches[arrow.source].dim(), field);
            for (const auto& h : hom) {
                std::size_t c = rng() % p;
                if (c != 0) m = m + h.scaled(field.from_int(static_cast<std::int64_t>(c)));
            }
            arrows.push_back(std::move(m));
        }
        emit(Representation(a, q, std::move(branches), std::move(arrows)));
    }
}

DefinitionEquivalenceStats run_definition_equivalence(const AlgebraPtr& a, const Quiver& q,
                                                      const HarnessOptions& opts, long long count,
                                                      bool property_suite) {
    DefinitionEquivalenceStats stats;
    GpOracle oracle(a, opts.bound);
    bool split_possible = quiver::is_acyclic(q) && quiver::is_topologically_labeled(q) &&
                          q.vertex_count() >= 2;
    sample_representations(a, q, opts, count, [&](const Representation& rep) {
        ++stats.instances;
        MonicReport report = check_monic(rep);
        for (const auto& v : report.per_vertex) {
            bool m1 = std::all_of(v.arrow_injective.begin(), v.arrow_injective.end(),
                                  [](bool b) { return b; });
            if (v.collected_injective != (m1 && v.images_direct))
                ++stats.characterization_disagreements;
        }
        if (!report.is_monic) return;
        ++stats.monic_instances;
        if (!property_suite || !split_possible) return;
        ++stats.property_instances;
        if (!top_path_images_direct(rep)) {
            ++stats.directness_violations;
            return;
        }
        Representation coker = coker_phi(rep);
        if (!check_monic(coker).is_monic) ++stats.coker_monic_violations;
        auto [assembled, criterion] = phi_injectivity_criterion(rep);
        if (assembled != criterion) ++stats.criterion_disagreements;
        // the tensor P x X_n stays GP when X_n is exactly GP
        GPVerdict xn = oracle.decide(rep.branch(q.vertex_count() - 1));
        if (xn.status == GPStatus::GP) {
            repmod::SplitData split = repmod::split_top_vertex(rep);
            GPVerdict v = gp_decide_path_algebra(split.phi_domain, oracle);
            if (v.status != GPStatus::GP) ++stats.tensor_gp_violations;
        }
    });
    return stats;
}

TriangularConsistencyReport run_triangular_consistency(const AlgebraPtr& a,
                                                       const HarnessOptions& opts,
                                                       long long min_triples) {
    const Field& field = a->field();
    std::size_t p = static_cast<std::size_t>(field.characteristic());
    Quiver chain({"1", "2"}, {{"a", 1, 0}});
    AlgebraPtr lambda = algebra::path_algebra_over(a, chain);

    GpOracle oracle_a(a, opts.bound);
    GpOracle oracle_lambda(lambda, opts.bound);
    TriangularConsistencyReport report;
    report.lambda_gorenstein = oracle_lambda.report().gorenstein == TriState::Yes;
    report.lambda_inj_dim = std::max(oracle_lambda.report().left_inj_dim.value,
                                     oracle_lambda.report().right_inj_dim.value);

    repmod::Bimodule m = repmod::regular_bimodule(a);

    std::vector<std::vector<AModule>> pools;
    for (std::size_t d = 0; d <= opts.dim_bound; ++d)
        pools.push_back(module_pool(a, d, opts.budget, opts.seed));
    std::vector<const AModule*> flat;
    for (const auto& pool : pools)
        for (const auto& mod : pool) flat.push_back(&mod);

    for (std::size_t xi = 0; xi < flat.size() && report.triples < min_triples; ++xi) {
        for (std::size_t yi = 0; yi < flat.size() && report.triples < min_triples; ++yi) {
            const AModule& x = *flat[xi];
            const AModule& y = *flat[yi];
            auto hom = homological::hom_space(y, x);
            std::vector<std::size_t> cd(hom.size(), 0), cr(hom.size(), p);
            do {
                Matrix f0(x.dim(), y.dim(), field);
                for (std::size_t j = 0; j < hom.size(); ++j)
                    if (cd[j] != 0)
                        f0 = f0 + hom[j].scaled(field.from_int(static_cast<std::int64_t>(cd[j])));

                Representation rep(a, chain, {x, y}, {f0});
                GPVerdict via_path = gp_decide_path_algebra(rep, oracle_a);

                // phi on the tensor coordinates of A tensor_A Y
                repmod::TensorResult ty = repmod::tensor_bimodule(m, y);
                Matrix unit_eval(y.dim(), m.dim() * y.dim(), field);
                for (std::size_t j = 0; j < m.dim(); ++j) {
                    std::vector<Scalar> ej(m.dim(), field.zero());
                    ej[j] = field.one();
                    Matrix act = y.action_of(ej);
                    for (std::size_t c = 0; c < y.dim(); ++c)
                        for (std::size_t r = 0; r < y.dim(); ++r)
                            unit_eval.set(r, j * y.dim() + c, act.at(r, c));
                }
                Matrix phi = f0 * unit_eval * ty.section;
                TriangularDecision tri = gp_decide_triangular(a, a, m, x, y, phi, opts.bound);

                ++report.triples;
                if (via_path.exact() && tri.verdict.exact() &&
                    via_path.status != tri.verdict.status)
                    ++report.disagreements;

                GPVerdict perp = oracle_lambda.decide(repmod::to_flat_module(rep, lambda));
                if (via_path.exact() && perp.exact() && via_path.status != perp.status)
                    ++report.perp_disagreements;
                if (report.triples >= min_triples) break;
            } while (advance(cd, cr));
        }
    }
    return report;
}

SelfInjectivityHarnessReport self_injectivity_harness(const AlgebraPtr& a, const Quiver& q,
                                    const HarnessOptions& opts) {
    SelfInjectivityHarnessReport report;
    GpOracle oracle(a, opts.bound);
    report.self_injective = oracle.report().self_injective;
    sample_representations(a, q, opts, opts.budget, [&](const Representation& rep) {
        ++report.instances;
        bool monic = check_monic(rep).is_monic;
        GPVerdict v = gp_decide_path_algebra(rep, oracle);
        if (monic) ++report.monic_count;
        if (v.status == GPStatus::GP) ++report.gp_count;
        if (!v.exact()) {
            ++report.bounded_verdicts;
            return;
        }
        if (monic != (v.status == GPStatus::GP)) {
            ++report.mismatches;
            if (!report.counterexample) report.counterexample = rep;
        }
    });
    report.mon_equals_gp = report.mismatches == 0;
    report.matches_classification =
        report.mon_equals_gp == (report.self_injective == TriState::Yes);
    return report;
}

HereditaryHarnessReport hereditary_harness(const AlgebraPtr& a, const Quiver& q,
                                    const HarnessOptions& opts) {
    if (q.arrows().empty())
        throw Error(ErrorCode::PreconditionUnknown, "the quiver must have an arrow");
    algebra::AlgebraClassReport cls = algebra::classify(a, opts.bound);
    if (cls.basic == TriState::Unknown || cls.connected == TriState::Unknown)
        throw Error(ErrorCode::PreconditionUnknown, "basic/connected status unknown");
    if (cls.basic != TriState::Yes || cls.connected != TriState::Yes)
        throw Error(ErrorCode::PreconditionUnknown, "the base algebra must be basic and connected");
    bool semisimple = a->radical_basis() && a->radical_basis()->cols() == 0;
    if (!(a->dim() == 1 || !semisimple))
        throw Error(ErrorCode::PreconditionUnknown,
                    "a semisimple base algebra beyond the field itself is out of scope");

    HereditaryHarnessReport report;
    AlgebraPtr lambda = algebra::path_algebra_over(a, q);
    report.lambda_hereditary = algebra::classify(lambda, opts.bound).hereditary;

    // P(Lambda) inside Mon(Q, A): all indecomposable projectives are monic
    report.projectives_all_monic = true;
    for (std::size_t i = 0; i < a->idempotents()->size(); ++i) {
        AModule pi = homological::projective_module(a, i);
        for (std::size_t v = 0; v < q.vertex_count(); ++v) {
            Representation proj = repmod::indecomposable_projective(pi, q, v);
            if (!check_monic(proj).is_monic) report.projectives_all_monic = false;
        }
    }

    // deterministic first candidate: a non-projective simple at a sink
    std::size_t sink = q.vertex_count();
    for (std::size_t v = 0; v < q.vertex_count() && sink == q.vertex_count(); ++v)
        if (q.arrows_out_of(v).empty()) sink = v;
    for (std::size_t i = 0; i < a->idempotents()->size() && !report.found_monic_nonprojective; ++i) {
        AModule s = homological::simple_module(a, i);
        if (homological::is_projective(s)) continue;
        std::vector<AModule> branches;
        std::vector<Matrix> arrows;
        for (std::size_t v = 0; v < q.vertex_count(); ++v)
            branches.push_back(v == sink ? s : AModule::zero(a));
        for (const auto& arrow : q.arrows())
            arrows.push_back(Matrix(branches[arrow.target].dim(), branches[arrow.source].dim(),
                                    a->field()));
        Representation candidate(a, q, std::move(branches), std::move(arrows));
        if (check_monic(candidate).is_monic &&
            !homological::is_projective(repmod::to_flat_module(candidate, lambda))) {
            report.found_monic_nonprojective = true;
            report.witness = candidate;
        }
    }
    if (!report.found_monic_nonprojective) {
        sample_representations(a, q, opts, opts.budget, [&](const Representation& rep) {
            if (report.found_monic_nonprojective) return;
            if (!check_monic(rep).is_monic) return;
            if (!homological::is_projective(repmod::to_flat_module(rep, lambda))) {
                report.found_monic_nonprojective = true;
                report.witness = rep;
            }
        });
    }
    report.monic_equals_projective =
        report.projectives_all_monic && !report.found_monic_nonprojective;
    report.sides_match =
        report.monic_equals_projective == (report.lambda_hereditary == TriState::Yes);
    return report;
}

} // namespace monicrep::monic
