#include "monicrep/cli.hpp"

#include "monicrep/examples.hpp"
#include "monicrep/harness.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

namespace monicrep::cli {

using io::json;
using io::Workspace;
using algebra::AlgebraPtr;
using algebra::TriState;
using exactlin::Field;
using exactlin::Matrix;
using homological::GPStatus;
using monic::HarnessOptions;
using quiver::Quiver;
using repmod::Representation;

namespace {

struct Options {
    std::string command;
    std::vector<std::string> positional;
    std::size_t bound = 8;
    std::uint64_t seed = 1;
    long long budget = 100000;
    int jobs = 1;
    std::string format = "text";
    std::optional<std::string> target;
    std::optional<std::string> out;
    bool timings = false;
};

Options parse_args(const std::vector<std::string>& args) {
    Options o;
    if (args.empty()) throw Error(ErrorCode::ParseError, "no command given");
    o.command = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto value = [&](const char* flag) -> std::string {
            if (i + 1 >= args.size())
                throw Error(ErrorCode::ParseError, std::string(flag) + " needs a value");
            return args[++i];
        };
        if (a == "--bound")
            o.bound = std::stoul(value("--bound"));
        else if (a == "--seed")
            o.seed = std::stoull(value("--seed"));
        else if (a == "--budget")
            o.budget = std::stoll(value("--budget"));
        else if (a == "--jobs")
            o.jobs = std::stoi(value("--jobs"));
        else if (a == "--report")
            o.format = value("--report");
        else if (a == "--target")
            o.target = value("--target");
        else if (a == "--out")
            o.out = value("--out");
        else if (a == "--timings")
            o.timings = true;
        else if (!a.empty() && a[0] == '-')
            throw Error(ErrorCode::ParseError, "unknown flag " + a);
        else
            o.positional.push_back(a);
    }
    if (o.format != "text" && o.format != "json")
        throw Error(ErrorCode::ParseError, "--report must be text or json");
    return o;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
    return j;
}

json verdict_to_json(const homological::GPVerdict& v) {
    return json{{"status", homological::gp_status_name(v.status)},
                {"route", homological::gp_route_name(v.route)},
                {"bound", v.bound},
                {"witness", v.witness}};
}

json monic_report_to_json(const monic::MonicReport& r) {
    json per = json::array();
    for (const auto& v : r.per_vertex) {
        per.push_back(json{{"vertex", v.vertex},
                           {"incoming", v.incoming_arrows},
                           {"arrow_injective", v.arrow_injective},
                           {"images_direct", v.images_direct},
                           {"collected_injective", v.collected_injective},
                           {"collected_rank", v.collected_rank},
                           {"source_dim", v.source_total_dim}});
    }
    json out{{"monic", r.is_monic}, {"per_vertex", std::move(per)}};
    if (r.first_failure) {
        out["first_failure"] = json{{"vertex", r.first_failure->vertex},
                                    {"condition", r.first_failure->condition},
                                    {"witness", io::matrix_to_json(r.first_failure->witness)}};
    }
    return out;
}

int exit_for_status(GPStatus s) {
    switch (s) {
        case GPStatus::GP: return 0;
        case GPStatus::NotGP: return 1;
        case GPStatus::GPUpToBound: return 3;
    }
    return 2;
}

std::string render_text(const json& report) {
    std::ostringstream os;
    os << report["command"].get<std::string>() << "\n";
    if (report.contains("inputs"))
        for (const auto& [name, hash] : report["inputs"].items())
            os << "  input " << name << "  " << hash.get<std::string>() << "\n";
    std::function<void(const json&, int)> walk = [&](const json& j, int depth) {
        std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
        for (const auto& [key, val] : j.items()) {
            if (val.is_object()) {
                os << pad << key << ":\n";
                walk(val, depth + 1);
            } else if (val.is_array()) {
                os << pad << key << ": " << val.dump() << "\n";
            } else {
                os << pad << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
                   << "\n";
            }
        }
    };
    if (report.contains("result")) {
        walk(report["result"], 1);
    }
    return os.str();
}

struct SuiteItem {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
    json data; // replayable payload (counterexamples), when one exists
};

std::vector<SuiteItem> run_suite(const Options& o);

} // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    auto started = std::chrono::steady_clock::now();
    CommandResult res;
    Options o;
    try {
        o = parse_args(args);
        json report;
        report["command"] = o.command;
        report["settings"] = json{{"bound", o.bound}, {"seed", o.seed}, {"budget", o.budget},
                                  {"jobs", o.jobs}};

        auto finish = [&](int code, json result) {
            report["result"] = std::move(result);
            if (o.timings) {
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
                report["wall_clock_ms"] = ms;
            }
            res.exit_code = code;
            res.report = report;
            res.text = o.format == "json" ? report.dump(2) + "\n" : render_text(report);
            return res;
        };

        if (o.command == "check-monic" || o.command == "check-gp" || o.command == "coker-phi") {
            if (o.positional.size() != 1)
                throw Error(ErrorCode::ParseError, o.command + " needs exactly one FILE");
            json bundle = load_json_file(o.positional[0]);
            Workspace ws = Workspace::load(bundle);
            std::string target = o.target ? *o.target : ws.default_target();
            const Representation& rep = ws.representation(target);
            report["inputs"] = json{{target, io::content_hash(bundle)}};

            if (o.command == "check-monic") {
                monic::MonicReport mr = monic::check_monic(rep);
                return finish(mr.is_monic ? 0 : 1, monic_report_to_json(mr));
            }
            if (o.command == "check-gp") {
                // relabel internally when needed; reports use vertex labels
                homological::GPVerdict v = monic::gp_decide_path_algebra(rep, o.bound);
                json result = verdict_to_json(v);
                result["monic"] = monic_report_to_json(monic::check_monic(rep));
                return finish(exit_for_status(v.status), std::move(result));
            }
            // coker-phi
            Representation coker = monic::coker_phi(rep);
            json result;
            result["cokernel"] = io::representation_to_json(coker);
            if (o.out) {
                std::ofstream outf(*o.out);
                json out_bundle;
                out_bundle["quivers"] = json{{"coker_quiver", io::quiver_to_json(coker.q())}};
                out_bundle["cokernel"] = result["cokernel"];
                outf << out_bundle.dump(2) << "\n";
            }
            return finish(0, std::move(result));
        }

        if (o.command == "algebra-info") {
            if (o.positional.size() != 1)
                throw Error(ErrorCode::ParseError, "algebra-info needs exactly one FILE");
            json bundle = load_json_file(o.positional[0]);
            Workspace ws = Workspace::load(bundle);
            std::string target = o.target ? *o.target : ws.default_algebra_target();
            const AlgebraPtr& a = ws.algebra(target);
            report["inputs"] = json{{target, io::content_hash(bundle)}};
            algebra::AlgebraClassReport cls = algebra::classify(a, o.bound);
            json result{{"dim", a->dim()},
                        {"self_injective", algebra::tri_state_name(cls.self_injective)},
                        {"hereditary", algebra::tri_state_name(cls.hereditary)},
                        {"gorenstein", algebra::tri_state_name(cls.gorenstein)},
                        {"basic", algebra::tri_state_name(cls.basic)},
                        {"connected", algebra::tri_state_name(cls.connected)},
                        {"global_dim", cls.global_dim.display(o.bound)},
                        {"left_inj_dim", cls.left_inj_dim.display(o.bound)},
                        {"right_inj_dim", cls.right_inj_dim.display(o.bound)},
                        {"bound_used", cls.bound_used}};
            return finish(0, std::move(result));
        }

        if (o.command == "quiver-tensor") {
            if (o.positional.size() != 2)
                throw Error(ErrorCode::ParseError, "quiver-tensor needs two FILEs");
            auto load_quiver = [&](const std::string& path) {
                json j = load_json_file(path);
                if (j.contains("vertices")) return std::make_pair(io::quiver_from_json(j), j);
                Workspace ws = Workspace::load(j);
                return std::make_pair(ws.quiver(ws.default_quiver_target()), j);
            };
            auto [q1, j1] = load_quiver(o.positional[0]);
            auto [q2, j2] = load_quiver(o.positional[1]);
            report["inputs"] =
                json{{"q1", io::content_hash(j1)}, {"q2", io::content_hash(j2)}};
            auto tensor = quiver::tensor_quiver(q1, q2);
            bool hered = quiver::tensor_hereditary_check(q1, {}, q2, {});
            json rels = json::array();
            for (const auto& rel : tensor.relations) {
                json terms = json::array();
                Field qf = Field::rationals();
                for (const auto& term : rel.terms)
                    terms.push_back(json{{"coeff", qf.to_string(term.coeff)},
                                         {"path", io::path_to_json(term.path, tensor.product)}});
                rels.push_back(json{{"terms", std::move(terms)}});
            }
            json result{{"product", io::quiver_to_json(tensor.product)},
                        {"relations", rels},
                        {"vertex_count", tensor.product.vertex_count()},
                        {"arrow_count", tensor.product.arrows().size()},
                        {"relation_count", tensor.relations.size()},
                        {"hereditary", hered}};
            if (o.out) {
                std::ofstream outf(*o.out);
                json out_bundle;
                out_bundle["quivers"] = json{{"product", io::quiver_to_json(tensor.product)}};
                out_bundle["relations"] = rels;
                outf << out_bundle.dump(2) << "\n";
            }
            return finish(hered ? 0 : 1, std::move(result));
        }

        if (o.command == "suite") {
            std::vector<SuiteItem> items = run_suite(o);
            bool all_pass = true;
            json out = json::array();
            std::ostringstream lines;
            for (const auto& item : items) {
                if (!item.skipped) all_pass = all_pass && item.pass;
                json entry{{"name", item.name},
                           {"status", item.skipped ? "SKIP" : (item.pass ? "PASS" : "FAIL")},
                           {"detail", item.detail}};
                if (!item.data.is_null()) entry["data"] = item.data;
                out.push_back(std::move(entry));
                lines << (item.skipped ? "[skip] " : (item.pass ? "[pass] " : "[FAIL] "))
                      << item.name << (item.detail.empty() ? "" : "  -- " + item.detail) << "\n";
            }
            json result{{"items", std::move(out)}, {"all_pass", all_pass}};
            report["result"] = result;
            if (o.timings) {
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
                report["wall_clock_ms"] = ms;
            }
            res.exit_code = all_pass ? 0 : 1;
            res.report = report;
            res.text = o.format == "json" ? report.dump(2) + "\n"
                                          : lines.str() + (all_pass ? "all checks passed\n"
                                                                    : "FAILURES present\n");
            return res;
        }

        throw Error(ErrorCode::ParseError, "unknown command " + o.command);
    } catch (const Error& e) {
        res.exit_code = 2;
        res.report = json{{"error", e.what()}};
        res.text = std::string("error: ") + e.what() + "\n";
        return res;
    } catch (const std::exception& e) {
        res.exit_code = 2;
        res.report = json{{"error", e.what()}};
        res.text = std::string("error: ") + e.what() + "\n";
        return res;
    }
}

namespace {

std::vector<SuiteItem> run_suite(const Options& o) {
    std::vector<SuiteItem> items;
    auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
        items.push_back({name, pass, false, detail, json()});
    };
    auto skip = [&](const std::string& name, const std::string& why) {
        items.push_back({name, false, true, why, json()});
    };

    Field f2 = Field::prime(2);
    AlgebraPtr dual = examples::dual_numbers(f2);
    Representation x = examples::rep_X(dual);
    Representation y = examples::rep_Y(dual);

    // bundled fixtures
    {
        monic::MonicReport mx = monic::check_monic(x);
        check("fixture X is monic", mx.is_monic);
        monic::MonicReport my = monic::check_monic(y);
        check("fixture Y fails monic with an m2 witness at vertex 1",
              !my.is_monic && my.first_failure && my.first_failure->vertex == "1" &&
                  my.first_failure->condition == "m2");
        homological::GpOracle oracle(dual, o.bound);
        auto vx = monic::gp_decide_path_algebra(x, oracle);
        check("fixture X decides GP via the monic route",
              vx.status == GPStatus::GP && vx.route == homological::GPRoute::MonicTheorem);
        auto vy = monic::gp_decide_path_algebra(y, oracle);
        check("fixture Y decides NotGP", vy.status == GPStatus::NotGP);
    }

    // complete resolution windows through the triangular split
    {
        std::size_t wn = std::min<std::size_t>(o.bound, 3);
        monic::SplitTriangularView view = monic::triangular_view_of_split(x);
        AlgebraPtr tri = algebra::triangular_extension(view.lambda_prime, dual, view.p);
        try {
            auto w = homological::complete_resolution_window(
                tri, view.p, {view.x_flat, view.y, view.phi}, wn);
            auto checks = homological::verify_window(w);
            check("fixture X has a verified complete resolution window", checks.ok(),
                  checks.detail);
        } catch (const Error& e) {
            check("fixture X has a verified complete resolution window", false, e.what());
        }
        monic::SplitTriangularView vy = monic::triangular_view_of_split(y);
        AlgebraPtr triy = algebra::triangular_extension(vy.lambda_prime, dual, vy.p);
        bool failed_at_phi = false;
        std::string note;
        try {
            homological::complete_resolution_window(triy, vy.p, {vy.x_flat, vy.y, vy.phi}, wn);
            note = "window unexpectedly assembled";
        } catch (const Error& e) {
            failed_at_phi = std::string(e.what()).find("phi is not injective") != std::string::npos;
            note = e.what();
        }
        check("fixture Y window assembly fails at a phi-injectivity step", failed_at_phi, note);
    }

    if (o.budget <= 0) {
        skip("definition equivalence and split properties", "budget 0");
        skip("triangular route consistency", "budget 0");
        skip("self-injectivity equivalence harnesses", "budget 0");
        skip("projectives-monic vs hereditary", "budget 0");
        skip("hereditary characterization harnesses", "budget 0");
        skip("structural identities", "budget 0");
        return items;
    }

    HarnessOptions hopts;
    hopts.bound = o.bound;
    hopts.seed = o.seed;
    hopts.budget = o.budget;
    hopts.dim_bound = 2;

    {
        long long count = std::min<long long>(o.budget, 2000);
        auto s2 = monic::run_definition_equivalence(dual, examples::two_sources(), hopts, count, true);
        AlgebraPtr dual3 = examples::dual_numbers(Field::prime(3));
        auto s3 = monic::run_definition_equivalence(dual3, examples::two_sources(), hopts, count, true);
        check("definition equivalence holds on sampled representations (F2 and F3)",
              s2.characterization_disagreements == 0 && s3.characterization_disagreements == 0,
              std::to_string(s2.instances + s3.instances) + " instances");
        check("split properties hold on every monic instance",
              s2.directness_violations == 0 && s2.coker_monic_violations == 0 &&
                  s2.criterion_disagreements == 0 && s2.tensor_gp_violations == 0 &&
                  s3.directness_violations == 0 && s3.coker_monic_violations == 0 &&
                  s3.criterion_disagreements == 0 && s3.tensor_gp_violations == 0,
              std::to_string(s2.property_instances + s3.property_instances) + " monic instances");
    }
    {
        HarnessOptions topts = hopts;
        topts.dim_bound = 3;
        auto rep = monic::run_triangular_consistency(dual, topts, std::min<long long>(o.budget, 500));
        check("triangular and monic routes agree with the Ext oracle",
              rep.disagreements == 0 && rep.perp_disagreements == 0 && rep.lambda_gorenstein,
              std::to_string(rep.triples) + " triples, inj dim " +
                  std::to_string(rep.lambda_inj_dim));
    }
    {
        Quiver chain({"1", "2"}, {{"a", 1, 0}});
        auto self = monic::self_injectivity_harness(dual, chain, hopts);
        check("monic = GP exactly over the self-injective base",
              self.mon_equals_gp && self.matches_classification,
              std::to_string(self.instances) + " instances");
        AlgebraPtr ka2 = algebra::path_algebra_over(algebra::field_algebra(f2), chain);
        auto notself = monic::self_injectivity_harness(ka2, chain, hopts);
        check("a monic non-GP representation exists over the hereditary chain",
              !notself.mon_equals_gp && notself.matches_classification &&
                  notself.counterexample.has_value(),
              std::to_string(notself.mismatches) + " mismatches");
        if (notself.counterexample)
            items.back().data = io::representation_to_json(*notself.counterexample);
    }
    {
        auto loop = monic::projectives_monic_bound_quiver(dual, o.bound);
        Quiver chain({"1", "2"}, {{"a", 1, 0}});
        auto free_chain = monic::projectives_monic_bound_quiver(
            algebra::bound_quiver_algebra({chain, {}, 2}, f2), o.bound);
        auto looped = monic::projectives_monic_bound_quiver(
            algebra::bound_quiver_algebra(examples::looped_presentation(), f2), o.bound);
        check("projectives are monic exactly for the hereditary presentations",
              !loop.projectives_monic && loop.hereditary == TriState::No &&
                  free_chain.projectives_monic && free_chain.hereditary == TriState::Yes &&
                  !looped.projectives_monic && looped.hereditary == TriState::No);
    }
    {
        Quiver chain({"1", "2"}, {{"a", 1, 0}});
        auto base = monic::hereditary_harness(algebra::field_algebra(f2), chain, hopts);
        check("monic = projective over the base field",
              base.monic_equals_projective && base.lambda_hereditary == TriState::Yes &&
                  base.sides_match);
        auto dualh = monic::hereditary_harness(dual, chain, hopts);
        bool witness_ok = dualh.witness && dualh.witness->branch(0).dim() == 1 &&
                          dualh.witness->branch(1).dim() == 0;
        check("a monic non-projective witness exists over the dual numbers",
              dualh.found_monic_nonprojective && dualh.lambda_hereditary == TriState::No &&
                  dualh.sides_match && witness_ok);
    }
    {
        // structural identities
        std::mt19937_64 rng(o.seed);
        bool dims_ok = true;
        for (int it = 0; it < 20 && dims_ok; ++it) {
            std::size_t n = 1 + rng() % 6;
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
            std::vector<quiver::Arrow> arrows;
            std::size_t edges = rng() % (n + 2);
            for (std::size_t e = 0; e < edges; ++e) {
                std::size_t s = rng() % n, t = rng() % n;
                if (s == t) continue;
                if (s < t) std::swap(s, t);
                arrows.push_back({"e" + std::to_string(e), s, t});
            }
            Quiver q(labels, arrows);
            auto counts = quiver::path_count_matrix(q);
            long long total = 0;
            for (const auto& row : counts)
                for (long long c : row) total += c;
            auto lambda = algebra::path_algebra_over(dual, q);
            dims_ok = lambda->dim() == dual->dim() * static_cast<std::size_t>(total);
        }
        check("path algebra dimension = dim A x path count on random acyclic quivers", dims_ok);

        bool tensor_ok = true;
        for (int it = 0; it < 10 && tensor_ok; ++it) {
            std::size_t n1 = 1 + rng() % 3, n2 = 1 + rng() % 3;
            Quiver qa = n1 == 1 ? Quiver({"1"}, {})
                                : Quiver({"1", "2"}, {{"a", 1, 0}});
            Quiver qb = n2 == 1 ? Quiver({"1"}, {})
                                : Quiver({"1", "2", "3"}, {{"b1", 1, 0}, {"b2", 2, 1}});
            auto t = quiver::tensor_quiver(qa, qb);
            tensor_ok = t.product.vertex_count() == qa.vertex_count() * qb.vertex_count() &&
                        t.product.arrows().size() ==
                            qa.arrows().size() * qb.vertex_count() +
                                qa.vertex_count() * qb.arrows().size() &&
                        t.relations.size() == qa.arrows().size() * qb.arrows().size();
        }
        check("tensor quiver counts match the closed forms", tensor_ok);

        bool linalg_ok = true;
        Field f3 = Field::prime(3);
        for (int it = 0; it < 1000 && linalg_ok; ++it) {
            const Field& f = it % 2 == 0 ? f2 : f3;
            std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
            Matrix m(rows, cols, f);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c)
                    m.set(r, c, f.from_int(static_cast<std::int64_t>(
                                    rng() % static_cast<std::uint64_t>(f.characteristic()))));
            auto rr = exactlin::rref(m);
            auto rr2 = exactlin::rref(rr.mat);
            linalg_ok = rr.mat == rr2.mat &&
                        exactlin::rank(m) + exactlin::kernel_basis(m).cols() == m.cols();
        }
        check("rref idempotence and rank-nullity on random matrices", linalg_ok);
    }
    return items;
}

} // namespace

} // namespace monicrep::cli
