// quivstat command-line front end. Every subcommand prints one JSON report.

#include <quivstat/quivstat.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace quivstat;

namespace {

enum Exit { ok = 0, property_failure = 1, undecided_exit = 2, usage = 3 };

struct Options {
    std::string command;
    std::string algebra;
    std::string algebra_n;
    std::string m_expr;
    std::string n_expr;
    std::string field;
    std::uint64_t seed = 0;
    std::size_t dim_bound = 0;
    std::size_t budget_iters = 0;
    std::size_t budget_dim = 0;
    bool pretty = false;
};

struct Report {
    json results = json::object();
    json undecided = json::array();
    json failures = json::array();
    int exit = ok;

    void undecide(const std::string& why) {
        undecided.push_back(why);
        if (exit == ok) exit = undecided_exit;
    }
    void fail(const std::string& why) {
        failures.push_back(why);
        exit = property_failure;
    }
};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

json dims_json(const std::vector<std::size_t>& d) { return json(d); }
json dims_json(const IntVector& d) { return json(d); }

template <class K>
json matrix_json(const Matrix<K>& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(Field<K>::to_string(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

template <class K>
json rep_json(const Rep<K>& x) {
    json maps = json::object();
    for (std::size_t a = 0; a < x->quiver().arrows().size(); ++a)
        maps[x->quiver().arrow(a).name] = matrix_json(x->map(a));
    return {{"dims", dims_json(x->dims())}, {"maps", maps}};
}

template <class K>
json morphism_json(const Morphism<K>& f) {
    json maps = json::array();
    for (const auto& m : f.maps()) maps.push_back(matrix_json(m));
    return {{"source", dims_json(f.source()->dims())}, {"target", dims_json(f.target()->dims())}, {"maps", maps}};
}

template <class K>
json module_list(const std::vector<Rep<K>>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(dims_json(x->dims()));
    return out;
}

json classification_json(const ClassificationReport& c) {
    json out = {{"verdict", to_string(c.verdict)}, {"definiteness", to_string(c.definiteness)}};
    out["diagram"] = c.diagram ? json(*c.diagram) : json(nullptr);
    if (!c.radical_vector.empty()) out["radical_vector"] = dims_json(c.radical_vector);
    json euler = json::array();
    for (const auto& row : c.euler.euler) euler.push_back(row);
    out["euler_matrix"] = euler;
    return out;
}

template <class K>
class Session {
public:
    Session(const Options& o, const AlgebraFile& file, Field<K> field)
        : o_(o), rng_(o.seed), alg_(make_algebra(file.bound_quiver, field)) {}

    Rep<K> module(const std::string& expr, const char* flag) {
        if (expr.empty()) throw UsageError(std::string("missing module expression ") + flag);
        return parse_module<K>(alg_, expr, [this](const std::vector<std::size_t>& d) {
            bool undecided = false;
            auto x = detail::generic_indecomposable(alg_, IntVector(d.begin(), d.end()), rng_, undecided);
            if (!x) throw CapExceeded("no certified indecomposable found at the requested dimension vector");
            return *x;
        });
    }

    Report run() {
        Report r;
        const auto& c = o_.command;
        if (c == "hom") hom(r);
        else if (c == "static") statik(r);
        else if (c == "statset") statset(r);
        else if (c == "approx") approx(r);
        else if (c == "abclose") abclose(r);
        else if (c == "abproj") abproj(r);
        else if (c == "nakayama") nakayama(r);
        else if (c == "triple") triple(r);
        else if (c == "classify") r.results = classification_json(classify(alg_->bound_quiver()));
        else if (c == "theorem1") theorem1(r);
        else if (c == "theorem2") theorem2(r);
        else if (c == "paper-examples") examples(r);
        else throw UsageError("unknown command " + c);
        return r;
    }

private:
    std::size_t bound(std::size_t fallback) const { return o_.dim_bound ? o_.dim_bound : fallback; }

    ClosureBudget budget() const {
        ClosureBudget b;
        if (o_.budget_iters) b.iter_cap = o_.budget_iters;
        if (o_.budget_dim) b.dim_cap = o_.budget_dim;
        return b;
    }

    void hom(Report& r) {
        const auto m = module(o_.m_expr, "-M");
        const auto n = module(o_.n_expr, "-N");
        const HomSpace<K> h(m, n);
        json basis = json::array();
        for (const auto& f : h.basis()) basis.push_back(morphism_json(f));
        r.results = {{"M", dims_json(m->dims())},
                     {"N", dims_json(n->dims())},
                     {"hom_dim", h.dim()},
                     {"ext1_dim", ext1_dim(m, n)},
                     {"basis", basis}};
    }

    void statik(Report& r) {
        const auto m = module(o_.m_expr, "-M");
        const auto n = module(o_.n_expr, "-N");
        const auto ctx = make_context(m, rng_);
        const auto ev = is_static(ctx, n);
        r.results = {{"static", ev.is_static},
                     {"evidence", ev.witness},
                     {"routes",
                      {{"mu_isomorphism", ev.mu_isomorphism},
                       {"generation", ev.n_generated && ev.omega_generated},
                       {"approximation_presentation", ev.approximation_presentation},
                       {"hom_exact_presentation", ev.hom_exact_presentation}}},
                     {"n_generated", ev.n_generated},
                     {"omega_generated", ev.omega_generated},
                     {"hom_dim", ev.hom_dim},
                     {"omega", dims_json(ev.approximation.omega->dims())}};
        if (ev.presentation_f) r.results["presentation_f"] = morphism_json(*ev.presentation_f);
        const bool routes_agree = ev.mu_isomorphism == (ev.n_generated && ev.omega_generated) &&
                                  ev.mu_isomorphism == ev.approximation_presentation &&
                                  ev.mu_isomorphism == ev.hom_exact_presentation;
        if (!routes_agree) r.fail("the four characterizations of static disagree");
    }

    void statset(Report& r) {
        const auto ctx = make_context(module(o_.m_expr, "-M"), rng_);
        const auto se = stat_enumerate(ctx, bound(1), rng_);
        json mods = json::array();
        for (std::size_t i = 0; i < se.modules.size(); ++i)
            mods.push_back({{"label", se.labels[i]}, {"dims", dims_json(se.modules[i]->dims())}});
        r.results = {{"modules", mods}, {"completeness", to_string(se.completeness)}};
        if (se.undecided) r.undecide("an indecomposability or isomorphism test was undecided");
    }

    void approx(Report& r) {
        const auto ctx = make_context(module(o_.m_expr, "-M"), rng_);
        const auto n = module(o_.n_expr, "-N");
        const auto a = minimal_right_approximation(ctx, n);
        json types = json::array();
        for (const auto& s : ctx.summand_types()) types.push_back(dims_json(s->dims()));
        r.results = {{"summand_types", types},
                     {"multiplicities", a.multiplicities},
                     {"source", dims_json(a.source->dims())},
                     {"surjective", a.surjective()},
                     {"omega", dims_json(a.omega->dims())},
                     {"q", morphism_json(a.q)}};
    }

    void closure_report(Report& r, const ClosureState<K>& st) {
        json gens = json::array();
        for (std::size_t i = 0; i < st.generators.size(); ++i)
            gens.push_back({{"dims", dims_json(st.generators[i]->dims())}, {"pass", st.born[i]}});
        r.results["generators"] = gens;
        r.results["passes"] = st.generation_index;
        r.results["stable"] = st.stable;
        r.results["sampled"] = st.sampled;
        if (!st.stable) r.undecide("closure not stable within the budget");
        if (st.undecided) r.undecide("a decomposition or isomorphism test was undecided");
    }

    void abclose(Report& r) {
        const auto st = ab_closure(module(o_.m_expr, "-M"), rng_, budget());
        closure_report(r, st);
        if (!st.stable) return;
        const auto rs = relative_simples(st, rng_);
        json simples = json::array();
        for (const auto& s : rs.simples)
            simples.push_back({{"dims", dims_json(s->dims())}, {"loewy_length", relative_loewy_length(s, rs.simples)}});
        std::size_t loewy = 0;
        for (const auto& g : st.generators) loewy = std::max(loewy, relative_loewy_length(g, rs.simples));
        r.results["relative_simples"] = simples;
        r.results["orthogonal"] = rs.orthogonal;
        r.results["bricks"] = rs.bricks;
        r.results["max_relative_loewy_length"] = loewy;
        if (rs.decided != Verdict::yes) r.undecide("relative simples not fully decided");
    }

    void abproj(Report& r) {
        const auto m = module(o_.m_expr, "-M");
        const auto st = ab_closure(m, rng_, budget());
        closure_report(r, st);
        const auto p = is_ab_projective(m, st, rng_);
        r.results["ab_projective"] = to_string(p.projective);
        r.results["within_budget"] = p.within_budget;
        if (p.counterexample) r.results["counterexample"] = morphism_json(*p.counterexample);
        if (p.projective == Verdict::undecided) r.undecide("ab-projectivity undecided");
    }

    void nakayama(Report& r) {
        const auto nk = is_nakayama_algebra(alg_);
        r.results = {{"algebra_nakayama", nk.nakayama}, {"kupisch_series", nk.kupisch_series}};
        if (o_.m_expr.empty()) return;
        const auto ctx = make_context(module(o_.m_expr, "-M"), rng_);
        const auto& gamma = *ctx.gamma();
        const auto ln = is_local_nakayama(gamma, rng_);
        r.results["gamma_dim"] = gamma.dimension();
        r.results["gamma_local_nakayama"] = to_string(ln.local_nakayama);
        r.results["gamma_length"] = ln.length;
        const auto powers = radical_powers(gamma, radical(gamma));
        json ad = json::array();
        for (std::size_t i = 1; i < powers.size(); ++i) {
            const bool yes = is_adstatic(ctx, quotient_of_regular(ctx.gamma(), powers[i]));
            ad.push_back({{"quotient", "Gamma/rad^" + std::to_string(i)}, {"adstatic", yes}});
        }
        r.results["adstatic"] = ad;
        if (ln.local_nakayama == Verdict::undecided) r.undecide("local Nakayama test undecided");
    }

    void triple(Report& r) {
        const auto ctx = make_context(module(o_.m_expr, "-M"), rng_);
        const auto t = is_triple_module(ctx, rng_);
        r.results = {{"triple", to_string(t.triple)}, {"reason", t.reason}};
        if (t.m1) r.results["m1"] = dims_json(t.m1->dims());
        if (t.m2) r.results["m2"] = dims_json(t.m2->dims());
        if (t.f) r.results["f"] = morphism_json(*t.f);
        if (t.triple == Verdict::undecided) r.undecide(t.reason);
    }

    void theorem1(Report& r) {
        const auto rep = theorem1_harness(alg_, bound(2), rng_);
        json mods = json::array();
        for (const auto& m : rep.modules)
            mods.push_back({{"dims", dims_json(m.entry.dims)},
                            {"kind", m.entry.kind},
                            {"label", m.entry.label},
                            {"gamma_dim", m.gamma_dim},
                            {"gamma_local_nakayama", to_string(m.local_nakayama)},
                            {"gamma_length", m.gamma_length},
                            {"closure_size", m.closure_size},
                            {"ab_projective", to_string(m.ab_projective)},
                            {"adstatic_checked", m.adstatic_checked},
                            {"adstatic_all", m.adstatic_all},
                            {"cokernels_checked", m.cokernels_checked},
                            {"cokernels_static", m.cokernels_static},
                            {"grid_truncated", m.grid_truncated}});
        json complete = json::array();
        for (const auto& [d, yes] : rep.completeness) complete.push_back({{"dims", dims_json(d)}, {"complete", yes}});
        r.results = {{"classification", classification_json(rep.classification)},
                     {"modules", mods},
                     {"completeness", complete},
                     {"pass", rep.pass()}};
        for (const auto& u : rep.undecided) r.undecide(u);
        for (const auto& f : rep.failures) r.fail(f);
    }

    void theorem2(Report& r) {
        const auto rep = theorem2_harness(alg_, bound(1), rng_);
        r.results = {{"classification", classification_json(rep.classification)},
                     {"found", rep.found},
                     {"candidates_tried", rep.candidates_tried},
                     {"exhausted", rep.exhausted}};
        if (rep.brick) r.results["brick"] = dims_json((*rep.brick)->dims());
        if (rep.brick) r.results["brick_ext1"] = rep.brick_ext1;
        if (rep.witness) {
            r.results["witness"] = rep_json(*rep.witness);
            r.results["triple"] = to_string(rep.triple->triple);
            r.results["stat_count"] = rep.stat_count;
            r.results["stat_completeness"] = to_string(rep.stat_completeness);
            r.results["end_dim"] = rep.end_dim;
            r.results["witness_brick"] = to_string(rep.witness_brick);
        }
        if (!rep.found) r.undecide("no triple module within the dimension bound");
    }

    void examples(Report& r) {
        json rows = json::array();
        std::size_t passed = 0;
        for (const auto& c : worked_examples(alg_->field(), rng_)) {
            rows.push_back({{"example", c.example},
                            {"check", c.check},
                            {"expected", c.expected},
                            {"actual", c.actual},
                            {"pass", c.pass}});
            if (c.pass) ++passed;
            else r.fail(c.example + ": " + c.check);
        }
        r.results = {{"checks", rows}, {"passed", passed}, {"total", rows.size()}};
    }

    const Options& o_;
    Rng rng_;
    AlgebraPtr<K> alg_;
};

std::string default_algebra(const std::string& command) {
    if (command == "theorem2") return "kronecker3";
    if (command == "paper-examples") return "kronecker";
    return "";
}

json inputs_json(const Options& o, const AlgebraFile& file) {
    json in = {{"algebra", o.algebra}, {"field", file.field.to_string()}};
    if (!o.algebra_n.empty()) in["algebra_n"] = o.algebra_n;
    if (!o.m_expr.empty()) in["M"] = o.m_expr;
    if (!o.n_expr.empty()) in["N"] = o.n_expr;
    if (o.dim_bound) in["dim_bound"] = o.dim_bound;
    if (o.budget_iters) in["budget_iters"] = o.budget_iters;
    if (o.budget_dim) in["budget_dim"] = o.budget_dim;
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a(o.command + "\n" + print_algebra(file) + "\n" + in.dump())));
    in["digest"] = hex;
    return in;
}

void print_pretty(const json& doc, std::ostream& os) {
    os << "command: " << doc["command"].get<std::string>() << "  seed: " << doc["seed"].get<std::uint64_t>() << "\n";
    const auto& res = doc["results"];
    if (res.contains("checks")) {
        for (const auto& c : res["checks"])
            os << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << c["example"].get<std::string>() << " | "
               << c["check"].get<std::string>() << " | expected " << c["expected"].get<std::string>() << " | got "
               << c["actual"].get<std::string>() << "\n";
        os << res["passed"].get<std::size_t>() << "/" << res["total"].get<std::size_t>() << " checks passed\n";
    } else {
        for (const auto& [k, v] : res.items()) os << k << ": " << v.dump() << "\n";
    }
    for (const auto& u : doc["undecided"]) os << "undecided: " << u.get<std::string>() << "\n";
    for (const auto& f : doc["failures"]) os << "failure: " << f.get<std::string>() << "\n";
}

int execute(Options o) {
    if (o.algebra.empty()) o.algebra = default_algebra(o.command);
    if (o.algebra.empty()) throw UsageError("no algebra given");
    AlgebraFile file = load_algebra(o.algebra);
    if (!o.field.empty()) file.field = parse_field_spec(o.field);
    if (!o.algebra_n.empty()) {
        AlgebraFile other = load_algebra(o.algebra_n);
        if (!o.field.empty()) other.field = file.field;
        if (!(other == file)) throw UsageError("M and N are modules over different algebras");
    }

    Report r;
    if (file.field.kind == FieldSpec::Kind::rationals)
        r = Session<Rational>(o, file, Field<Rational>{}).run();
    else
        r = Session<Zp>(o, file, Field<Zp>{file.field.characteristic}).run();

    json doc = {{"command", o.command},
                {"seed", o.seed},
                {"inputs", inputs_json(o, file)},
                {"results", r.results},
                {"undecided", r.undecided},
                {"failures", r.failures}};
    if (o.pretty) print_pretty(doc, std::cout);
    else std::cout << doc.dump(2) << "\n";
    return r.exit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Static modules, ab-closures and representation type of bound quiver algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--field", o.field, "Override the field: q or p=<prime>");
    app.add_option("--seed", o.seed, "Seed for sampled searches")->capture_default_str();
    app.add_option("--dim-bound", o.dim_bound, "Dimension bound for enumerations");
    app.add_option("--budget-iters", o.budget_iters, "Closure passes");
    app.add_option("--budget-dim", o.budget_dim, "Closure dimension cap");
    app.add_flag("--pretty", o.pretty, "Human-readable output");

    const std::vector<std::pair<std::string, std::string>> commands{
        {"hom", "Hom and Ext^1 between M and N"},
        {"static", "Decide whether N is M-static, by every characterization"},
        {"statset", "Indecomposable M-static modules within the bound"},
        {"approx", "Minimal right M-approximation of N"},
        {"abclose", "ab-closure of M and its relative simples"},
        {"abproj", "Whether M is projective in its ab-closure"},
        {"nakayama", "Nakayama tests for the algebra and for End(M)"},
        {"triple", "Whether M is a triple module"},
        {"classify", "Representation type of a hereditary algebra"},
        {"theorem1", "Bounded check of the tame-case equivalences"},
        {"theorem2", "Search for a non-brick M with stat M = add M"},
        {"paper-examples", "Run the worked-example suite"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("algebra,--algebra", o.algebra, "Registry name or path to an algebra file");
        sub->add_option("--algebra-n", o.algebra_n, "Algebra of N, must equal that of M");
        sub->add_option("-M", o.m_expr, "Module expression for M");
        sub->add_option("-N", o.n_expr, "Module expression for N");
        sub->callback([&o, name = name] { o.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }
    try {
        return execute(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const CapExceeded& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return undecided_exit;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return property_failure;
    }
}
