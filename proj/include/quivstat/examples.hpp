#pragma once

// The worked examples as a table of named checks with expected and computed
// values.

#include "harness.hpp"
#include "registry.hpp"

namespace quivstat {

struct ExampleCheck {
    std::string example;
    std::string check;
    std::string expected;
    std::string actual;
    bool pass = false;
};

namespace detail {

class CheckTable {
public:
    explicit CheckTable(std::string example) : example_(std::move(example)) {}

    template <class T>
    void expect(const std::string& check, const T& expected, const T& actual) {
        rows_.push_back({example_, check, show(expected), show(actual), expected == actual});
    }
    void expect_true(const std::string& check, bool actual) { expect(check, true, actual); }
    void expect_false(const std::string& check, bool actual) { expect(check, false, actual); }

    std::vector<ExampleCheck>& rows() { return rows_; }

private:
    static std::string show(bool b) { return b ? "true" : "false"; }
    static std::string show(std::size_t n) { return std::to_string(n); }
    static std::string show(const std::string& s) { return s; }
    static std::string show(const std::vector<std::size_t>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    }
    static std::string show(const std::vector<std::vector<std::size_t>>& vs) {
        std::string s = "{";
        for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + show(vs[i]);
        return s + "}";
    }

    std::string example_;
    std::vector<ExampleCheck> rows_;
};

template <class K>
std::vector<std::vector<std::size_t>> sorted_dims(const std::vector<Rep<K>>& xs) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& x : xs) out.push_back(x->dims());
    std::sort(out.begin(), out.end());
    return out;
}

/// Composition factors of a serial module from the top down (1-based vertices).
template <class K>
std::vector<std::size_t> serial_layers(const Rep<K>& x) {
    const auto series = radical_series(x);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k + 1 < series.size(); ++k)
        for (std::size_t v = 0; v < x->vertex_count(); ++v)
            if (series[k][v].cols() > series[k + 1][v].cols()) out.push_back(v + 1);
    return out;
}

}  // namespace detail

/// Remark algebra: M = I(1), N = M / soc M, and the sequence M -f-> M -q-> N -> 0
/// with im f = S(1).
template <class K>
struct RemarkData {
    AlgebraPtr<K> algebra;
    Rep<K> m, n, s;
    Morphism<K> f, q;
};

template <class K>
RemarkData<K> remark_data(Field<K> field, Rng& rng) {
    RemarkData<K> d;
    d.algebra = registry_algebra("remark", field);
    d.m = injective(d.algebra, 0);
    d.s = simple(d.algebra, 0);
    d.n = quotient_representation(d.m, socle_subspaces(d.m)).first;
    const HomSpace<K> end(d.m, d.m);
    bool exhausted = false;
    std::optional<Morphism<K>> f;
    search_hom(end, rng, [&](const Morphism<K>& g) {
        if (g.rank() != 1 || are_isomorphic(image(g).image, d.s, rng).verdict != Verdict::yes) return false;
        f = g;
        return true;
    }, exhausted);
    if (!f) throw InternalError("no endomorphism of I(1) with image S(1)");
    d.f = *f;
    d.q = cokernel(d.f).second;
    return d;
}

/// D4 example: X = tau^- S(0) realized generically, M = S(0) + X, N = I(0).
template <class K>
struct D4Data {
    AlgebraPtr<K> algebra;
    IntVector tau_inverse_dims;
    Rep<K> s0, x, m, n;
};

template <class K>
D4Data<K> d4_data(Field<K> field, Rng& rng) {
    D4Data<K> d;
    d.algebra = registry_algebra("d4", field);
    const auto eu = euler_data(d.algebra->bound_quiver());
    d.tau_inverse_dims = coxeter_translate_dim(eu, {1, 0, 0, 0}, TranslateDirection::tau_inverse).dims;
    bool undecided = false;
    auto x = detail::generic_indecomposable(d.algebra, d.tau_inverse_dims, rng, undecided);
    if (!x) throw InternalError("no indecomposable at the translated dimension vector");
    d.x = *x;
    d.s0 = simple(d.algebra, 0);
    d.m = direct_sum(d.algebra, {d.s0, d.x}).sum;
    d.n = injective(d.algebra, 0);
    return d;
}

template <class K>
std::vector<ExampleCheck> worked_examples(Field<K> field, Rng& rng) {
    std::vector<ExampleCheck> all;
    auto take = [&](detail::CheckTable& t) { all.insert(all.end(), t.rows().begin(), t.rows().end()); };

    {
        detail::CheckTable t("remark");
        const auto d = remark_data(field, rng);
        t.expect("dim A", std::size_t{7}, d.algebra->dimension());
        t.expect("dim Hom(M,N)", std::size_t{1}, hom_dim(d.m, d.n));
        t.expect("dim Hom(M,S)", std::size_t{2}, hom_dim(d.m, d.s));
        t.expect("dim N", std::size_t{3}, d.n->total_dim());
        t.expect("N indecomposable", std::string("yes"), to_string(is_indecomposable(d.n, rng)));
        const auto ctx = make_context(d.m, rng);
        const auto ev = is_static(ctx, d.n);
        t.expect_true("N static (mu iso)", ev.mu_isomorphism);
        t.expect_true("N static (generation)", ev.n_generated && ev.omega_generated);
        t.expect_true("N static (approximation presentation)", ev.approximation_presentation);
        t.expect_true("N static (Hom-exact presentation)", ev.hom_exact_presentation);
        t.expect_true("coker f isomorphic to N", are_isomorphic(d.q.target(), d.n, rng).verdict == Verdict::yes);
        const auto rep = presentation_report(d.m, d.f, d.q);
        t.expect_true("sequence exact", rep.exact);
        t.expect_true("q right approximation", rep.q_right_approximation);
        t.expect_false("sequence Hom(M,-)-exact", rep.hom_exact);
        t.expect_true("ker Hom(M,q) strictly contains im Hom(M,f)", rep.hom_kernel_dim > rep.hom_image_dim);
        const auto apx = minimal_right_approximation(ctx, d.s);
        t.expect("approximation of S from copies of M", std::size_t{2}, apx.multiplicities.at(0));
        t.expect_false("S static", is_static(ctx, d.s).is_static);
        t.expect("N in cok(M)", std::string("yes_with_witness"), to_string(cok_membership(ctx, d.n, 1, rng).verdict));
        take(t);
    }
    {
        detail::CheckTable t("brick on the Kronecker quiver");
        const auto alg = registry_algebra("kronecker", field);
        const auto m = projective(alg, 0);
        t.expect("M brick", std::string("yes"), to_string(is_brick(m, rng)));
        if constexpr (Field<K>::finite) {
            const auto st = ab_closure(m, rng);
            t.expect_true("closure stable", st.stable);
            t.expect("indecomposables in ab M", std::size_t{1}, st.generators.size());
        }
        take(t);
    }
    if constexpr (Field<K>::finite) {
        detail::CheckTable t("Kronecker regular module");
        const auto alg = registry_algebra("kronecker", field);
        for (std::size_t e = 2; e <= 3; ++e) {
            const auto fam = kronecker_family(alg, e);
            const auto& m = fam.front().module;  // the point x = 0 with multiplicity e
            const auto st = ab_closure(m, rng);
            const std::string tag = " (e=" + std::to_string(e) + ")";
            t.expect_true("closure stable" + tag, st.stable);
            t.expect("indecomposables in ab M" + tag, e, st.generators.size());
            const auto rs = relative_simples(st, rng);
            t.expect("relative simples" + tag, std::vector<std::vector<std::size_t>>{{1, 1}},
                     detail::sorted_dims(rs.simples));
        }
        take(t);
    }
    if constexpr (Field<K>::finite) {
        detail::CheckTable t("3-Kronecker module with dim End M = 2");
        const auto alg = registry_algebra("loop_star2", field);
        const auto m = injective(alg, 0);
        const auto ctx = make_context(m, rng);
        t.expect("dim End M", std::size_t{2}, ctx.end.hom->dim());
        const auto g = detail::radical_generator(ctx);
        t.expect_true("nonzero nilpotent endomorphism exists", g.has_value());
        if (g) {
            const auto cok = decompose(cokernel(*g).first, rng);
            std::vector<Rep<K>> pieces = cok.pieces;
            t.expect("cokernel summands", detail::sorted_dims(std::vector<Rep<K>>{simple(alg, 0), simple(alg, 1), simple(alg, 2)}),
                     detail::sorted_dims(pieces));
        }
        const auto st = ab_closure(m, rng);
        bool all_simples = true;
        for (std::size_t v = 0; v < alg->quiver().vertex_count(); ++v) {
            bool found = false;
            for (const auto& x : st.generators)
                if (are_isomorphic(x, simple(alg, v), rng).verdict == Verdict::yes) found = true;
            all_simples = all_simples && found;
        }
        t.expect_true("closure stable", st.stable);
        t.expect_true("ab M contains every simple", all_simples);
        take(t);
    }
    if constexpr (Field<K>::finite) {
        detail::CheckTable t("S(1) + I(1) on 1 <- 2 <- 3");
        const auto alg = registry_algebra("a3", field);
        const auto m = direct_sum(alg, {simple(alg, 0), injective(alg, 0)}).sum;
        t.expect("dim I(1)", std::vector<std::size_t>{1, 1, 1}, injective(alg, 0)->dims());
        const auto esc = add_cokernel_escape(m, rng);
        t.expect("add M closed under cokernels", std::string("no"), to_string(esc.closed));
        t.expect("escaping cokernel", std::vector<std::size_t>{0, 1, 1},
                 esc.summand ? (*esc.summand)->dims() : std::vector<std::size_t>{});
        const auto st = ab_closure(m, rng);
        t.expect_true("closure stable", st.stable);
        t.expect_true("ab M strictly larger than add M", st.generators.size() > 2);
        take(t);
    }
    {
        detail::CheckTable t("Nakayama (8,8,7)");
        const auto alg = registry_algebra("nakayama887", field);
        const auto nk = is_nakayama_algebra(alg);
        t.expect_true("Nakayama algebra", nk.nakayama);
        t.expect("Kupisch series", std::vector<std::size_t>{8, 8, 7}, nk.kupisch_series);
        const auto m = projective(alg, 0);
        const auto ctx = make_context(m, rng);
        t.expect("dim End M", std::size_t{3}, ctx.end.hom->dim());
        const auto ln = is_local_nakayama(*ctx.gamma(), rng);
        t.expect("Gamma local Nakayama", std::string("yes"), to_string(ln.local_nakayama));
        t.expect("Gamma length", std::size_t{3}, ln.length);
        t.expect("[3]S(1) layers", std::vector<std::size_t>{1, 2, 3}, detail::serial_layers(serial_module(alg, 0, 3)));
        const auto se = stat_enumerate(ctx, 1, rng);
        t.expect("stat M completeness", std::string("complete"), to_string(se.completeness));
        std::vector<Rep<K>> expected{m, serial_module(alg, 0, 3), serial_module(alg, 0, 6)};
        std::size_t matched = 0;
        for (const auto& x : expected)
            for (const auto& y : se.modules)
                if (are_isomorphic(x, y, rng).verdict == Verdict::yes) ++matched;
        t.expect("stat M = {M, [3]S(1), [6]S(1)}", std::string("3 of 3"),
                 std::to_string(matched) + " of " + std::to_string(se.modules.size()));
        const auto rad = radical(*ctx.gamma());
        const auto powers = radical_powers(*ctx.gamma(), rad);
        bool adstatic = true;
        for (std::size_t i = 1; i < powers.size(); ++i)
            adstatic = adstatic && is_adstatic(ctx, quotient_of_regular(ctx.gamma(), powers[i]));
        t.expect_true("Gamma/rad^i adstatic for i = 1, 2, 3", adstatic);
        if constexpr (Field<K>::finite) {
            const auto st = ab_closure(m, rng);
            t.expect_true("closure stable", st.stable);
            const auto rs = relative_simples(st, rng);
            t.expect("relative simples", std::size_t{2}, rs.simples.size());
            t.expect_true("relative simples orthogonal bricks", rs.orthogonal && rs.bricks);
            t.expect("ab-projective", std::string("yes"), to_string(is_ab_projective(m, st, rng).projective));
        }
        take(t);
    }
    if constexpr (Field<K>::finite) {
        detail::CheckTable t("D4 subspace");
        const auto cls = classify(registry_algebra("d4", field)->bound_quiver());
        t.expect("classification", std::string("representation_finite"), to_string(cls.verdict));
        t.expect("diagram", std::string("D4"), cls.diagram.value_or("none"));
        const auto d = d4_data(field, rng);
        t.expect("dim tau^- S(0)", std::vector<std::size_t>{2, 1, 1, 1}, d.x->dims());
        t.expect("dim Hom(S(0), X)", std::size_t{2}, hom_dim(d.s0, d.x));
        t.expect("dim Hom(X, S(0))", std::size_t{0}, hom_dim(d.x, d.s0));
        const auto ctx = make_context(d.m, rng);
        t.expect("dim Gamma(M)", std::size_t{4}, ctx.gamma()->dimension());
        const auto ev = is_static(ctx, d.n);
        t.expect_false("I(0) static", ev.is_static);
        t.expect_false("Omega generated by M", ev.omega_generated);
        const auto omega = decompose(ev.approximation.omega, rng);
        std::vector<Rep<K>> length2{projective(d.algebra, 1), projective(d.algebra, 2), projective(d.algebra, 3)};
        t.expect("Omega summands", detail::sorted_dims(length2), detail::sorted_dims(omega.pieces));
        t.expect("approximation source dim", std::size_t{10}, ev.approximation.source->total_dim());
        take(t);
    }
    return all;
}

}  // namespace quivstat
