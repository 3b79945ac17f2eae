// Static modules, ab-closures, representation type and the worked examples.

#include <quivstat/quivstat.hpp>

#include <catch_amalgamated.hpp>

using namespace quivstat;

namespace {

using Dims = std::vector<std::size_t>;

// Determinant of a small integer matrix by fraction-free elimination.
long long det(IntMatrix a) {
    const std::size_t n = a.size();
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntMatrix principal(const IntMatrix& s, const std::vector<std::size_t>& idx) {
    IntMatrix m(idx.size(), IntVector(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m[i][j] = s[idx[i]][idx[j]];
    return m;
}

// Sylvester for definiteness; all principal minors for semidefiniteness.
RepresentationType oracle_type(const IntMatrix& s) {
    const std::size_t n = s.size();
    bool definite = true;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        definite = definite && det(principal(s, idx)) > 0;
    }
    if (definite) return RepresentationType::representation_finite;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) idx.push_back(i);
        if (det(principal(s, idx)) < 0) return RepresentationType::wild;
    }
    return RepresentationType::tame;
}

// Random acyclic orientation of an edge list (multi-edges allowed).
BoundQuiver orient(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges, Rng& rng) {
    while (true) {
        Quiver q(n);
        std::size_t k = 0;
        for (auto [a, b] : edges) {
            if (rng() % 2) std::swap(a, b);
            q.add_arrow("x" + std::to_string(k++), a, b);
        }
        if (q.is_acyclic()) return {q, {}};
    }
}

std::vector<std::pair<std::size_t, std::size_t>> path_edges(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return e;
}

template <class K>
std::vector<Dims> sorted_dims(const std::vector<Rep<K>>& xs) {
    std::vector<Dims> out;
    for (const auto& x : xs) out.push_back(x->dims());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("representation type agrees with principal-minor tests on random quivers") {
    Rng rng(21);
    std::size_t seen[3] = {0, 0, 0};
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 2 + rng() % 4;
        auto edges = path_edges(n);  // a spanning path keeps the graph connected
        for (std::size_t extra = rng() % 3; extra > 0; --extra) {
            const std::size_t a = rng() % n, b = rng() % n;
            if (a != b) edges.push_back({a, b});
        }
        const auto bq = orient(n, edges, rng);
        const auto r = classify(bq);
        CHECK(r.verdict == oracle_type(r.euler.symmetrization));
        ++seen[static_cast<int>(r.verdict)];
        if (r.verdict == RepresentationType::tame) {
            CHECK(quadratic_form(r.euler, r.radical_vector) == 0);
            CHECK(std::all_of(r.radical_vector.begin(), r.radical_vector.end(), [](long long v) { return v > 0; }));
        }
    }
    CHECK(seen[0] > 0);
    CHECK(seen[1] > 0);
    CHECK(seen[2] > 0);
}

TEST_CASE("Dynkin and Euclidean diagrams are recognized in every orientation") {
    Rng rng(22);
    struct Case {
        std::string name;
        std::size_t n;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        RepresentationType type;
        IntVector delta;
    };
    std::vector<Case> cases;
    for (std::size_t n = 1; n <= 6; ++n)
        cases.push_back({"A" + std::to_string(n), n, path_edges(n), RepresentationType::representation_finite, {}});
    for (std::size_t n = 4; n <= 6; ++n) {
        auto e = path_edges(n - 1);
        e.push_back({n - 3, n - 1});
        cases.push_back({"D" + std::to_string(n), n, e, RepresentationType::representation_finite, {}});
    }
    cases.push_back({"E6", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}, RepresentationType::representation_finite, {}});
    cases.push_back({"~A1", 2, {{0, 1}, {0, 1}}, RepresentationType::tame, {1, 1}});
    for (std::size_t n = 3; n <= 6; ++n) {
        auto e = path_edges(n);
        e.push_back({n - 1, 0});
        cases.push_back({"~A" + std::to_string(n - 1), n, e, RepresentationType::tame, IntVector(n, 1)});
    }
    cases.push_back({"~D4", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, RepresentationType::tame, {2, 1, 1, 1, 1}});
    cases.push_back({"~D5", 6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}}, RepresentationType::tame, {2, 1, 1, 2, 1, 1}});
    for (const auto& c : cases)
        for (int t = 0; t < 4; ++t) {
            INFO(c.name);
            const auto r = classify(orient(c.n, c.edges, rng));
            CHECK(r.diagram == std::optional<std::string>(c.name));
            CHECK(r.verdict == c.type);
            if (!c.delta.empty()) CHECK(r.radical_vector == c.delta);
        }
    const auto wild = classify(load_algebra("kronecker3").bound_quiver);
    CHECK(wild.verdict == RepresentationType::wild);
    CHECK_FALSE(wild.diagram.has_value());
    CHECK(classify(load_algebra("five_subspace").bound_quiver).verdict == RepresentationType::wild);
    CHECK_THROWS_AS(classify(load_algebra("remark").bound_quiver), UsageError);
}

TEST_CASE("the four characterizations of static modules agree") {
    Rng rng(23);
    for (std::uint32_t p : {2u, 3u}) {
        const auto alg = registry_algebra("remark", Field<Zp>{p});
        std::vector<Rep<Zp>> mods;
        for (const char* e : {"S(1)", "S(2)", "P(1)", "P(2)", "I(1)", "I(2)", "I(1)/soc", "P(1)/soc"})
            mods.push_back(parse_module(alg, e));
        for (const char* m_expr : {"I(1)", "P(1)", "P(1) + P(2)", "I(1) + S(2)"}) {
            const auto ctx = make_context(parse_module(alg, m_expr), rng);
            for (const auto& n : mods) {
                INFO(m_expr << " with N of dims " << n->dims()[0] << "," << n->dims()[1]);
                const auto ev = is_static(ctx, n);
                CHECK(ev.is_static == ev.mu_isomorphism);
                CHECK(ev.mu_isomorphism == (ev.n_generated && ev.omega_generated));
                CHECK(ev.mu_isomorphism == ev.approximation_presentation);
                CHECK(ev.mu_isomorphism == ev.hom_exact_presentation);
                CHECK(ev.n_generated == generated_by(ctx.module, n));
                const auto& a = ev.approximation;
                CHECK(rank(hom_map(ctx.module, a.q)) == hom_dim(ctx.module, n));
                if (ev.is_static) CHECK(mu_map(ctx, n).mu.is_isomorphism());
            }
        }
    }
}

TEST_CASE("remark algebra: the approximation presentation is not Hom-exact") {
    Rng rng(24);
    const auto d = remark_data(Field<Zp>{2}, rng);
    CHECK(d.algebra->dimension() == 7);
    CHECK(hom_dim(d.m, d.n) == 1);
    CHECK(hom_dim(d.m, d.s) == 2);
    const auto rep = presentation_report(d.m, d.f, d.q);
    CHECK(rep.exact);
    CHECK(rep.q_right_approximation);
    CHECK_FALSE(rep.hom_exact);
    CHECK(rep.hom_kernel_dim == 2);
    CHECK(rep.hom_image_dim == 1);
    const auto ctx = make_context(d.m, rng);
    const auto apx = minimal_right_approximation(ctx, d.s);
    CHECK(apx.multiplicities == Dims{2});
    CHECK(apx.surjective());
    CHECK_FALSE(is_static(ctx, d.s).omega_generated);
    const auto cok = cok_membership(ctx, d.n, 1, rng);
    CHECK(cok.verdict == CokMembership::yes_with_witness);
    REQUIRE(cok.witness);
    CHECK(are_isomorphic(cokernel(*cok.witness).first, d.n, rng).verdict == Verdict::yes);
}

TEST_CASE("cyclic Nakayama algebra: stat of P(1) and adstatic quotients") {
    Rng rng(25);
    const auto alg = registry_algebra("nakayama887", Field<Zp>{2});
    const auto ctx = make_context(projective(alg, 0), rng);
    const auto se = stat_enumerate(ctx, 1, rng);
    CHECK(se.completeness == Completeness::complete);
    CHECK(sorted_dims(se.modules) == std::vector<Dims>{{1, 1, 1}, {2, 2, 2}, {3, 3, 2}});
    for (const auto& x : se.modules) CHECK(mu_map(ctx, x).mu.is_isomorphism());
    const auto& gamma = ctx.gamma();
    const auto powers = radical_powers(*gamma, radical(*gamma));
    REQUIRE(powers.size() == 4);
    for (std::size_t i = 0; i < powers.size(); ++i) {
        const auto x = quotient_of_regular(gamma, powers[i]);
        const auto nu = nu_map(ctx, x);
        CHECK(is_invertible(nu.nu) == (x.dim() > 0 || nu.nu.rows() == 0));
        CHECK(is_adstatic(ctx, x));
    }
    CHECK(is_triple_module(ctx, rng).triple == Verdict::no);
}

TEST_CASE("ab-closures of Kronecker regular modules") {
    Rng rng(26);
    const auto alg = registry_algebra("kronecker", Field<Zp>{2});
    for (std::size_t e = 1; e <= 3; ++e) {
        for (const auto& entry : kronecker_family(alg, e)) {
            INFO(entry.label);
            const auto st = ab_closure(entry.module, rng);
            CHECK(st.stable);
            const std::size_t exponent = std::stoul(entry.label.substr(entry.label.rfind('^') + 1));
            CHECK(st.generators.size() == exponent);
            const auto rs = relative_simples(st, rng);
            CHECK(rs.simples.size() == 1);
            CHECK(rs.bricks);
            CHECK(is_ab_projective(entry.module, st, rng).projective == Verdict::yes);
        }
    }
    const auto brick = ab_closure(projective(alg, 0), rng);
    CHECK(brick.generators.size() == 1);
}

TEST_CASE("ab-closure of P(1) over the cyclic Nakayama algebra") {
    Rng rng(27);
    const auto alg = registry_algebra("nakayama887", Field<Zp>{2});
    const auto m = projective(alg, 0);
    const auto st = ab_closure(m, rng);
    REQUIRE(st.stable);
    CHECK(st.generators.size() == 9);
    const auto rs = relative_simples(st, rng);
    CHECK(sorted_dims(rs.simples) == std::vector<Dims>{{0, 0, 1}, {1, 1, 0}});
    CHECK(rs.orthogonal);
    CHECK(rs.bricks);
    std::size_t loewy = 0;
    for (const auto& g : st.generators) loewy = std::max(loewy, relative_loewy_length(g, rs.simples));
    CHECK(loewy == 5);
    CHECK(relative_loewy_length(m, rs.simples) == 5);
    CHECK(is_ab_projective(m, st, rng).projective == Verdict::yes);

    // closure property: kernels and cokernels between generators stay inside
    auto inside = [&](const Rep<Zp>& x) {
        for (const auto& piece : decompose(x, rng).pieces) {
            bool found = false;
            for (const auto& g : st.generators) found = found || are_isomorphic(piece, g, rng).verdict == Verdict::yes;
            if (!found) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < st.generators.size(); ++i)
        for (std::size_t j = 0; j < st.generators.size(); ++j) {
            const HomSpace<Zp> h(st.generators[i], st.generators[j]);
            for (int t = 0; t < 2 && h.dim() > 0; ++t) {
                std::vector<Zp> c;
                for (std::size_t k = 0; k < h.dim(); ++k) c.push_back(alg->field().random(rng));
                const auto f = h.combine(c);
                CHECK(inside(kernel(f).first));
                CHECK(inside(cokernel(f).first));
            }
        }
}

TEST_CASE("cokernel escape for S(1) + I(1) on the linear A3 quiver") {
    Rng rng(28);
    const auto alg = registry_algebra("a3", Field<Zp>{2});
    const auto m = parse_module(alg, "S(1) + I(1)");
    const auto esc = add_cokernel_escape(m, rng);
    CHECK(esc.closed == Verdict::no);
    REQUIRE(esc.summand);
    CHECK((*esc.summand)->dims() == Dims{0, 1, 1});
    const auto st = ab_closure(m, rng);
    CHECK(st.stable);
    CHECK(sorted_dims(st.generators) == std::vector<Dims>{{0, 1, 1}, {1, 0, 0}, {1, 1, 1}});
    CHECK(add_cokernel_escape(parse_module(alg, "S(1) + S(2) + S(3)"), rng).closed == Verdict::yes);
    CHECK(add_cokernel_escape(parse_module(alg, "P(1) + P(2)"), rng).closed == Verdict::no);
}

TEST_CASE("an injective with a two-dimensional endomorphism ring generates every simple") {
    Rng rng(29);
    const auto alg = registry_algebra("loop_star2", Field<Zp>{2});
    const auto m = injective(alg, 0);
    CHECK(m->dims() == Dims{2, 1, 1});
    CHECK(end_algebra(m).algebra->dimension() == 2);
    const auto st = ab_closure(m, rng);
    CHECK(st.stable);
    CHECK(st.generators.size() == 11);
}

TEST_CASE("triple modules") {
    Rng rng(30);
    const auto k3 = registry_algebra("kronecker3", Field<Zp>{2});
    const auto rep = theorem2_harness(k3, 1, rng);
    REQUIRE(rep.found);
    REQUIRE(rep.witness);
    CHECK((*rep.witness)->total_dim() <= 6);
    const auto ctx = make_context(*rep.witness, rng);
    const auto t = is_triple_module(ctx, rng);
    CHECK(t.triple == Verdict::yes);
    CHECK(is_brick(t.m1, rng) == Verdict::yes);
    CHECK(end_algebra(*rep.witness).algebra->dimension() == 2);

    const auto kron = registry_algebra("kronecker", Field<Zp>{2});
    for (std::size_t e : {2u, 3u}) {
        const auto c = make_context(kronecker_family(kron, e).front().module, rng);
        CHECK(is_triple_module(c, rng).triple == Verdict::no);
    }
    CHECK_THROWS_AS(theorem2_harness(kron, 1, rng), UsageError);
    CHECK_THROWS_AS(theorem1_harness(k3, 1, rng), UsageError);
}

TEST_CASE("tame harness on the linear A3 quiver") {
    Rng rng(31);
    const auto rep = theorem1_harness(registry_algebra("a3", Field<Zp>{3}), 1, rng);
    CHECK(rep.modules.size() == 6);
    CHECK(rep.pass());
    CHECK(rep.undecided.empty());
}

TEST_CASE("worked examples pass and are reproducible") {
    for (std::uint32_t p : {2u, 3u}) {
        Rng a(0), b(0);
        const auto first = worked_examples(Field<Zp>{p}, a);
        const auto second = worked_examples(Field<Zp>{p}, b);
        REQUIRE(first.size() == second.size());
        for (std::size_t i = 0; i < first.size(); ++i) {
            INFO(first[i].example << ": " << first[i].check << " expected " << first[i].expected << " got "
                                  << first[i].actual);
            CHECK(first[i].pass);
            CHECK(first[i].actual == second[i].actual);
        }
    }
    Rng rng(0);
    for (const auto& c : worked_examples(Field<Rational>{}, rng)) {
        INFO(c.example << ": " << c.check);
        CHECK(c.pass);
    }
}
