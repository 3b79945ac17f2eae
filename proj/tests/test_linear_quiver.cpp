// Scalars, matrices, path algebras, representations and the text formats.

#include <quivstat/quivstat.hpp>

#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>

using namespace quivstat;

namespace {

const std::vector<std::uint32_t> primes{2, 3, 5, 7, 65521};

// Brute-force kernel size over F_p, counted by enumerating every vector.
std::uint64_t kernel_size(const Matrix<Zp>& a, const Field<Zp>& f) {
    std::uint64_t count = 0;
    for_each_vector(f, a.cols(), [&](const std::vector<Zp>& v) {
        Matrix<Zp> col(f, v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
        if ((a * col).is_zero()) ++count;
        return true;
    });
    return count;
}

// Brute-force Hom(X, Y) over a finite field: count commuting families of matrices.
std::uint64_t count_homs(const Rep<Zp>& x, const Rep<Zp>& y) {
    std::size_t n = 0;
    for (std::size_t v = 0; v < x->vertex_count(); ++v) n += x->dim(v) * y->dim(v);
    std::uint64_t count = 0;
    for_each_vector(x->field(), n, [&](const std::vector<Zp>& entries) {
        if (unflatten(x, y, entries).commutes()) ++count;
        return true;
    });
    return count;
}

std::vector<Rep<Zp>> remark_modules(const AlgebraPtr<Zp>& alg) {
    std::vector<Rep<Zp>> out;
    for (std::size_t v = 0; v < 2; ++v)
        for (const auto& x : {simple(alg, v), projective(alg, v), injective(alg, v)}) out.push_back(x);
    out.push_back(parse_module(alg, "I(1)/soc"));
    return out;
}

std::size_t log_p(std::uint64_t n, std::uint64_t p) {
    std::size_t e = 0;
    while (n > 1) {
        REQUIRE(n % p == 0);
        n /= p;
        ++e;
    }
    return e;
}

}  // namespace

TEST_CASE("prime field axioms hold on random elements") {
    Rng rng(1);
    for (auto p : primes) {
        const Field<Zp> f{p};
        for (int i = 0; i < 200; ++i) {
            const Zp a = f.random(rng), b = f.random(rng), c = f.random(rng);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a - a == f.zero());
            CHECK(a + (-a) == f.zero());
            if (!a.is_zero()) CHECK(a * Field<Zp>::inv(a) == f.one());
        }
    }
    CHECK_THROWS_AS(Field<Zp>::inv(Field<Zp>{5}.zero()), UsageError);
    CHECK_THROWS_AS(FieldSpec::prime(4), UsageError);
}

TEST_CASE("rank over F_p agrees with brute-force kernel counts") {
    Rng rng(2);
    for (std::uint32_t p : {2u, 3u}) {
        const Field<Zp> f{p};
        for (int t = 0; t < 60; ++t) {
            const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
            const auto a = random_matrix(f, rows, cols, rng);
            const auto r = rank(a);
            CHECK(r == cols - log_p(kernel_size(a, f), p));
            CHECK(kernel(a).cols() == cols - r);
            CHECK((a * kernel(a)).is_zero());
            CHECK(column_space(a).cols() == r);
        }
    }
}

TEST_CASE("rational linear algebra: kernels, solves and inverses") {
    Rng rng(3);
    const Field<Rational> q;
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng() % 4;
        const auto a = random_matrix(q, n, n + 1, rng);
        CHECK((a * kernel(a)).is_zero());
        CHECK(rank(a) + kernel(a).cols() == n + 1);
        const auto g = random_invertible(q, n, rng);
        const auto gi = inverse(g);
        REQUIRE(gi.has_value());
        CHECK(*gi * g == Matrix<Rational>::identity(q, n));
        const auto b = random_matrix(q, n, 2, rng);
        const auto x = solve(g, b);
        REQUIRE(x.has_value());
        CHECK(g * *x == b);
    }
    const auto s = lift(q, {{1, 2}, {2, 4}});
    CHECK(rank(s) == 1);
    CHECK_FALSE(inverse(s).has_value());
}

TEST_CASE("definiteness of small symmetric forms") {
    CHECK(psd_verdict(to_rational({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})).verdict == Definiteness::positive_definite);
    const auto affine = psd_verdict(to_rational({{2, -2}, {-2, 2}}));
    CHECK(affine.verdict == Definiteness::positive_semidefinite_with_radical);
    CHECK(affine.radical.cols() == 1);
    CHECK(psd_verdict(to_rational({{2, -3}, {-3, 2}})).verdict == Definiteness::indefinite);
}

TEST_CASE("path algebra dimensions of the bundled algebras") {
    const std::map<std::string, std::size_t> expected{{"kronecker", 4},    {"kronecker3", 5}, {"a3", 6},
                                                      {"d4", 7},           {"five_subspace", 11},
                                                      {"remark", 7},       {"nakayama887", 23},
                                                      {"loop_star2", 6}};
    for (const auto& [name, dim] : expected) {
        INFO(name);
        const auto alg = registry_algebra(name, Field<Zp>{2});
        CHECK(alg->dimension() == dim);
        std::size_t sum = 0;
        for (std::size_t v = 0; v < alg->quiver().vertex_count(); ++v) sum += projective(alg, v)->total_dim();
        CHECK(sum == dim);
    }
}

TEST_CASE("path words compose right to left") {
    const auto file = load_algebra("remark");
    const Quiver& q = file.bound_quiver.quiver;
    const auto a = *q.find_arrow("a");
    const auto g = *q.find_arrow("g");
    const Path p = path_from_word(q, {a, g});
    CHECK(p.arrows == std::vector<std::size_t>{g, a});
    CHECK(path_word(q, p) == "a.g");
    CHECK_THROWS_AS(path_from_word(q, {g, g}), UsageError);
}

TEST_CASE("a cutoff must be backed by the relations") {
    const std::string text = "field p=2\nvertices 2\narrow a: 1 -> 2\narrow g: 2 -> 1\ncutoff 3\n";
    CHECK_THROWS_AS(make_algebra(parse_algebra(text).bound_quiver, Field<Zp>{2}), UsageError);
    const std::string cyclic = "field p=2\nvertices 1\narrow l: 1 -> 1\n";
    CHECK_THROWS_AS(make_algebra(parse_algebra(cyclic).bound_quiver, Field<Zp>{2}), UsageError);
}

TEST_CASE("Hom dimensions agree with brute-force enumeration") {
    Rng rng(4);
    for (const char* name : {"kronecker", "a3"}) {
        INFO(name);
        const auto alg = registry_algebra(name, Field<Zp>{2});
        const std::size_t n = alg->quiver().vertex_count();
        for (int t = 0; t < 12; ++t) {
            std::vector<std::size_t> dx(n), dy(n);
            for (auto& d : dx) d = rng() % 3;
            for (auto& d : dy) d = rng() % 3;
            std::size_t unknowns = 0;
            for (std::size_t v = 0; v < n; ++v) unknowns += dx[v] * dy[v];
            if (unknowns > 14) continue;
            const auto x = random_representation(alg, dx, rng);
            const auto y = random_representation(alg, dy, rng);
            CHECK(count_homs(x, y) == (std::uint64_t{1} << hom_dim(x, y)));
        }
    }
    const auto remark = registry_algebra("remark", Field<Zp>{2});
    for (const auto& x : remark_modules(remark))
        for (const auto& y : remark_modules(remark))
            if (x->total_dim() * y->total_dim() <= 16) CHECK(count_homs(x, y) == (std::uint64_t{1} << hom_dim(x, y)));
}

TEST_CASE("simple, projective and injective modules") {
    const auto alg = registry_algebra("remark", Field<Zp>{3});
    CHECK(projective(alg, 0)->dims() == std::vector<std::size_t>{3, 2});
    CHECK(projective(alg, 1)->dims() == std::vector<std::size_t>{1, 1});
    CHECK(injective(alg, 0)->dims() == std::vector<std::size_t>{3, 1});
    CHECK(simple(alg, 1)->dims() == std::vector<std::size_t>{0, 1});
    CHECK(loewy_length(projective(alg, 0)) == 3);
    CHECK(ext1_dim(simple(alg, 0), simple(alg, 1)) == 2);
}

TEST_CASE("kernels, cokernels and images fit together") {
    Rng rng(5);
    const auto alg = registry_algebra("a3", Field<Zp>{3});
    const auto x = random_representation(alg, {2, 2, 1}, rng);
    const auto y = random_representation(alg, {1, 2, 2}, rng);
    const HomSpace<Zp> h(x, y);
    for (const auto& f : h.basis()) {
        const auto [k, incl] = kernel(f);
        const auto [c, proj] = cokernel(f);
        const auto im = image(f);
        CHECK(k->total_dim() + im.image->total_dim() == x->total_dim());
        CHECK(c->total_dim() + im.image->total_dim() == y->total_dim());
        CHECK((f * incl).is_zero());
        CHECK((proj * f).is_zero());
        CHECK((im.mono * im.epi - f).is_zero());
    }
}

TEST_CASE("algebra files reject malformed input with a position") {
    auto position = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
        try {
            parse_algebra(text);
        } catch (const ParseError& e) {
            return {e.line(), e.column()};
        }
        return {0, 0};
    };
    CHECK(position("field p=2\nvertices 2\nloops 3\n") == std::pair<std::size_t, std::size_t>{3, 1});
    CHECK(position("field p=2\nvertices 2\narrow a: 1 -> 5\n").first == 3);
    CHECK(position("field p=4\n").first == 1);
    CHECK(position("field p=2\nvertices 2\narrow a: 1 -> 2\nrelation a.zz\n").first == 4);
    CHECK(position("field p=2\nvertices 2\narrow a 1 -> 2\n").first == 3);
}

TEST_CASE("bundled algebra files round-trip and match the registry") {
    for (const auto& [name, text] : algebra_registry()) {
        INFO(name);
        const auto path = std::filesystem::path(QUIVSTAT_DATA_DIR) / (name + ".alg");
        CHECK(read_file(path.string()) == text);
        const auto a = parse_algebra(text);
        const auto printed = print_algebra(a);
        const auto b = parse_algebra(printed);
        CHECK(a == b);
        CHECK(print_algebra(b) == printed);
    }
}

TEST_CASE("representation files round-trip") {
    Rng rng(6);
    for (const auto& x : remark_modules(registry_algebra("remark", Field<Zp>{5})))
        CHECK(*x == *parse_representation(x->algebra(), print_representation(x)));
    for (const char* name : {"kronecker", "d4"}) {
        const auto alg = registry_algebra(name, Field<Zp>{5});
        const std::size_t n = alg->quiver().vertex_count();
        for (int t = 0; t < 5; ++t) {
            std::vector<std::size_t> d(n);
            for (auto& x : d) x = rng() % 3;
            const auto x = random_representation(alg, d, rng);
            const auto y = parse_representation(alg, print_representation(x));
            CHECK(*x == *y);
        }
    }
    const auto qalg = registry_algebra("kronecker", Field<Rational>{});
    const auto x = parse_representation(qalg, "dims 1 1\nmap a: 1/2\nmap b: -3\n");
    CHECK(parse_representation(qalg, print_representation(x))->map(0)(0, 0) == Rational(1, 2));
    CHECK_THROWS_AS(parse_representation(qalg, "dims 1 1\nmap c: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_representation(registry_algebra("remark", Field<Zp>{2}), "dims 1 1\nmap a: 1\nmap g: 1\n"),
                    UsageError);
}

TEST_CASE("module expressions") {
    Rng rng(7);
    const auto alg = registry_algebra("nakayama887", Field<Zp>{2});
    CHECK(parse_module(alg, "P(1)")->total_dim() == 8);
    CHECK(parse_module(alg, "[3]S(1)")->dims() == std::vector<std::size_t>{1, 1, 1});
    CHECK(parse_module(alg, "(S(1) + S(2))^2")->dims() == std::vector<std::size_t>{2, 2, 0});
    CHECK(parse_module(alg, "P(3)/soc")->total_dim() == 6);
    try {
        parse_module(alg, "S(1) + Q(2)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 8);
    }
    CHECK_THROWS_AS(parse_module(alg, "S(4)"), ParseError);
    CHECK_THROWS_AS(parse_module(alg, "gen(1,1,1)"), ParseError);
}
