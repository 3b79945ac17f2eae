// Endomorphism algebras, decomposition, isomorphism, Euler form and enumeration.

#include <quivstat/quivstat.hpp>

#include <catch_amalgamated.hpp>

using namespace quivstat;

namespace {

// Jacobson radical of a small algebra over F_p by brute force: x is in the
// radical iff x y is nilpotent for every y.
std::size_t brute_radical_dim(const FiniteDimAlgebra<Zp>& a) {
    const auto& f = a.field();
    const std::size_t n = a.dimension();
    std::vector<Matrix<Zp>> elements;
    for_each_vector(f, n, [&](const std::vector<Zp>& c) {
        elements.push_back(Matrix<Zp>::column(f, c));
        return true;
    });
    std::uint64_t count = 0;
    for (const auto& x : elements) {
        bool in_radical = true;
        for (const auto& y : elements)
            if (!is_nilpotent(a.left_mult(a.multiply(x, y)))) {
                in_radical = false;
                break;
            }
        if (in_radical) ++count;
    }
    std::size_t d = 0;
    while (count > 1) {
        count /= f.p;
        ++d;
    }
    return d;
}

long long mobius(long long n) {
    long long mu = 1;
    for (long long q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            n /= q;
            if (n % q == 0) return 0;
            mu = -mu;
        }
    return n > 1 ? -mu : mu;
}

long long ipow(long long b, long long e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Monic irreducible polynomials of degree d over F_p (necklace formula).
long long irreducible_count(long long d, long long p) {
    long long s = 0;
    for (long long k = 1; k <= d; ++k)
        if (d % k == 0) s += mobius(d / k) * ipow(p, k);
    return s / d;
}

// Indecomposable Kronecker modules with both coordinates at most b: the real
// roots (n, n+1), (n+1, n), and for (n, n) one module per point of P^1 whose
// degree divides n.
std::size_t kronecker_count(long long b, long long p) {
    std::size_t count = 0;
    for (long long n = 0; n + 1 <= b; ++n) count += 2;
    for (long long n = 1; n <= b; ++n)
        for (long long d = 1; d <= n; ++d)
            if (n % d == 0) count += irreducible_count(d, p) + (d == 1 ? 1 : 0);
    return count;
}

template <class K>
std::vector<Rep<K>> shuffled_sum_parts(const std::vector<Rep<K>>& parts, Rng& rng) {
    std::vector<Rep<K>> out;
    for (const auto& x : parts) out.push_back(random_base_change(x, rng).first);
    return out;
}

}  // namespace

TEST_CASE("radical of endomorphism algebras agrees with brute force") {
    Rng rng(11);
    const Field<Zp> f2{2};
    const auto kron = registry_algebra("kronecker", f2);
    const auto nak = registry_algebra("nakayama887", f2);
    const auto remark = registry_algebra("remark", f2);
    const std::vector<Rep<Zp>> modules{
        kronecker_family(kron, 2).front().module,
        parse_module(kron, "S(1) + S(1)"),
        parse_module(kron, "P(1) + S(2)"),
        parse_module(nak, "P(1)"),
        parse_module(nak, "[3]S(1) + [2]S(1)"),
        parse_module(remark, "I(1)"),
        parse_module(remark, "P(2) + S(2)"),
    };
    for (const auto& m : modules) {
        const auto e = end_algebra(m);
        REQUIRE(e.algebra->dimension() <= 7);
        CHECK(e.algebra->check_axioms());
        CHECK(radical(*e.algebra).cols() == brute_radical_dim(*e.algebra));
    }
}

TEST_CASE("radical powers and local Nakayama endomorphism rings") {
    Rng rng(12);
    const auto kron = registry_algebra("kronecker", Field<Zp>{3});
    for (std::size_t e = 1; e <= 3; ++e) {
        const auto m = kronecker_family(kron, e).front().module;
        const auto end = end_algebra(m);
        const auto ln = is_local_nakayama(*end.algebra, rng);
        CHECK(ln.local_nakayama == Verdict::yes);
        CHECK(ln.length == e);
        const auto powers = radical_powers(*end.algebra, radical(*end.algebra));
        CHECK(powers.size() == e + 1);
        CHECK(powers.back().cols() == 0);
    }
    const auto nak = registry_algebra("nakayama887", Field<Zp>{2});
    const auto two = end_algebra(parse_module(nak, "S(1) + S(2)"));
    CHECK(is_local_nakayama(*two.algebra, rng).local_nakayama == Verdict::no);
}

TEST_CASE("decomposition recovers the summands of a disguised direct sum") {
    Rng rng(13);
    for (std::uint32_t p : {2u, 3u}) {
        const auto alg = registry_algebra("d4", Field<Zp>{p});
        const auto en = enumerate_indecomposables(alg, 2, rng);
        REQUIRE(en.modules.size() == 12);
        for (int t = 0; t < 6; ++t) {
            std::vector<Rep<Zp>> parts;
            for (int k = 0; k < 3; ++k) parts.push_back(en.modules[rng() % en.modules.size()].module);
            const auto x = random_base_change(direct_sum(alg, shuffled_sum_parts(parts, rng)).sum, rng).first;
            const auto d = decompose(x, rng);
            CHECK(d.certified == Verdict::yes);
            CHECK(decomposition_witnessed(x, d));
            REQUIRE(d.pieces.size() == 3);
            for (const auto& piece : d.pieces) {
                bool found = false;
                for (const auto& y : parts) found = found || are_isomorphic(piece, y, rng).verdict == Verdict::yes;
                CHECK(found);
            }
        }
    }
}

TEST_CASE("isomorphism tests distinguish Kronecker regular modules") {
    Rng rng(14);
    const auto alg = registry_algebra("kronecker", Field<Zp>{3});
    const auto fam = kronecker_family(alg, 1);
    REQUIRE(fam.size() == 4);
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = 0; j < fam.size(); ++j) {
            const auto v = are_isomorphic(fam[i].module, random_base_change(fam[j].module, rng).first, rng).verdict;
            CHECK(v == (i == j ? Verdict::yes : Verdict::no));
        }
    const auto iso = are_isomorphic(fam[0].module, random_base_change(fam[0].module, rng).first, rng);
    REQUIRE(iso.witness);
    CHECK(iso.witness->is_isomorphism());
    CHECK(iso.witness->commutes());
}

TEST_CASE("bricks") {
    Rng rng(15);
    const auto alg = registry_algebra("kronecker", Field<Zp>{2});
    CHECK(is_brick(simple(alg, 0), rng) == Verdict::yes);
    CHECK(is_brick(projective(alg, 0), rng) == Verdict::yes);
    CHECK(is_brick(kronecker_family(alg, 2).front().module, rng) == Verdict::no);
    CHECK(is_indecomposable(kronecker_family(alg, 2).front().module, rng) == Verdict::yes);
    CHECK(is_indecomposable(parse_module(alg, "S(1) + S(2)"), rng) == Verdict::no);
}

TEST_CASE("serial modules and Kupisch series") {
    const auto alg = registry_algebra("nakayama887", Field<Zp>{2});
    const auto nk = is_nakayama_algebra(alg);
    CHECK(nk.nakayama);
    CHECK(nk.kupisch_series == std::vector<std::size_t>{8, 8, 7});
    for (std::size_t len = 1; len <= 8; ++len) {
        const auto x = serial_module(alg, 0, len);
        CHECK(x->total_dim() == len);
        CHECK(is_serial(x));
        CHECK(loewy_length(x) == len);
    }
    CHECK_FALSE(is_nakayama_algebra(registry_algebra("kronecker", Field<Zp>{2})).nakayama);
    CHECK_FALSE(is_nakayama_algebra(registry_algebra("d4", Field<Zp>{2})).nakayama);
    CHECK(is_nakayama_algebra(registry_algebra("a3", Field<Zp>{2})).nakayama);
}

TEST_CASE("Euler form computes Hom minus Ext on random pairs") {
    Rng rng(16);
    for (const char* name : {"a3", "d4", "kronecker"}) {
        const auto alg = registry_algebra(name, Field<Zp>{2});
        const auto eu = euler_data(alg->bound_quiver());
        const std::size_t n = alg->quiver().vertex_count();
        for (int t = 0; t < 15; ++t) {
            std::vector<std::size_t> dx(n), dy(n);
            for (auto& d : dx) d = rng() % 3;
            for (auto& d : dy) d = rng() % 3;
            const auto x = random_representation(alg, dx, rng);
            const auto y = random_representation(alg, dy, rng);
            const long long lhs = static_cast<long long>(hom_dim(x, y)) - static_cast<long long>(ext1_dim(x, y));
            CHECK(lhs == bilinear(eu.euler, IntVector(dx.begin(), dx.end()), IntVector(dy.begin(), dy.end())));
        }
    }
}

TEST_CASE("Coxeter matrix preserves the Euler form and sends injectives to negative projectives") {
    Rng rng(17);
    for (const char* name : {"a3", "d4", "kronecker", "five_subspace"}) {
        INFO(name);
        const auto alg = registry_algebra(name, Field<Zp>{2});
        const auto eu = euler_data(alg->bound_quiver());
        const std::size_t n = eu.euler.size();
        const auto e = to_rational(eu.euler);
        CHECK(to_rational(eu.coxeter) == -(*inverse(e.transpose()) * e));
        for (int t = 0; t < 25; ++t) {
            IntVector x(n), y(n);
            for (auto& v : x) v = static_cast<long long>(rng() % 9) - 4;
            for (auto& v : y) v = static_cast<long long>(rng() % 9) - 4;
            CHECK(bilinear(eu.euler, quivstat::apply(eu.coxeter, x), quivstat::apply(eu.coxeter, y)) == bilinear(eu.euler, x, y));
            CHECK(quivstat::apply(eu.coxeter_inverse, quivstat::apply(eu.coxeter, x)) == x);
        }
        for (std::size_t v = 0; v < n; ++v) {
            const auto di = injective(alg, v)->dims();
            const auto dp = projective(alg, v)->dims();
            IntVector neg(n);
            for (std::size_t i = 0; i < n; ++i) neg[i] = -static_cast<long long>(dp[i]);
            CHECK(quivstat::apply(eu.coxeter, IntVector(di.begin(), di.end())) == neg);
        }
    }
}

TEST_CASE("indecomposable counts on small quivers") {
    Rng rng(18);
    CHECK(enumerate_indecomposables(registry_algebra("a3", Field<Zp>{3}), 1, rng).modules.size() == 6);
    CHECK(enumerate_indecomposables(registry_algebra("d4", Field<Zp>{2}), 2, rng).modules.size() == 12);
    for (std::uint32_t p : {2u, 3u})
        for (std::size_t b : {1u, 2u}) {
            INFO("p = " << p << ", bound " << b);
            const auto en = enumerate_indecomposables(registry_algebra("kronecker", Field<Zp>{p}), b, rng);
            CHECK(en.modules.size() == kronecker_count(b, p));
            for (const auto& [d, complete] : en.complete) CHECK(complete);
        }
    CHECK(kronecker_count(2, 2) == 11);
}

TEST_CASE("real roots are bricks without self-extensions") {
    Rng rng(19);
    for (const char* name : {"a3", "d4", "kronecker"}) {
        const auto alg = registry_algebra(name, Field<Zp>{2});
        const auto eu = euler_data(alg->bound_quiver());
        for (const auto& e : enumerate_indecomposables(alg, 2, rng).modules) {
            const long long q = quadratic_form(eu, e.dims);
            CHECK((q == 0 || q == 1));
            if (q != 1) continue;
            CHECK(is_brick(e.module, rng) == Verdict::yes);
            CHECK(ext1_dim(e.module, e.module) == 0);
        }
    }
}

TEST_CASE("monic irreducibles match the necklace count") {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::size_t d = 1; d <= 3; ++d)
            CHECK(static_cast<long long>(monic_irreducibles(d, p).size()) == irreducible_count(d, p));
}
