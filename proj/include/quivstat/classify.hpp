#pragma once

// Euler form, Coxeter transformation and the finite / tame / wild trichotomy
// for path algebras of acyclic quivers, plus root-driven enumeration of
// indecomposables.

#include "analysis.hpp"

#include <functional>
#include <set>

namespace quivstat {

using IntVector = std::vector<long long>;
using IntMatrix = std::vector<IntVector>;

struct EulerData {
    IntMatrix euler;           // <x, y> = x^T E y
    IntMatrix symmetrization;  // E + E^T
    IntMatrix coxeter;         // -E^{-T} E
    IntMatrix coxeter_inverse;
};

inline Matrix<Rational> to_rational(const IntMatrix& m) {
    return lift(Field<Rational>{}, m);
}

inline IntMatrix to_integer(const Matrix<Rational>& m) {
    IntMatrix out(m.rows(), IntVector(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (denominator(m(r, c)) != 1) throw InternalError("expected an integral matrix");
            out[r][c] = static_cast<long long>(numerator(m(r, c)));
        }
    return out;
}

inline void require_hereditary(const BoundQuiver& bq) {
    if (!bq.quiver.is_acyclic()) throw UsageError("the Euler form machinery needs an acyclic quiver");
    if (!bq.relations.relations.empty()) throw UsageError("the Euler form machinery needs a quiver without relations");
}

/// E = I - C with C the arrow-count matrix (row = source, column = target).
inline EulerData euler_data(const BoundQuiver& bq) {
    require_hereditary(bq);
    const std::size_t n = bq.quiver.vertex_count();
    EulerData d;
    d.euler.assign(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) d.euler[i][i] = 1;
    for (const auto& a : bq.quiver.arrows()) d.euler[a.source][a.target] -= 1;
    d.symmetrization = d.euler;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d.symmetrization[i][j] = d.euler[i][j] + d.euler[j][i];
    const Matrix<Rational> e = to_rational(d.euler);
    const auto et_inv = inverse(e.transpose());
    if (!et_inv) throw InternalError("Euler matrix is not invertible");
    const Matrix<Rational> phi = -(*et_inv * e);
    d.coxeter = to_integer(phi);
    d.coxeter_inverse = to_integer(*inverse(phi));
    return d;
}

inline long long bilinear(const IntMatrix& e, const IntVector& x, const IntVector& y) {
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * e[i][j] * y[j];
    return s;
}

/// q(x) = <x, x>.
inline long long quadratic_form(const EulerData& d, const IntVector& x) { return bilinear(d.euler, x, x); }

inline IntVector apply(const IntMatrix& m, const IntVector& x) {
    IntVector y(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
    return y;
}

enum class TranslateDirection { tau, tau_inverse };

struct TranslateResult {
    IntVector dims;
    bool boundary = false;  // negative entries: the input was projective (tau) or injective (tau^-1)
};

/// The Coxeter matrix moves dimension vectors along tau^-1; its inverse along tau.
inline TranslateResult coxeter_translate_dim(const EulerData& d, const IntVector& x, TranslateDirection dir) {
    TranslateResult r;
    r.dims = apply(dir == TranslateDirection::tau_inverse ? d.coxeter : d.coxeter_inverse, x);
    r.boundary = std::any_of(r.dims.begin(), r.dims.end(), [](long long v) { return v < 0; });
    return r;
}

// ---------------------------------------------------------------------------
// Diagram recognition

/// Symmetric edge-multiplicity matrix of the underlying graph.
using Graph = std::vector<std::vector<int>>;

inline Graph underlying_graph(const Quiver& q) {
    Graph g(q.vertex_count(), std::vector<int>(q.vertex_count(), 0));
    for (const auto& a : q.arrows()) {
        ++g[a.source][a.target];
        if (a.source != a.target) ++g[a.target][a.source];
    }
    return g;
}

namespace detail {

inline Graph empty_graph(std::size_t n) { return Graph(n, std::vector<int>(n, 0)); }
inline void edge(Graph& g, std::size_t a, std::size_t b, int m = 1) {
    g[a][b] += m;
    g[b][a] += m;
}

inline Graph path_graph(std::size_t n) {
    Graph g = empty_graph(n);
    for (std::size_t i = 0; i + 1 < n; ++i) edge(g, i, i + 1);
    return g;
}

/// Star-like tree with arms of the given lengths (edges) around vertex 0.
inline Graph star_graph(const std::vector<std::size_t>& arms) {
    std::size_t n = 1;
    for (auto a : arms) n += a;
    Graph g = empty_graph(n);
    std::size_t next = 1;
    for (auto len : arms) {
        std::size_t prev = 0;
        for (std::size_t k = 0; k < len; ++k, ++next) {
            edge(g, prev, next);
            prev = next;
        }
    }
    return g;
}

inline bool isomorphic_graphs(const Graph& a, const Graph& b) {
    const std::size_t n = a.size();
    if (b.size() != n) return false;
    auto degree = [](const Graph& g, std::size_t v) {
        int d = 0;
        for (auto m : g[v]) d += m;
        return d;
    };
    std::vector<int> da(n), db(n);
    for (std::size_t v = 0; v < n; ++v) da[v] = degree(a, v), db[v] = degree(b, v);
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<long> image(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t v) {
        if (v == n) return true;
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || da[v] != db[w] || a[v][v] != b[w][w]) continue;
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) ok = a[v][u] == b[w][static_cast<std::size_t>(image[u])];
            if (!ok) continue;
            image[v] = static_cast<long>(w);
            used[w] = true;
            if (extend(v + 1)) return true;
            used[w] = false;
        }
        image[v] = -1;
        return false;
    };
    return extend(0);
}

/// Stored Dynkin and Euclidean diagrams on n vertices.
inline std::vector<std::pair<std::string, Graph>> diagram_table(std::size_t n) {
    std::vector<std::pair<std::string, Graph>> t;
    const auto N = [](std::size_t k) { return std::to_string(k); };
    if (n >= 1) t.push_back({"A" + N(n), path_graph(n)});
    if (n >= 4) t.push_back({"D" + N(n), star_graph({1, 1, n - 3})});
    if (n == 6) t.push_back({"E6", star_graph({1, 2, 2})});
    if (n == 7) t.push_back({"E7", star_graph({1, 2, 3})});
    if (n == 8) t.push_back({"E8", star_graph({1, 2, 4})});
    // Euclidean diagrams with n = m + 1 vertices
    if (n == 2) {
        Graph g = empty_graph(2);
        edge(g, 0, 1, 2);
        t.push_back({"~A1", g});
    }
    if (n >= 3) {
        Graph g = path_graph(n);
        edge(g, n - 1, 0);
        t.push_back({"~A" + N(n - 1), g});
    }
    if (n == 5) t.push_back({"~D4", star_graph({1, 1, 1, 1})});
    if (n >= 6) {
        // ~D_m: a path on m - 3 vertices with two leaves at each end.
        const std::size_t m = n - 1;
        Graph h = empty_graph(n);
        const std::size_t s = m - 3;  // spine vertices 0..s-1, two leaves at each end
        for (std::size_t i = 0; i + 1 < s; ++i) edge(h, i, i + 1);
        edge(h, 0, s);
        edge(h, 0, s + 1);
        edge(h, s - 1, s + 2);
        edge(h, s - 1, s + 3);
        t.push_back({"~D" + N(m), h});
    }
    if (n == 7) t.push_back({"~E6", star_graph({2, 2, 2})});
    if (n == 8) t.push_back({"~E7", star_graph({1, 3, 3})});
    if (n == 9) t.push_back({"~E8", star_graph({1, 2, 5})});
    return t;
}

}  // namespace detail

enum class RepresentationType { representation_finite, tame, wild };

inline std::string to_string(RepresentationType t) {
    switch (t) {
        case RepresentationType::representation_finite: return "representation_finite";
        case RepresentationType::tame: return "tame";
        case RepresentationType::wild: return "wild";
    }
    return "?";
}

struct ClassificationReport {
    RepresentationType verdict = RepresentationType::wild;
    Definiteness definiteness = Definiteness::indefinite;
    std::optional<std::string> diagram;
    IntVector radical_vector;  // primitive positive generator of the radical (tame only)
    EulerData euler;
};

inline std::optional<std::string> recognize_diagram(const Quiver& q) {
    const Graph g = underlying_graph(q);
    for (const auto& [name, h] : detail::diagram_table(q.vertex_count()))
        if (detail::isomorphic_graphs(g, h)) return name;
    return std::nullopt;
}

inline ClassificationReport classify(const BoundQuiver& bq) {
    if (bq.quiver.vertex_count() == 0) throw UsageError("cannot classify the empty quiver");
    if (!bq.quiver.is_connected()) throw UsageError("quiver is disconnected; classify each component separately");
    ClassificationReport r;
    r.euler = euler_data(bq);
    const auto psd = psd_verdict(to_rational(r.euler.symmetrization));
    r.definiteness = psd.verdict;
    switch (psd.verdict) {
        case Definiteness::positive_definite: r.verdict = RepresentationType::representation_finite; break;
        case Definiteness::positive_semidefinite_with_radical: r.verdict = RepresentationType::tame; break;
        case Definiteness::indefinite: r.verdict = RepresentationType::wild; break;
    }
    r.diagram = recognize_diagram(bq.quiver);
    if (r.verdict == RepresentationType::tame) {
        if (psd.radical.cols() != 1) throw InternalError("radical of a connected Euclidean form is not one-dimensional");
        // clear denominators, divide by the gcd, make positive
        boost::multiprecision::cpp_int l = 1;
        for (std::size_t i = 0; i < psd.radical.rows(); ++i) {
            const auto den = denominator(psd.radical(i, 0));
            l = l / boost::multiprecision::gcd(l, den) * den;
        }
        std::vector<boost::multiprecision::cpp_int> v;
        boost::multiprecision::cpp_int g = 0;
        for (std::size_t i = 0; i < psd.radical.rows(); ++i) {
            v.push_back(numerator(Rational(psd.radical(i, 0) * l)));
            g = boost::multiprecision::gcd(g, v.back());
        }
        const int sign = v[0] < 0 ? -1 : 1;
        for (auto& x : v) r.radical_vector.push_back(sign * static_cast<long long>(x / g));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Enumeration of indecomposables

/// Dimension vectors with 0 <= d_i <= bound, excluding zero.
inline std::vector<IntVector> dimension_vectors(std::size_t n, std::size_t bound) {
    std::vector<IntVector> out;
    IntVector d(n, 0);
    while (true) {
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (static_cast<std::size_t>(d[i]) < bound) {
                ++d[i];
                break;
            }
            d[i] = 0;
        }
        if (i == n) break;
        out.push_back(d);
    }
    std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
        long long sa = 0, sb = 0;
        for (auto x : a) sa += x;
        for (auto x : b) sb += x;
        return std::make_pair(sa, a) < std::make_pair(sb, b);
    });
    return out;
}

/// Polynomials over F_p as coefficient vectors, constant term first.
using Poly = std::vector<std::uint32_t>;

namespace detail {

inline Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    a = poly_trim(a);
    const Field<Zp> f{p};
    const Zp lead_inv = f.inv(Zp(b.back(), p));
    while (a.size() >= b.size()) {
        const Zp factor = Zp(a.back(), p) * lead_inv;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (Zp(a[shift + i], p) - factor * Zp(b[i], p)).value();
        a = poly_trim(a);
    }
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (Zp(c[i + j], p) + Zp(a[i], p) * Zp(b[j], p)).value();
    return c;
}

/// All monic polynomials of the given degree.
inline std::vector<Poly> monic_polys(std::size_t degree, std::uint32_t p) {
    std::vector<Poly> out;
    Poly c(degree + 1, 0);
    c[degree] = 1;
    while (true) {
        out.push_back(c);
        std::size_t i = 0;
        for (; i < degree; ++i) {
            if (++c[i] < p) break;
            c[i] = 0;
        }
        if (i == degree) return out;
    }
}

}  // namespace detail

inline std::vector<Poly> monic_irreducibles(std::size_t degree, std::uint32_t p) {
    std::vector<Poly> out;
    for (const auto& f : detail::monic_polys(degree, p)) {
        bool irreducible = true;
        for (std::size_t d = 1; d <= degree / 2 && irreducible; ++d)
            for (const auto& g : detail::monic_polys(d, p))
                if (detail::poly_mod(f, g, p).empty()) {
                    irreducible = false;
                    break;
                }
        if (irreducible) out.push_back(f);
    }
    return out;
}

/// Companion matrix of a monic polynomial (ones below the diagonal, last column -coefficients).
inline Matrix<Zp> companion(const Poly& f, std::uint32_t p) {
    const Field<Zp> field{p};
    const std::size_t n = f.size() - 1;
    Matrix<Zp> c(field, n, n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = field.one();
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -Zp(f[i], p);
    return c;
}

inline std::string poly_to_string(const Poly& f) {
    std::string s;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (f[i] != 1 || i == 0) s += std::to_string(f[i]);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

template <class K>
struct IndecomposableEntry {
    Rep<K> module;
    IntVector dims;
    std::string kind;   // "real", "isotropic", "sampled"
    std::string label;  // family parameter for isotropic roots
};

template <class K>
struct Enumeration {
    std::vector<IndecomposableEntry<K>> modules;
    std::vector<std::pair<IntVector, bool>> complete;  // per dimension vector: all isoclasses found
    bool undecided = false;
};

namespace detail {

inline bool is_kronecker(const Quiver& q) {
    return q.vertex_count() == 2 && q.arrows().size() == 2 && q.arrow(0).source == q.arrow(1).source &&
           q.arrow(0).target == q.arrow(1).target && q.arrow(0).source != q.arrow(0).target;
}

/// Generic module of a real root: random maps until certified indecomposable.
template <class K>
std::optional<Rep<K>> generic_indecomposable(const AlgebraPtr<K>& alg, const IntVector& d, Rng& rng,
                                             bool& undecided) {
    std::vector<std::size_t> dims(d.begin(), d.end());
    for (int attempt = 0; attempt < 32; ++attempt) {
        auto x = random_representation(alg, dims, rng);
        const auto v = is_indecomposable(x, rng);
        if (v == Verdict::yes) return x;
        if (v == Verdict::undecided) undecided = true;
    }
    // Small fields can make the generic locus rare: scan every representation.
    if constexpr (Field<K>::finite) {
        const auto& f = alg->field();
        std::size_t entries = 0;
        for (const auto& a : alg->quiver().arrows()) entries += dims[a.source] * dims[a.target];
        if (!bounded_power(f.size(), entries, enumeration_cap)) return std::nullopt;
        std::optional<Rep<K>> found;
        for_each_vector(f, entries, [&](const std::vector<Zp>& c) {
            std::vector<Matrix<K>> maps;
            std::size_t at = 0;
            for (const auto& a : alg->quiver().arrows()) {
                Matrix<K> m(f, dims[a.target], dims[a.source]);
                for (std::size_t r = 0; r < m.rows(); ++r)
                    for (std::size_t col = 0; col < m.cols(); ++col) m(r, col) = c[at++];
                maps.push_back(std::move(m));
            }
            auto x = make_rep(alg, dims, std::move(maps));
            const auto v = is_indecomposable(x, rng);
            if (v == Verdict::undecided) undecided = true;
            if (v == Verdict::yes) found = x;
            return !found;
        });
        return found;
    }
    return std::nullopt;
}

}  // namespace detail

/// Kronecker modules of dimension (k, k) that are indecomposable: one per
/// point of P^1 of degree dividing k, given by (I, C(f^m)) and (C(x^k), I).
inline std::vector<IndecomposableEntry<Zp>> kronecker_family(const AlgebraPtr<Zp>& alg, std::size_t k) {
    const std::uint32_t p = alg->field().p;
    std::vector<IndecomposableEntry<Zp>> out;
    auto make = [&](const Matrix<Zp>& a, const Matrix<Zp>& b, const std::string& label) {
        std::vector<std::size_t> dims(2, k);
        out.push_back({make_rep(alg, dims, {a, b}), {static_cast<long long>(k), static_cast<long long>(k)},
                       "isotropic", label});
    };
    const Matrix<Zp> id = Matrix<Zp>::identity(alg->field(), k);
    for (std::size_t deg = 1; deg <= k; ++deg) {
        if (k % deg) continue;
        for (const auto& f : monic_irreducibles(deg, p)) {
            Poly g{1};
            for (std::size_t i = 0; i < k / deg; ++i) g = detail::poly_mul(g, f, p);
            make(id, companion(g, p), "(" + poly_to_string(f) + ")^" + std::to_string(k / deg));
        }
    }
    Poly xk(k + 1, 0);
    xk[k] = 1;
    make(companion(xk, p), id, "infinity^" + std::to_string(k));
    return out;
}

/// Certified indecomposables with dimension vectors bounded coordinatewise.
/// Real roots get one generic module; Kronecker isotropic roots get the
/// complete family; other dimension vectors are sampled (flagged incomplete).
template <class K>
Enumeration<K> enumerate_indecomposables(const AlgebraPtr<K>& alg, std::size_t dim_bound, Rng& rng) {
    const auto cls = classify(alg->bound_quiver());
    Enumeration<K> out;
    const std::size_t n = alg->quiver().vertex_count();
    for (const auto& d : dimension_vectors(n, dim_bound)) {
        const long long q = quadratic_form(cls.euler, d);
        if (q == 1) {
            auto x = detail::generic_indecomposable(alg, d, rng, out.undecided);
            if (!x) throw InternalError("no generic indecomposable found for a real root");
            out.modules.push_back({*x, d, "real", ""});
            out.complete.push_back({d, true});
        } else if (q == 0 && cls.verdict == RepresentationType::tame) {
            if constexpr (std::is_same_v<K, Zp>) {
                if (detail::is_kronecker(alg->quiver()) && d[0] == d[1]) {
                    for (auto& e : kronecker_family(alg, static_cast<std::size_t>(d[0]))) {
                        if (is_indecomposable(e.module, rng) != Verdict::yes)
                            throw InternalError("Kronecker family member is not indecomposable");
                        out.modules.push_back(std::move(e));
                    }
                    out.complete.push_back({d, true});
                    continue;
                }
            }
            // sampled members of the family
            std::vector<Rep<K>> found;
            std::vector<std::size_t> dims(d.begin(), d.end());
            for (std::size_t t = 0; t < 64; ++t) {
                auto x = random_representation(alg, dims, rng);
                if (is_indecomposable(x, rng) != Verdict::yes) continue;
                bool fresh = true;
                for (const auto& y : found)
                    if (are_isomorphic(x, y, rng).verdict != Verdict::no) fresh = false;
                if (fresh) {
                    found.push_back(x);
                    out.modules.push_back({x, d, "isotropic", "sampled"});
                }
            }
            out.complete.push_back({d, false});
        } else if (q < 0) {
            std::vector<std::size_t> dims(d.begin(), d.end());
            for (std::size_t t = 0; t < 8; ++t) {
                auto x = random_representation(alg, dims, rng);
                if (is_indecomposable(x, rng) == Verdict::yes) {
                    out.modules.push_back({x, d, "sampled", ""});
                    break;
                }
            }
            out.complete.push_back({d, false});
        }
    }
    return out;
}

}  // namespace quivstat
