#pragma once

// The functors F = Hom(M,-) and G = M (x)_Gamma -, the natural maps mu and nu,
// right M-approximations, and the static / adstatic predicates.
//
// Gamma = End(M)^op with c.d = d o c; Gamma acts on Hom(M,N) by c.phi = phi o c
// and on the right of M by m.c = c(m).

#include "analysis.hpp"

namespace quivstat {

template <class K>
struct ModuleContext {
    Rep<K> module;
    EndAlgebra<K> end;
    DecompositionResult<K> decomposition;

    const AlgebraRef<K>& gamma() const { return end.algebra; }
    const HomSpace<K>& end_basis() const { return *end.hom; }
    /// Pairwise non-isomorphic indecomposable summands of M.
    std::vector<Rep<K>> summand_types() const {
        std::vector<Rep<K>> out;
        for (const auto& s : decomposition.summands) out.push_back(s.module);
        return out;
    }
};

template <class K>
ModuleContext<K> make_context(const Rep<K>& m, Rng& rng) {
    return {m, end_algebra(m), decompose(m, rng)};
}

/// Matrix of Hom(M, g): Hom(M, X) -> Hom(M, Y) in the Hom bases.
template <class K>
Matrix<K> hom_map(const HomSpace<K>& from, const HomSpace<K>& to, const Morphism<K>& g) {
    Matrix<K> m(g.field(), to.dim(), from.dim());
    for (std::size_t j = 0; j < from.dim(); ++j) {
        const auto c = to.coordinates(g * from[j]);
        for (std::size_t i = 0; i < to.dim(); ++i) m(i, j) = c[i];
    }
    return m;
}

template <class K>
Matrix<K> hom_map(const Rep<K>& m, const Morphism<K>& g) {
    return hom_map(HomSpace<K>(m, g.source()), HomSpace<K>(m, g.target()), g);
}

/// N is generated by M: the images of a Hom(M,N) basis span N.
template <class K>
bool generated_by(const Rep<K>& m, const Rep<K>& n) {
    const HomSpace<K> h(m, n);
    for (std::size_t v = 0; v < n->vertex_count(); ++v) {
        Matrix<K> span(n->field(), n->dim(v), 0);
        for (const auto& f : h.basis()) span = hstack(span, f.map(v));
        if (rank(span) != n->dim(v)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// F and G

template <class K>
struct FModule {
    std::shared_ptr<const HomSpace<K>> hom;  // Hom(M, N) with its basis
    GammaModule<K> module;
};

template <class K>
FModule<K> hom_as_gamma_module(const ModuleContext<K>& ctx, const Rep<K>& n) {
    auto h = std::make_shared<const HomSpace<K>>(ctx.module, n);
    std::vector<Matrix<K>> action;
    for (const auto& c : ctx.end_basis().basis()) {
        Matrix<K> a(n->field(), h->dim(), h->dim());
        for (std::size_t j = 0; j < h->dim(); ++j) {
            const auto coords = h->coordinates((*h)[j] * c);
            for (std::size_t i = 0; i < h->dim(); ++i) a(i, j) = coords[i];
        }
        action.push_back(std::move(a));
    }
    return {h, GammaModule<K>(ctx.gamma(), h->dim(), std::move(action))};
}

template <class K>
struct TensorResult {
    Rep<K> tensor;        // M (x)_k X, index m * dim X + x at each vertex
    Rep<K> module;        // G(X) = M (x)_Gamma X
    Morphism<K> quotient; // tensor -> G(X)
};

template <class K>
TensorResult<K> tensor_over_gamma(const ModuleContext<K>& ctx, const GammaModule<K>& x) {
    if (x.gamma() != ctx.gamma() && x.gamma()->left_matrices() != ctx.gamma()->left_matrices())
        throw UsageError("Gamma-module is over a different algebra");
    const auto& m = ctx.module;
    const Field<K>& f = m->field();
    const std::size_t h = x.dim();
    const Matrix<K> ih = Matrix<K>::identity(f, h);
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < m->vertex_count(); ++v) dims.push_back(m->dim(v) * h);
    std::vector<Matrix<K>> maps;
    for (const auto& a : m->maps()) maps.push_back(kron(a, ih));
    auto t = make_rep(m->algebra(), dims, std::move(maps));
    // balancing relations c(m) (x) x - m (x) (c.x)
    std::vector<Matrix<K>> rel;
    for (std::size_t v = 0; v < m->vertex_count(); ++v) {
        Matrix<K> span(f, dims[v], 0);
        const Matrix<K> im = Matrix<K>::identity(f, m->dim(v));
        for (std::size_t i = 0; i < ctx.end_basis().dim(); ++i)
            span = hstack(span, kron(ctx.end_basis()[i].map(v), ih) - kron(im, x.action()[i]));
        rel.push_back(column_space(span));
    }
    auto [g, pi] = quotient_representation(t, rel);
    return {t, g, pi};
}

/// mu_N: G(F(N)) -> N, m (x) phi -> phi(m).
template <class K>
struct MuResult {
    FModule<K> f;
    TensorResult<K> g;
    Morphism<K> mu;
};

template <class K>
MuResult<K> mu_map(const ModuleContext<K>& ctx, const Rep<K>& n) {
    auto fn = hom_as_gamma_module(ctx, n);
    auto g = tensor_over_gamma(ctx, fn.module);
    const auto& m = ctx.module;
    const std::size_t h = fn.hom->dim();
    std::vector<Matrix<K>> ev, mu;
    for (std::size_t v = 0; v < m->vertex_count(); ++v) {
        Matrix<K> e(n->field(), n->dim(v), m->dim(v) * h);
        for (std::size_t j = 0; j < h; ++j) {
            const auto& phi = (*fn.hom)[j].map(v);
            for (std::size_t i = 0; i < m->dim(v); ++i)
                for (std::size_t r = 0; r < n->dim(v); ++r) e(r, i * h + j) = phi(r, i);
        }
        const auto& p = g.quotient.map(v);
        mu.push_back(p.rows() ? e * right_inverse(p) : Matrix<K>(n->field(), n->dim(v), 0));
        ev.push_back(std::move(e));
    }
    Morphism<K> evaluation(g.tensor, n, ev);
    Morphism<K> muN(g.module, n, mu);
    if (!evaluation.commutes() || !(muN * g.quotient - evaluation).is_zero())
        throw InternalError("evaluation does not factor through the balanced tensor product");
    return {std::move(fn), std::move(g), std::move(muN)};
}

/// nu_X: X -> F(G(X)), x -> (m -> m (x) x), as a matrix in the Hom(M, G(X)) basis.
template <class K>
struct NuResult {
    TensorResult<K> g;
    FModule<K> fg;
    Matrix<K> nu;
};

template <class K>
NuResult<K> nu_map(const ModuleContext<K>& ctx, const GammaModule<K>& x) {
    auto g = tensor_over_gamma(ctx, x);
    auto fg = hom_as_gamma_module(ctx, g.module);
    const auto& m = ctx.module;
    const Field<K>& f = m->field();
    Matrix<K> nu(f, fg.hom->dim(), x.dim());
    for (std::size_t xi = 0; xi < x.dim(); ++xi) {
        Matrix<K> ex(f, x.dim(), 1);
        ex(xi, 0) = f.one();
        std::vector<Matrix<K>> maps;
        for (std::size_t v = 0; v < m->vertex_count(); ++v)
            maps.push_back(g.quotient.map(v) * kron(Matrix<K>::identity(f, m->dim(v)), ex));
        const auto c = fg.hom->coordinates(Morphism<K>(m, g.module, maps));
        for (std::size_t i = 0; i < c.size(); ++i) nu(i, xi) = c[i];
    }
    // Gamma-linearity of nu
    for (std::size_t i = 0; i < x.action().size(); ++i)
        if (!(fg.module.action()[i] * nu == nu * x.action()[i])) throw InternalError("nu is not Gamma-linear");
    return {std::move(g), std::move(fg), std::move(nu)};
}

template <class K>
bool is_adstatic(const ModuleContext<K>& ctx, const GammaModule<K>& x) {
    const auto r = nu_map(ctx, x);
    return is_invertible(r.nu);
}

// ---------------------------------------------------------------------------
// Right approximations

template <class K>
struct ApproximationResult {
    Rep<K> source;
    std::vector<std::size_t> multiplicities;  // copies of each summand type of M
    Morphism<K> q;
    Rep<K> omega;
    Morphism<K> omega_inclusion;

    bool surjective() const { return q.is_surjective(); }
};

/// Sum of copies of the indecomposable summands of M mapping onto N through a
/// Hom basis, then greedy deletion of components whose removal keeps every
/// Hom(B, q) surjective.
template <class K>
ApproximationResult<K> minimal_right_approximation(const ModuleContext<K>& ctx, const Rep<K>& n) {
    require_same_algebra(ctx.module, n);
    const auto types = ctx.summand_types();
    std::vector<HomSpace<K>> to_n;
    std::vector<std::vector<HomSpace<K>>> between;  // between[i][j] = Hom(B_i, B_j)
    for (const auto& b : types) to_n.emplace_back(b, n);
    for (const auto& bi : types) {
        between.emplace_back();
        for (const auto& bj : types) between.back().emplace_back(bi, bj);
    }
    struct Component {
        std::size_t type;
        Morphism<K> map;
    };
    std::vector<Component> comps;
    for (std::size_t j = 0; j < types.size(); ++j)
        for (const auto& phi : to_n[j].basis()) comps.push_back({j, phi});

    auto generates = [&](const std::vector<Component>& cs) {
        for (std::size_t i = 0; i < types.size(); ++i) {
            Matrix<K> span(n->field(), to_n[i].dim(), 0);
            for (const auto& c : cs)
                for (const auto& g : between[i][c.type].basis())
                    span = hstack(span, Matrix<K>::column(n->field(), to_n[i].coordinates(c.map * g)));
            if (rank(span) != to_n[i].dim()) return false;
        }
        return true;
    };
    for (std::size_t k = comps.size(); k-- > 0;) {
        auto trial = comps;
        trial.erase(trial.begin() + static_cast<long>(k));
        if (generates(trial)) comps = std::move(trial);
    }
    std::vector<Rep<K>> parts;
    std::vector<Morphism<K>> maps;
    ApproximationResult<K> out;
    out.multiplicities.assign(types.size(), 0);
    for (const auto& c : comps) {
        parts.push_back(types[c.type]);
        maps.push_back(c.map);
        ++out.multiplicities[c.type];
    }
    const auto sum = direct_sum(n->algebra(), parts);
    out.source = sum.sum;
    out.q = row_morphism(sum, maps, n);
    auto [omega, incl] = kernel(out.q);
    out.omega = omega;
    out.omega_inclusion = incl;
    if (rank(hom_map(ctx.module, out.q)) != hom_dim(ctx.module, n))
        throw InternalError("approximation lost surjectivity of Hom(M, q)");
    return out;
}

/// The non-minimal approximation M^h -> N built from a Hom(M, N) basis.
template <class K>
Morphism<K> basis_approximation(const Rep<K>& m, const Rep<K>& n) {
    const HomSpace<K> h(m, n);
    const auto sum = direct_sum(m->algebra(), std::vector<Rep<K>>(h.dim(), m));
    return row_morphism(sum, h.basis(), n);
}

// ---------------------------------------------------------------------------
// Presentations and the static predicate

/// Exactness data for a sequence M'' -f-> M' -q-> N -> 0 and its image under Hom(M, -).
struct PresentationReport {
    bool exact = false;               // im f = ker q and q surjective
    bool q_right_approximation = false;  // Hom(M, q) surjective
    bool hom_exact = false;           // Hom(M, -) sequence exact as well
    std::size_t hom_kernel_dim = 0;   // dim ker Hom(M, q)
    std::size_t hom_image_dim = 0;    // dim im Hom(M, f)
};

template <class K>
PresentationReport presentation_report(const Rep<K>& m, const Morphism<K>& f, const Morphism<K>& q) {
    PresentationReport r;
    if (!(q * f).is_zero()) throw UsageError("q o f is not zero");
    const std::size_t ker_q = q.source()->total_dim() - q.rank();
    r.exact = q.is_surjective() && f.rank() == ker_q;
    const HomSpace<K> h2(m, f.source()), h1(m, q.source()), h0(m, q.target());
    const Matrix<K> hq = hom_map(h1, h0, q), hf = hom_map(h2, h1, f);
    const std::size_t rq = rank(hq);
    r.q_right_approximation = rq == h0.dim();
    r.hom_kernel_dim = h1.dim() - rq;
    r.hom_image_dim = rank(hf);
    r.hom_exact = r.exact && r.q_right_approximation && r.hom_kernel_dim == r.hom_image_dim;
    return r;
}

template <class K>
struct StaticEvidence {
    bool is_static = false;
    bool mu_isomorphism = false;       // definition
    bool n_generated = false;          // generation of N
    bool omega_generated = false;      // generation of Omega_M(N)
    bool approximation_presentation = false;  // exact M'' -> M' -q-> N -> 0 with q a minimal approximation
    bool hom_exact_presentation = false;      // from the basis approximation, exact under Hom(M, -)
    std::size_t hom_dim = 0;
    ApproximationResult<K> approximation;
    std::optional<Morphism<K>> presentation_f;  // M'' -> M' witnessing the minimal presentation
    std::string witness;                        // which condition failed first, or "static"
};

template <class K>
StaticEvidence<K> is_static(const ModuleContext<K>& ctx, const Rep<K>& n) {
    require_same_algebra(ctx.module, n);
    const auto& m = ctx.module;
    StaticEvidence<K> ev;
    ev.hom_dim = hom_dim(m, n);

    // (a) mu_N an isomorphism
    const auto mu = mu_map(ctx, n);
    ev.mu_isomorphism = mu.mu.is_isomorphism();

    // (b) N and Omega_M(N) generated by M
    ev.approximation = minimal_right_approximation(ctx, n);
    ev.n_generated = ev.approximation.surjective();
    ev.omega_generated = generated_by(m, ev.approximation.omega);
    const bool route_b = ev.n_generated && ev.omega_generated;

    // (c) minimal q with an approximation of its kernel composed in
    {
        const auto p = minimal_right_approximation(ctx, ev.approximation.omega);
        const Morphism<K> f = ev.approximation.omega_inclusion * p.q;
        const auto rep = presentation_report(m, f, ev.approximation.q);
        ev.approximation_presentation = rep.exact && rep.q_right_approximation;
        if (ev.approximation_presentation) ev.presentation_f = f;
    }

    // (d) a different presentation, checked for exactness under Hom(M, -)
    {
        const Morphism<K> q0 = basis_approximation(m, n);
        auto [k0, k0_incl] = kernel(q0);
        const Morphism<K> f0 = k0_incl * basis_approximation(m, k0);
        ev.hom_exact_presentation = presentation_report(m, f0, q0).hom_exact;
    }

    if (ev.mu_isomorphism != route_b || route_b != ev.approximation_presentation ||
        ev.approximation_presentation != ev.hom_exact_presentation) {
        std::ostringstream os;
        os << "static cross-check disagreement: mu=" << ev.mu_isomorphism << " generation=" << route_b
           << " presentation=" << ev.approximation_presentation << " hom-exact=" << ev.hom_exact_presentation;
        throw InternalError(os.str());
    }
    ev.is_static = ev.mu_isomorphism;
    if (ev.is_static) ev.witness = "static";
    else if (!ev.n_generated) ev.witness = "N not generated by M";
    else ev.witness = "Omega_M(N) not generated by M";
    return ev;
}

// ---------------------------------------------------------------------------
// Diagonalization over a local Nakayama algebra

template <class K>
using GammaMatrix = std::vector<std::vector<Matrix<K>>>;  // entries are coordinate columns

template <class K>
struct Diagonalization {
    GammaMatrix<K> a, d, b;  // a * c * b = d
    std::vector<std::size_t> valuations;  // rad-adic valuation of each diagonal entry (length of Gamma if zero)
};

template <class K>
GammaMatrix<K> gamma_multiply(const FiniteDimAlgebra<K>& g, const GammaMatrix<K>& x, const GammaMatrix<K>& y) {
    const std::size_t r = x.size(), inner = y.size(), c = inner ? y[0].size() : 0;
    GammaMatrix<K> out(r, std::vector<Matrix<K>>(c, Matrix<K>(g.field(), g.dimension(), 1)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t k = 0; k < inner; ++k) out[i][j] += g.multiply(x[i][k], y[k][j]);
    return out;
}

template <class K>
GammaMatrix<K> gamma_identity(const FiniteDimAlgebra<K>& g, std::size_t n) {
    GammaMatrix<K> out(n, std::vector<Matrix<K>>(n, Matrix<K>(g.field(), g.dimension(), 1)));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = g.unit_vector();
    return out;
}

/// Invertibility over Gamma: left multiplication on Gamma^n is bijective.
template <class K>
bool gamma_invertible(const FiniteDimAlgebra<K>& g, const GammaMatrix<K>& x) {
    const std::size_t n = x.size(), d = g.dimension();
    if (n == 0) return true;
    if (x[0].size() != n) return false;
    Matrix<K> big(g.field(), n * d, n * d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) big.set_block(i * d, j * d, g.left_mult(x[i][j]));
    return is_invertible(big);
}

template <class K>
Diagonalization<K> diagonalize_over_local_nakayama(const FiniteDimAlgebra<K>& g, GammaMatrix<K> c, Rng& rng) {
    const auto ln = is_local_nakayama(g, rng);
    if (ln.local_nakayama != Verdict::yes) throw UsageError("Gamma is not a local Nakayama algebra");
    const Matrix<K> rad = radical(g);
    const auto powers = radical_powers(g, rad);
    auto valuation = [&](const Matrix<K>& x) {
        std::size_t v = 0;
        while (v + 1 < powers.size() && rank(hstack(powers[v + 1], x)) == powers[v + 1].cols()) ++v;
        return x.is_zero() ? ln.length : v;
    };
    const std::size_t rows = c.size(), cols = rows ? c[0].size() : 0;
    Diagonalization<K> out{gamma_identity(g, rows), {}, gamma_identity(g, cols), {}};
    auto& a = out.a;
    auto& b = out.b;
    auto sub = [&](Matrix<K>& x, const Matrix<K>& y) { x = x - y; };
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        std::size_t bi = rows, bj = cols, best = ln.length;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const std::size_t v = valuation(c[i][j]);
                if (v < best) best = v, bi = i, bj = j;
            }
        if (bi == rows) break;
        std::swap(c[t], c[bi]);
        std::swap(a[t], a[bi]);
        for (auto& row : c) std::swap(row[t], row[bj]);
        for (auto& row : b) std::swap(row[t], row[bj]);
        const Matrix<K> p = c[t][t];
        // rows below: c[i][t] = x p
        const Matrix<K> rp = g.right_mult(p);
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (c[i][t].is_zero()) continue;
            auto x = solve(rp, c[i][t]);
            if (!x) throw InternalError("pivot does not left-divide an entry of higher valuation");
            for (std::size_t j = 0; j < cols; ++j) sub(c[i][j], g.multiply(*x, c[t][j]));
            for (std::size_t j = 0; j < rows; ++j) sub(a[i][j], g.multiply(*x, a[t][j]));
        }
        // columns to the right: c[t][j] = p y
        const Matrix<K> lp = g.left_mult(p);
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (c[t][j].is_zero()) continue;
            auto y = solve(lp, c[t][j]);
            if (!y) throw InternalError("pivot does not right-divide an entry of higher valuation");
            for (std::size_t i = 0; i < rows; ++i) sub(c[i][j], g.multiply(c[i][t], *y));
            for (std::size_t i = 0; i < cols; ++i) sub(b[i][j], g.multiply(b[i][t], *y));
        }
    }
    out.d = std::move(c);
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) out.valuations.push_back(valuation(out.d[t][t]));
    return out;
}

// ---------------------------------------------------------------------------
// stat M enumeration and cok membership

enum class Completeness { complete, bounded };

inline std::string to_string(Completeness c) { return c == Completeness::complete ? "complete" : "bounded"; }

template <class K>
struct StatEnumeration {
    std::vector<Rep<K>> modules;  // pairwise non-isomorphic indecomposable static modules
    std::vector<std::string> labels;
    Completeness completeness = Completeness::bounded;
    bool undecided = false;
};

namespace detail {

template <class K>
bool add_if_new(std::vector<Rep<K>>& list, const Rep<K>& x, Rng& rng, bool& undecided) {
    for (const auto& y : list) {
        const auto r = are_isomorphic(x, y, rng);
        if (r.verdict == Verdict::yes) return false;
        if (r.verdict == Verdict::undecided) undecided = true;
    }
    list.push_back(x);
    return true;
}

/// Element of rad Gamma outside rad^2, as an endomorphism of M.
template <class K>
std::optional<Morphism<K>> radical_generator(const ModuleContext<K>& ctx) {
    const auto& g = *ctx.gamma();
    const Matrix<K> rad = radical(g);
    if (rad.cols() == 0) return std::nullopt;
    const Matrix<K> rad2 = g.product_span(rad, rad);
    for (std::size_t i = 0; i < rad.cols(); ++i) {
        const Matrix<K> x = rad.block(0, i, rad.rows(), 1);
        if (rank(hstack(rad2, x)) > rad2.cols()) return ctx.end.element(x);
    }
    return std::nullopt;
}

/// Enumerates morphisms M^b -> M^a given by a coefficient grid over End(M); the
/// visitor returns true to stop. Returns false when the grid exceeds the cap.
template <class K, class Fn>
bool for_each_matrix_map(const ModuleContext<K>& ctx, std::size_t a, std::size_t b, Fn&& visit,
                         std::uint64_t cap = enumeration_cap) {
    if constexpr (!Field<K>::finite) {
        return false;
    } else {
        const auto& m = ctx.module;
        const std::size_t n = ctx.end_basis().dim();
        const Field<K>& f = m->field();
        if (!bounded_power(f.size(), a * b * n, cap)) return false;
        const auto src = direct_sum(m->algebra(), std::vector<Rep<K>>(b, m));
        const auto dst = direct_sum(m->algebra(), std::vector<Rep<K>>(a, m));
        for_each_vector(f, a * b * n, [&](const std::vector<Zp>& coeff) {
            Morphism<K> map = Morphism<K>::zero(src.sum, dst.sum);
            for (std::size_t i = 0; i < a; ++i)
                for (std::size_t j = 0; j < b; ++j) {
                    std::vector<K> c(coeff.begin() + static_cast<long>((i * b + j) * n),
                                     coeff.begin() + static_cast<long>((i * b + j + 1) * n));
                    map = map + dst.injections[i] * ctx.end_basis().combine(c) * src.projections[j];
                }
            return !visit(map);
        });
        return true;
    }
}

}  // namespace detail

template <class K>
StatEnumeration<K> stat_enumerate(const ModuleContext<K>& ctx, std::size_t dim_bound, Rng& rng) {
    StatEnumeration<K> out;
    const auto& m = ctx.module;
    if (is_indecomposable(m, rng) != Verdict::yes) throw UsageError("stat_enumerate expects an indecomposable module");
    const auto ln = is_local_nakayama(*ctx.gamma(), rng);
    auto consider = [&](const Rep<K>& x, const std::string& label) {
        if (x->is_zero() || is_indecomposable(x, rng) != Verdict::yes) return;
        if (!is_static(ctx, x).is_static) return;
        if (detail::add_if_new(out.modules, x, rng, out.undecided)) out.labels.push_back(label);
    };
    if (ln.local_nakayama == Verdict::yes) {
        consider(m, "M");
        if (auto gen = detail::radical_generator(ctx)) {
            Morphism<K> gk = *gen;
            for (std::size_t k = 1; k < ln.length; ++k, gk = gk * *gen)
                consider(cokernel(gk).first, "M/im g^" + std::to_string(k));
        }
        out.completeness = out.undecided ? Completeness::bounded : Completeness::complete;
        return out;
    }
    // bounded search over cokernels of maps M^b -> M^a
    consider(m, "M");
    for (std::size_t a = 1; a <= dim_bound; ++a)
        for (std::size_t b = 1; b <= dim_bound; ++b)
            detail::for_each_matrix_map(ctx, a, b, [&](const Morphism<K>& f) {
                auto cok = cokernel(f).first;
                const auto d = decompose(cok, rng);
                if (d.certified != Verdict::yes) out.undecided = true;
                for (const auto& s : d.summands) consider(s.module, "summand of a cokernel");
                return false;
            });
    out.completeness = Completeness::bounded;
    return out;
}

enum class CokMembership { yes_with_witness, no_within_bounds, bounds_exhausted };

inline std::string to_string(CokMembership c) {
    switch (c) {
        case CokMembership::yes_with_witness: return "yes_with_witness";
        case CokMembership::no_within_bounds: return "no_within_bounds";
        case CokMembership::bounds_exhausted: return "bounds_exhausted";
    }
    return "?";
}

template <class K>
struct CokResult {
    CokMembership verdict = CokMembership::bounds_exhausted;
    std::optional<Morphism<K>> witness;  // f with cokernel isomorphic to N
    std::string route;
};

template <class K>
CokResult<K> cok_membership(const ModuleContext<K>& ctx, const Rep<K>& n, std::size_t bound, Rng& rng) {
    CokResult<K> out;
    const auto st = is_static(ctx, n);
    if (st.is_static) {
        out.verdict = CokMembership::yes_with_witness;
        out.witness = st.presentation_f;
        out.route = "static: approximation presentation";
        return out;
    }
    bool complete = true;
    const auto& m = ctx.module;
    for (std::size_t a = 1; a <= bound; ++a) {
        if (a * m->total_dim() < n->total_dim()) continue;
        for (std::size_t b = 1; b <= bound; ++b) {
            bool found = false;
            const bool ran = detail::for_each_matrix_map(ctx, a, b, [&](const Morphism<K>& f) {
                for (std::size_t v = 0; v < m->vertex_count(); ++v)
                    if (a * m->dim(v) - rank(f.map(v)) != n->dim(v)) return false;
                const auto iso = are_isomorphic(cokernel(f).first, n, rng);
                if (iso.verdict == Verdict::undecided) complete = false;
                if (iso.verdict != Verdict::yes) return false;
                out.witness = f;
                found = true;
                return true;
            });
            if (!ran) complete = false;
            if (found) {
                out.verdict = CokMembership::yes_with_witness;
                out.route = "grid search";
                return out;
            }
        }
    }
    out.verdict = complete ? CokMembership::no_within_bounds : CokMembership::bounds_exhausted;
    out.route = "grid search";
    return out;
}

// ---------------------------------------------------------------------------
// Triple modules

template <class K>
struct TripleResult {
    Verdict triple = Verdict::no;
    std::string reason;
    Rep<K> m1, m2;           // im f, ker f
    std::optional<Morphism<K>> f;
};

template <class K>
TripleResult<K> is_triple_module(const ModuleContext<K>& ctx, Rng& rng) {
    TripleResult<K> out;
    const auto& m = ctx.module;
    const auto ln = is_local_nakayama(*ctx.gamma(), rng);
    if (ln.local_nakayama != Verdict::yes) {
        out.triple = ln.local_nakayama == Verdict::undecided ? Verdict::undecided : Verdict::no;
        out.reason = "Gamma(M) is not local Nakayama";
        return out;
    }
    if (ln.length != 2) {
        out.reason = "Gamma(M) has length " + std::to_string(ln.length) + ", not 2";
        return out;
    }
    auto f = detail::radical_generator(ctx);
    if (!f || !((*f) * (*f)).is_zero()) throw InternalError("radical generator of a length-2 local algebra is not square-zero");
    out.f = f;
    out.m1 = image(*f).image;
    out.m2 = kernel(*f).first;
    const auto b = is_brick(out.m1, rng);
    if (b != Verdict::yes) {
        out.triple = b == Verdict::undecided ? Verdict::undecided : Verdict::no;
        out.reason = "M1 = im f is not a brick";
        return out;
    }
    // M2 / M1 for the inclusion im f in ker f
    const auto kf = kernel(*f);
    const auto imf = image(*f);
    std::vector<Matrix<K>> u;
    for (std::size_t v = 0; v < m->vertex_count(); ++v) {
        auto s = solve(kf.second.map(v), imf.mono.map(v));
        if (!s) throw InternalError("im f is not contained in ker f");
        u.push_back(*s);
    }
    const auto mid = quotient_representation(kf.first, u).first;
    const auto iso = are_isomorphic(mid, out.m1, rng);
    out.triple = iso.verdict;
    out.reason = iso.verdict == Verdict::yes ? "M2/M1 isomorphic to the brick M1" : "M2/M1 not isomorphic to M1";
    return out;
}

}  // namespace quivstat
