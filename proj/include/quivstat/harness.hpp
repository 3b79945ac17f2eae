#pragma once

// Bounded verification harnesses: every enumerated indecomposable over a
// representation-finite or tame quiver has the tame-side properties, and a
// wild quiver carries a triple module.

#include "ab_closure.hpp"
#include "classify.hpp"
#include "static.hpp"

namespace quivstat {

/// Grid size for the bounded cokernel scan of M^b -> M^a.
inline constexpr std::uint64_t harness_grid_cap = 4096;

template <class K>
struct Theorem1Module {
    IndecomposableEntry<K> entry;
    Verdict local_nakayama = Verdict::undecided;
    std::size_t gamma_dim = 0;
    std::size_t gamma_length = 0;
    std::size_t closure_size = 0;
    Verdict ab_projective = Verdict::undecided;
    std::size_t adstatic_checked = 0;  // quotients Gamma / rad^i tested
    bool adstatic_all = false;
    std::size_t cokernels_checked = 0;
    bool cokernels_static = false;
    bool grid_truncated = false;  // some (a, b) grid exceeded the cap
};

template <class K>
struct Theorem1Report {
    ClassificationReport classification;
    std::vector<Theorem1Module<K>> modules;
    std::vector<std::pair<IntVector, bool>> completeness;
    std::vector<std::string> failures;
    std::vector<std::string> undecided;
    bool pass() const { return failures.empty(); }
};

namespace detail {

inline std::string dims_label(const IntVector& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

/// Static verdicts cached up to isomorphism.
template <class K>
class StaticCache {
public:
    explicit StaticCache(const ModuleContext<K>& ctx) : ctx_(ctx) {}

    Verdict lookup(const Rep<K>& n, Rng& rng) {
        for (const auto& [x, v] : seen_) {
            const auto iso = are_isomorphic(n, x, rng);
            if (iso.verdict == Verdict::yes) return v;
            if (iso.verdict == Verdict::undecided) return Verdict::undecided;
        }
        const Verdict v = verdict_of(is_static(ctx_, n).is_static);
        seen_.emplace_back(n, v);
        return v;
    }

private:
    const ModuleContext<K>& ctx_;
    std::vector<std::pair<Rep<K>, Verdict>> seen_;
};

}  // namespace detail

template <class K>
Theorem1Module<K> theorem1_check(const IndecomposableEntry<K>& entry, std::size_t max_power, Rng& rng,
                                 std::vector<std::string>& failures, std::vector<std::string>& undecided) {
    Theorem1Module<K> out;
    out.entry = entry;
    const std::string who = "M" + detail::dims_label(entry.dims) + (entry.label.empty() ? "" : " " + entry.label);
    auto note = [&](Verdict v, const std::string& what) {
        if (v == Verdict::no) failures.push_back(who + ": " + what);
        if (v == Verdict::undecided) undecided.push_back(who + ": " + what);
    };
    const auto& m = entry.module;
    const auto ctx = make_context(m, rng);
    const auto& gamma = ctx.gamma();
    out.gamma_dim = gamma->dimension();

    const auto ln = is_local_nakayama(*gamma, rng);
    out.local_nakayama = ln.local_nakayama;
    out.gamma_length = ln.length;
    note(ln.local_nakayama, "Gamma(M) is not local Nakayama");

    const auto closure = ab_closure(m, rng);
    out.closure_size = closure.generators.size();
    if (!closure.stable) {
        undecided.push_back(who + ": ab closure did not stabilize within budget");
    } else {
        const auto ap = is_ab_projective(m, closure, rng);
        out.ab_projective = ap.projective;
        note(ap.projective, "not ab-projective");
    }

    const Matrix<K> rad = radical(*gamma);
    const auto powers = radical_powers(*gamma, rad);
    out.adstatic_all = true;
    for (std::size_t i = 1; i < powers.size(); ++i) {
        ++out.adstatic_checked;
        if (!is_adstatic(ctx, quotient_of_regular(gamma, powers[i]))) {
            out.adstatic_all = false;
            failures.push_back(who + ": Gamma/rad^" + std::to_string(i) + " is not adstatic");
        }
    }

    detail::StaticCache<K> cache(ctx);
    out.cokernels_static = true;
    for (std::size_t a = 1; a <= max_power; ++a)
        for (std::size_t b = 1; b <= max_power; ++b) {
            const bool ran = detail::for_each_matrix_map(
                ctx, a, b,
                [&](const Morphism<K>& f) {
                    ++out.cokernels_checked;
                    const auto d = decompose(cokernel(f).first, rng);
                    if (d.certified != Verdict::yes) undecided.push_back(who + ": cokernel decomposition undecided");
                    for (const auto& s : d.summands) {
                        const Verdict v = cache.lookup(s.module, rng);
                        if (v == Verdict::no) out.cokernels_static = false;
                        if (v == Verdict::undecided) undecided.push_back(who + ": static verdict undecided");
                    }
                    return !out.cokernels_static;
                },
                harness_grid_cap);
            if (!ran) out.grid_truncated = true;
        }
    if (!out.cokernels_static) failures.push_back(who + ": a cokernel of a map between copies of M is not static");
    return out;
}

template <class K>
Theorem1Report<K> theorem1_harness(const AlgebraPtr<K>& alg, std::size_t dim_bound, Rng& rng,
                                   std::size_t max_power = 2) {
    Theorem1Report<K> out;
    out.classification = classify(alg->bound_quiver());
    if (out.classification.verdict == RepresentationType::wild)
        throw UsageError("theorem1 needs a representation-finite or tame quiver");
    const auto en = enumerate_indecomposables(alg, dim_bound, rng);
    out.completeness = en.complete;
    if (en.undecided) out.undecided.push_back("indecomposable enumeration hit an undecided certificate");
    for (const auto& e : en.modules) out.modules.push_back(theorem1_check(e, max_power, rng, out.failures, out.undecided));
    return out;
}

// ---------------------------------------------------------------------------

template <class K>
struct Theorem2Report {
    ClassificationReport classification;
    bool found = false;
    std::optional<Rep<K>> brick;  // X with Ext^1(X, X) >= 2
    std::size_t brick_ext1 = 0;
    std::optional<Rep<K>> witness;  // triple module built from three copies of X
    std::optional<TripleResult<K>> triple;
    std::size_t stat_count = 0;
    Completeness stat_completeness = Completeness::bounded;
    std::size_t end_dim = 0;
    Verdict witness_brick = Verdict::undecided;  // no: add M has no brick, so it is not abelian
    std::size_t candidates_tried = 0;
    bool exhausted = false;
};

namespace detail {

/// Coboundary C^0 = (+)_v End(X_v) -> C^1 = (+)_a Hom(X_s, X_t), phi -> X_a phi_s - phi_t X_a.
template <class K>
Matrix<K> coboundary(const Rep<K>& x) {
    const Quiver& q = x->quiver();
    std::vector<std::size_t> off0{0}, off1{0};
    for (std::size_t v = 0; v < q.vertex_count(); ++v) off0.push_back(off0.back() + x->dim(v) * x->dim(v));
    for (const auto& a : q.arrows()) off1.push_back(off1.back() + x->dim(a.target) * x->dim(a.source));
    Matrix<K> d(x->field(), off1.back(), off0.back());
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const auto& a = q.arrow(ai);
        const auto& xa = x->map(ai);
        const std::size_t ds = x->dim(a.source), dt = x->dim(a.target);
        for (std::size_t r = 0; r < dt; ++r)
            for (std::size_t c = 0; c < ds; ++c) {
                const std::size_t row = off1[ai] + r * ds + c;
                for (std::size_t k = 0; k < ds; ++k) d(row, off0[a.source] + k * ds + c) += xa(r, k);
                for (std::size_t k = 0; k < dt; ++k) d(row, off0[a.target] + r * dt + k) -= xa(k, c);
            }
    }
    return d;
}

/// Three copies of X glued by cochains e (first over second), e2 (second over third) and h.
template <class K>
Rep<K> triple_extension(const Rep<K>& x, const std::vector<K>& e, const std::vector<K>& e2, const std::vector<K>& h) {
    const Quiver& q = x->quiver();
    std::vector<std::size_t> dims;
    for (auto d : x->dims()) dims.push_back(3 * d);
    std::vector<Matrix<K>> maps;
    std::size_t off = 0;
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const auto& a = q.arrow(ai);
        const std::size_t ds = x->dim(a.source), dt = x->dim(a.target);
        auto block = [&](const std::vector<K>& c) {
            Matrix<K> m(x->field(), dt, ds);
            for (std::size_t r = 0; r < dt; ++r)
                for (std::size_t col = 0; col < ds; ++col) m(r, col) = c[off + r * ds + col];
            return m;
        };
        Matrix<K> m(x->field(), 3 * dt, 3 * ds);
        for (std::size_t i = 0; i < 3; ++i) m.set_block(i * dt, i * ds, x->map(ai));
        m.set_block(0, ds, block(e));
        m.set_block(dt, 2 * ds, block(e2));
        m.set_block(0, 2 * ds, block(h));
        maps.push_back(m);
        off += dt * ds;
    }
    return make_rep(x->algebra(), dims, std::move(maps));
}

}  // namespace detail

/// Searches for a brick X with dim Ext^1(X, X) >= 2 and then over the F_p grid
/// of two extension classes and a corner cochain for a triple module.
template <class K>
Theorem2Report<K> theorem2_harness(const AlgebraPtr<K>& alg, std::size_t dim_bound, Rng& rng) {
    Theorem2Report<K> out;
    out.classification = classify(alg->bound_quiver());
    if (out.classification.verdict != RepresentationType::wild) throw UsageError("theorem2 needs a wild quiver");
    if constexpr (!Field<K>::finite) {
        throw UsageError("theorem2 searches a finite grid of extension classes; use a prime field");
    } else {
        const Field<K>& f = alg->field();
        const std::size_t n = alg->quiver().vertex_count();
        for (const auto& d : dimension_vectors(n, dim_bound)) {
            if (quadratic_form(out.classification.euler, d) > -1) continue;
            std::vector<std::size_t> dims(d.begin(), d.end());
            for (int attempt = 0; attempt < 32; ++attempt) {
                auto x = random_representation(alg, dims, rng);
                if (is_brick(x, rng) != Verdict::yes) continue;
                const Matrix<K> delta = detail::coboundary(x);
                const Matrix<K> classes = complement_basis(column_space(delta));
                if (classes.cols() < 2) continue;
                out.brick = x;
                out.brick_ext1 = classes.cols();
                const std::size_t c1 = delta.rows();
                auto cochain = [&](const std::vector<Zp>& coeff) {
                    return (classes * Matrix<K>::column(f, coeff)).col(0);
                };
                std::vector<std::vector<K>> nonzero_classes;
                for_each_vector(f, classes.cols(), [&](const std::vector<Zp>& c) {
                    if (std::any_of(c.begin(), c.end(), [](const Zp& z) { return !z.is_zero(); }))
                        nonzero_classes.push_back(cochain(c));
                    return nonzero_classes.size() < 64;
                });
                std::vector<std::vector<K>> corners{std::vector<K>(c1, f.zero())};
                if (bounded_power(f.size(), c1, harness_grid_cap))
                    for_each_vector(f, c1, [&](const std::vector<Zp>& c) {
                        if (std::any_of(c.begin(), c.end(), [](const Zp& z) { return !z.is_zero(); }))
                            corners.push_back(c);
                        return true;
                    });
                for (const auto& h : corners)
                    for (const auto& e : nonzero_classes)
                        for (const auto& e2 : nonzero_classes) {
                            ++out.candidates_tried;
                            auto m = detail::triple_extension(x, e, e2, h);
                            if (hom_dim(m, m) != 2) continue;
                            const auto ctx = make_context(m, rng);
                            auto tr = is_triple_module(ctx, rng);
                            if (tr.triple != Verdict::yes) continue;
                            const auto st = stat_enumerate(ctx, 1, rng);
                            out.witness = m;
                            out.triple = tr;
                            out.stat_count = st.modules.size();
                            out.stat_completeness = st.completeness;
                            out.end_dim = ctx.end.hom->dim();
                            out.witness_brick = is_brick(m, rng);
                            out.found = true;
                            return out;
                        }
            }
        }
        out.exhausted = true;
        return out;
    }
}

}  // namespace quivstat
