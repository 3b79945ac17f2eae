#pragma once

// Krull-Schmidt decomposition, isomorphism testing and Nakayama-algebra
// operations on representations.

#include "algebra.hpp"

namespace quivstat {

template <class K>
Morphism<K> power(const Morphism<K>& f, std::size_t e) {
    Morphism<K> result = Morphism<K>::identity(f.source());
    Morphism<K> base = f;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

/// Morphisms in a Hom space, in search order: basis elements, then random
/// combinations, then (over F_p, within the cap) every element. The visitor
/// returns true to stop. Returns true when the visitor stopped the search and
/// sets `exhausted` when every element was seen.
template <class K, class Fn>
bool search_hom(const HomSpace<K>& h, Rng& rng, Fn&& visit, bool& exhausted) {
    exhausted = false;
    const Field<K>& f = h.source()->field();
    for (const auto& b : h.basis())
        if (visit(b)) return true;
    for (std::size_t t = 0; t < sampling_budget && h.dim() > 1; ++t) {
        std::vector<K> c(h.dim());
        for (auto& x : c) x = f.random(rng);
        if (visit(h.combine(c))) return true;
    }
    if constexpr (Field<K>::finite) {
        if (bounded_power(f.size(), h.dim(), enumeration_cap)) {
            bool stopped = false;
            for_each_vector(f, h.dim(), [&](const std::vector<Zp>& c) {
                stopped = visit(h.combine(c));
                return !stopped;
            });
            if (stopped) return true;
            exhausted = true;
        }
    }
    if (h.dim() == 0) exhausted = true;
    return false;
}

// ---------------------------------------------------------------------------
// Isomorphism

template <class K>
struct IsoResult {
    Verdict verdict = Verdict::undecided;
    std::optional<Morphism<K>> witness;  // an isomorphism X -> Y when verdict = yes
};

template <class K>
IsoResult<K> are_isomorphic(const Rep<K>& x, const Rep<K>& y, Rng& rng) {
    require_same_algebra(x, y);
    IsoResult<K> out;
    if (x->dims() != y->dims()) {
        out.verdict = Verdict::no;
        return out;
    }
    if (x->is_zero()) {
        out.verdict = Verdict::yes;
        out.witness = Morphism<K>::zero(x, y);
        return out;
    }
    const HomSpace<K> xy(x, y), yx(y, x);
    const auto ex = end_algebra(x);
    if (xy.dim() != ex.hom->dim() || yx.dim() != ex.hom->dim() || hom_dim(y, y) != ex.hom->dim()) {
        out.verdict = Verdict::no;
        return out;
    }
    for (const auto& f : xy.basis())
        if (f.is_isomorphism()) {
            out.verdict = Verdict::yes;
            out.witness = f;
            return out;
        }
    // X indecomposable: X = Y iff some g o f is a unit of End X, f, g running over bases.
    if (is_local(*ex.algebra, rng).local == Verdict::yes) {
        for (const auto& f : xy.basis())
            for (const auto& g : yx.basis())
                if ((g * f).is_isomorphism()) {
                    out.verdict = Verdict::yes;
                    out.witness = f;
                    return out;
                }
        out.verdict = Verdict::no;
        return out;
    }
    bool exhausted = false;
    const bool found = search_hom(xy, rng, [&](const Morphism<K>& f) {
        if (!f.is_isomorphism()) return false;
        out.witness = f;
        return true;
    }, exhausted);
    out.verdict = found ? Verdict::yes : (exhausted ? Verdict::no : Verdict::undecided);
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition

template <class K>
struct Summand {
    Rep<K> module;
    std::size_t multiplicity = 0;
};

template <class K>
struct DecompositionResult {
    std::vector<Summand<K>> summands;        // grouped up to isomorphism
    std::vector<Rep<K>> pieces;              // ungrouped indecomposable pieces
    std::vector<Morphism<K>> inclusions;     // piece -> X
    std::vector<Morphism<K>> projections;    // X -> piece, with sum of inclusion o projection = id
    std::vector<std::size_t> group;          // summand index of each piece
    Verdict certified = Verdict::yes;        // every piece certified indecomposable and grouping decided

    std::size_t count() const { return pieces.size(); }
};

namespace detail {

template <class K>
struct Split {
    std::optional<Morphism<K>> f;  // non-nilpotent, non-invertible endomorphism
    Verdict indecomposable = Verdict::undecided;
};

template <class K>
Split<K> find_split(const Rep<K>& x, Rng& rng) {
    const std::size_t n = x->total_dim();
    const auto e = end_algebra(x);
    Split<K> out;
    auto splits = [&](const Morphism<K>& f) {
        const Morphism<K> g = power(f, n);
        return !g.is_zero() && !g.is_isomorphism();
    };
    for (const auto& b : e.hom->basis())
        if (splits(b)) {
            out.f = b;
            out.indecomposable = Verdict::no;
            return out;
        }
    const Field<K>& f = x->field();
    for (std::size_t t = 0; t < sampling_budget && e.hom->dim() > 1; ++t) {
        std::vector<K> c(e.hom->dim());
        for (auto& v : c) v = f.random(rng);
        auto m = e.hom->combine(c);
        if (splits(m)) {
            out.f = m;
            out.indecomposable = Verdict::no;
            return out;
        }
    }
    const auto loc = is_local(*e.algebra, rng).local;
    if (loc != Verdict::no) {
        out.indecomposable = loc;
        return out;
    }
    if constexpr (Field<K>::finite) {
        if (bounded_power(f.size(), e.hom->dim(), enumeration_cap)) {
            for_each_vector(f, e.hom->dim(), [&](const std::vector<Zp>& c) {
                auto m = e.hom->combine(c);
                if (!splits(m)) return true;
                out.f = m;
                return false;
            });
            if (out.f) out.indecomposable = Verdict::no;
            else throw InternalError("End is not local but no splitting endomorphism exists");
        }
    }
    return out;
}

template <class K>
void decompose_into(const Rep<K>& x, const Morphism<K>& incl, const Morphism<K>& proj, DecompositionResult<K>& out,
                    Rng& rng) {
    if (x->is_zero()) return;
    auto split = find_split(x, rng);
    if (!split.f) {
        if (split.indecomposable != Verdict::yes) out.certified = Verdict::undecided;
        out.pieces.push_back(x);
        out.inclusions.push_back(incl);
        out.projections.push_back(proj);
        return;
    }
    const Morphism<K> g = power(*split.f, x->total_dim());
    auto [ker, ker_incl] = kernel(g);
    auto imf = image(g);
    std::vector<Matrix<K>> pk, pi;
    for (std::size_t v = 0; v < x->vertex_count(); ++v) {
        const Matrix<K> both = hstack(ker_incl.map(v), imf.mono.map(v));
        const Matrix<K> inv = *inverse(both);
        pk.push_back(inv.block(0, 0, ker->dim(v), x->dim(v)));
        pi.push_back(inv.block(ker->dim(v), 0, imf.image->dim(v), x->dim(v)));
    }
    const Morphism<K> proj_k(x, ker, pk), proj_i(x, imf.image, pi);
    decompose_into(ker, incl * ker_incl, proj_k * proj, out, rng);
    decompose_into(imf.image, incl * imf.mono, proj_i * proj, out, rng);
}

}  // namespace detail

/// Fitting-lemma recursion: X = ker f^n + im f^n for a non-nilpotent,
/// non-invertible endomorphism f, n = dim X.
template <class K>
DecompositionResult<K> decompose(const Rep<K>& x, Rng& rng) {
    DecompositionResult<K> out;
    const auto id = Morphism<K>::identity(x);
    detail::decompose_into(x, id, id, out, rng);
    for (const auto& piece : out.pieces) {
        std::size_t g = 0;
        for (; g < out.summands.size(); ++g) {
            const auto iso = are_isomorphic(out.summands[g].module, piece, rng);
            if (iso.verdict == Verdict::undecided) out.certified = Verdict::undecided;
            if (iso.verdict == Verdict::yes) break;
        }
        if (g == out.summands.size()) out.summands.push_back({piece, 0});
        ++out.summands[g].multiplicity;
        out.group.push_back(g);
    }
    return out;
}

/// Checks the split witnesses: p_i o e_j = delta_ij and sum e_i o p_i = id.
template <class K>
bool decomposition_witnessed(const Rep<K>& x, const DecompositionResult<K>& d) {
    Morphism<K> sum = Morphism<K>::zero(x, x);
    for (std::size_t i = 0; i < d.count(); ++i) {
        if (!d.inclusions[i].commutes() || !d.projections[i].commutes()) return false;
        for (std::size_t j = 0; j < d.count(); ++j) {
            const auto pe = d.projections[i] * d.inclusions[j];
            if (i == j ? !(pe.is_isomorphism() && (pe - Morphism<K>::identity(d.pieces[i])).is_zero()) : !pe.is_zero())
                return false;
        }
        sum = sum + d.inclusions[i] * d.projections[i];
    }
    return (sum - Morphism<K>::identity(x)).is_zero();
}

// ---------------------------------------------------------------------------
// Nakayama algebras

/// Serial: every radical layer J^k X / J^(k+1) X is simple or zero.
template <class K>
bool is_serial(const Rep<K>& x) {
    const auto series = radical_series(x);
    for (std::size_t k = 0; k + 1 < series.size(); ++k)
        if (total_columns(series[k]) - total_columns(series[k + 1]) > 1) return false;
    return true;
}

struct NakayamaResult {
    bool nakayama = false;
    std::vector<std::size_t> kupisch_series;  // lengths of P(1), ..., P(s)
};

template <class K>
NakayamaResult is_nakayama_algebra(const AlgebraPtr<K>& algebra) {
    NakayamaResult out{true, {}};
    for (std::size_t i = 0; i < algebra->quiver().vertex_count(); ++i) {
        const auto p = projective(algebra, i);
        out.kupisch_series.push_back(p->total_dim());
        if (!is_serial(p) || !is_serial(injective(algebra, i))) out.nakayama = false;
    }
    return out;
}

/// [len]S(s): the serial quotient of P(s) of the given length.
template <class K>
Rep<K> serial_module(const AlgebraPtr<K>& algebra, std::size_t s, std::size_t len) {
    const auto p = projective(algebra, s);
    if (!is_serial(p)) throw UsageError("P(" + std::to_string(s + 1) + ") is not serial");
    if (len > p->total_dim())
        throw UsageError("length " + std::to_string(len) + " exceeds the length " + std::to_string(p->total_dim()) +
                         " of P(" + std::to_string(s + 1) + ")");
    const auto series = radical_series(p);
    return quotient_representation(p, series[len]).first;
}

}  // namespace quivstat
