#pragma once

// 2x2 matrix calculus over the dyadic partial injections.
//
// An endomorphism f corresponds to the matrix
//
//     ( p f p#   p f q# )
//     ( q f p#   q f q# )
//
// and back via (a b; c d) |-> p# a p \/ p# b q \/ q# c p \/ q# d q.
// Matrices arising this way satisfy the rook condition: disjoint images
// along rows, disjoint domains along columns.

#include <cstdint>

#include "pinj.hpp"

namespace goi {

inline constexpr u64 default_max_iter = 256;

struct matrix2x2 {
    dyadic_pinj f00, f01, f10, f11;

    friend bool operator==(const matrix2x2 &, const matrix2x2 &) = default;

    static matrix2x2 identity() {
        return matrix2x2{dyadic_pinj::one(), dyadic_pinj::zero(), dyadic_pinj::zero(),
                         dyadic_pinj::one()};
    }
};

namespace detail {
inline bool pinj_disjoint_domains(const dyadic_pinj &f, const dyadic_pinj &g) {
    for (const piece &a : f.pieces())
        for (const piece &b : g.pieces())
            if (classes_meet(a.d, a.r, b.d, b.r))
                return false;
    return true;
}
inline bool pinj_disjoint_images(const dyadic_pinj &f, const dyadic_pinj &g) {
    for (const piece &a : f.pieces())
        for (const piece &b : g.pieces())
            if (classes_meet(a.e, a.s, b.e, b.s))
                return false;
    return true;
}
} // namespace detail

inline bool is_rook(const matrix2x2 &m) {
    return detail::pinj_disjoint_images(m.f00, m.f01) &&
           detail::pinj_disjoint_images(m.f10, m.f11) &&
           detail::pinj_disjoint_domains(m.f00, m.f10) &&
           detail::pinj_disjoint_domains(m.f01, m.f11);
}

inline matrix2x2 decompose(const dyadic_pinj &f) {
    return matrix2x2{compose(gen_p(), compose(f, gen_p_dag())),
                     compose(gen_p(), compose(f, gen_q_dag())),
                     compose(gen_q(), compose(f, gen_p_dag())),
                     compose(gen_q(), compose(f, gen_q_dag()))};
}

inline dyadic_pinj recompose(const matrix2x2 &m) {
    dyadic_pinj a = compose(gen_p_dag(), compose(m.f00, gen_p()));
    dyadic_pinj b = compose(gen_p_dag(), compose(m.f01, gen_q()));
    dyadic_pinj c = compose(gen_q_dag(), compose(m.f10, gen_p()));
    dyadic_pinj d = compose(gen_q_dag(), compose(m.f11, gen_q()));
    return union_disjoint(union_disjoint(a, b), union_disjoint(c, d));
}

// entry (i,k) = U_j  g_ij f_jk
inline matrix2x2 matrix_compose(const matrix2x2 &g, const matrix2x2 &f) {
    return matrix2x2{
        union_disjoint(compose(g.f00, f.f00), compose(g.f01, f.f10)),
        union_disjoint(compose(g.f00, f.f01), compose(g.f01, f.f11)),
        union_disjoint(compose(g.f10, f.f00), compose(g.f11, f.f10)),
        union_disjoint(compose(g.f10, f.f01), compose(g.f11, f.f11)),
    };
}

// f * g = p# f p \/ q# g q; evens carry f, odds carry g.
inline dyadic_pinj star_tensor(const dyadic_pinj &f, const dyadic_pinj &g) {
    return union_disjoint(compose(gen_p_dag(), compose(f, gen_p())),
                          compose(gen_q_dag(), compose(g, gen_q())));
}

namespace detail {

// base \/ U_{j>=0} exit . loop^j . seed, accumulated until the loop state
// loop^j . seed dies out. If it never does, the union has not provably
// stabilised and we report divergence rather than guess.
inline dyadic_pinj orbit_union(dyadic_pinj base, const dyadic_pinj &exit,
                               const dyadic_pinj &loop, const dyadic_pinj &seed,
                               u64 max_iter) {
    if (exit.is_zero() || seed.is_zero())
        return base;
    dyadic_pinj state = seed;
    for (u64 j = 0; j <= max_iter; ++j) {
        if (state.is_zero())
            return base;
        base = union_disjoint(base, compose(exit, state));
        state = compose(loop, state);
    }
    throw trace_divergence_error(max_iter);
}

} // namespace detail

// Tr(f) = f00 \/ U_j f01 f11^j f10 over the matrix of f. The terms are
// pairwise disjoint for any rook matrix (a token leaves the loop at most
// once), so the accumulating union cannot clash.
inline dyadic_pinj trace(const dyadic_pinj &f, u64 max_iter = default_max_iter) {
    matrix2x2 m = decompose(f);
    return detail::orbit_union(m.f00, m.f01, m.f11, m.f10, max_iter);
}

inline dyadic_pinj trace_matrix(const matrix2x2 &m, u64 max_iter = default_max_iter) {
    return detail::orbit_union(m.f00, m.f01, m.f11, m.f10, max_iter);
}

} // namespace goi
