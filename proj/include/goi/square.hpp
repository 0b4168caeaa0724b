#pragma once

// Rook squares: the arrows of the two-object compact closed category with
// objects (I,I) and (N,N). A square
//
//         Y  <--a--  X
//         ^          |
//         b          c         src = (X, U), tgt = (Y, V)
//         |          v
//         V  --d-->  U
//
// carries a: X->Y, b: V->Y, c: X->U, d: V->U with disjoint images along
// {a,b} and {c,d} and disjoint domains along {a,c} and {b,d}. An
// endomorphism f of N determines the square of its matrix and conversely.
//
// Horizontal pasting (the execution formula) glues tgt-to-src and sums over
// paths; vertical pasting glues bottom-to-top. Both stabilise exactly when
// the loop state dies out, and diverge reportably otherwise.

#include <cstdint>
#include <string>

#include "matrix.hpp"
#include "pinj.hpp"
#include "tree.hpp"

namespace goi {

struct int_object {
    tree_ptr first;
    tree_ptr second;

    static int_object unit() { return int_object{object_tree::unit(), object_tree::unit()}; }
    static int_object nn() { return int_object{object_tree::leaf(), object_tree::leaf()}; }

    bool is_unit() const { return first->is_unit() && second->is_unit(); }
    int_object dual() const { return int_object{second, first}; }
};

inline bool object_equal(const int_object &a, const int_object &b) {
    return tree_equal(a.first, b.first) && tree_equal(a.second, b.second);
}

struct rook_square {
    int_object src;
    int_object tgt;
    dyadic_pinj a, b, c, d;
};

inline bool square_equal(const rook_square &x, const rook_square &y) {
    return object_equal(x.src, y.src) && object_equal(x.tgt, y.tgt) && x.a == y.a &&
           x.b == y.b && x.c == y.c && x.d == y.d;
}

inline bool is_rook_square(const rook_square &s) {
    return detail::pinj_disjoint_images(s.a, s.b) && detail::pinj_disjoint_images(s.c, s.d) &&
           detail::pinj_disjoint_domains(s.a, s.c) && detail::pinj_disjoint_domains(s.b, s.d);
}

inline rook_square identity_square() {
    return rook_square{int_object::nn(), int_object::nn(), dyadic_pinj::one(),
                       dyadic_pinj::zero(), dyadic_pinj::zero(), dyadic_pinj::one()};
}

// the scalar: identity at the unit object, all edges formal
inline rook_square unit_square() {
    return rook_square{int_object::unit(), int_object::unit(), dyadic_pinj::zero(),
                       dyadic_pinj::zero(), dyadic_pinj::zero(), dyadic_pinj::zero()};
}

inline rook_square square_from_endo(const dyadic_pinj &f) {
    matrix2x2 m = decompose(f);
    return rook_square{int_object::nn(), int_object::nn(), m.f00, m.f01, m.f10, m.f11};
}

inline dyadic_pinj endo_from_square(const rook_square &s) {
    if (!object_equal(s.src, int_object::nn()) || !object_equal(s.tgt, int_object::nn()))
        throw type_mismatch_error("only (N,N)-endomorphism squares recompose");
    return recompose(matrix2x2{s.a, s.b, s.c, s.d});
}

// an element of (N,N): the value rides the up edge
inline rook_square element_square(const dyadic_pinj &f) {
    return rook_square{int_object::unit(), int_object::nn(), dyadic_pinj::zero(), f,
                       dyadic_pinj::zero(), dyadic_pinj::zero()};
}

// a co-element of (N,N): the value rides the down edge
inline rook_square coelement_square(const dyadic_pinj &f) {
    return rook_square{int_object::nn(), int_object::unit(), dyadic_pinj::zero(),
                       dyadic_pinj::zero(), f, dyadic_pinj::zero()};
}

// Horizontal pasting, g after f. Entry by entry:
//   a' = U g.a (f.b g.c)^j f.a
//   b' = g.b \/ U g.a (f.b g.c)^j (f.b g.d)
//   c' = f.c \/ U f.d (g.c f.b)^j (g.c f.a)
//   d' = U f.d (g.c f.b)^j g.d
inline rook_square compose_int(const rook_square &g, const rook_square &f,
                               u64 max_iter = default_max_iter) {
    if (!object_equal(f.tgt, g.src))
        throw type_mismatch_error("square composition: inner objects differ");
    dyadic_pinj loop_y = compose(f.b, g.c); // around the glued edge, exiting upward
    dyadic_pinj loop_u = compose(g.c, f.b); // same loop seen from below
    rook_square r;
    r.src = f.src;
    r.tgt = g.tgt;
    r.a = detail::orbit_union(dyadic_pinj::zero(), g.a, loop_y, f.a, max_iter);
    r.b = detail::orbit_union(g.b, g.a, loop_y, compose(f.b, g.d), max_iter);
    r.c = detail::orbit_union(f.c, f.d, loop_u, compose(g.c, f.a), max_iter);
    r.d = detail::orbit_union(dyadic_pinj::zero(), f.d, loop_u, g.d, max_iter);
    return r;
}

// Vertical pasting, g on top of f; feedback runs through g's bottom edge
// and f's top edge:
//   a' = g.a \/ U g.b (f.a g.d)^j (f.a g.c)
//   b' = U g.b (f.a g.d)^j f.b
//   c' = U f.c (g.d f.a)^j g.c
//   d' = f.d \/ U f.c (g.d f.a)^j (g.d f.b)
inline rook_square compose_goi(const rook_square &g, const rook_square &f,
                               u64 max_iter = default_max_iter) {
    if (!tree_equal(g.src.second, f.src.first) || !tree_equal(g.tgt.second, f.tgt.first))
        throw type_mismatch_error("vertical pasting: shared edge objects differ");
    dyadic_pinj loop_v = compose(f.a, g.d);
    dyadic_pinj loop_u = compose(g.d, f.a);
    rook_square r;
    r.src = int_object{g.src.first, f.src.second};
    r.tgt = int_object{g.tgt.first, f.tgt.second};
    r.a = detail::orbit_union(g.a, g.b, loop_v, compose(f.a, g.c), max_iter);
    r.b = detail::orbit_union(dyadic_pinj::zero(), g.b, loop_v, f.b, max_iter);
    r.c = detail::orbit_union(dyadic_pinj::zero(), f.c, loop_u, g.c, max_iter);
    r.d = detail::orbit_union(f.d, f.c, loop_u, compose(g.d, f.b), max_iter);
    return r;
}

namespace detail {

// One tensor edge. When both slots are inhabited the first operand rides the
// evens and the second the odds; a unit slot drops its coding (strictness),
// and its formal edge is the zero map anyway.
inline dyadic_pinj box_edge(const dyadic_pinj &mf, const dyadic_pinj &mg, bool in_both,
                            bool out_both) {
    dyadic_pinj cf = mf, cg = mg;
    if (in_both) {
        cf = compose(cf, gen_p());
        cg = compose(cg, gen_q());
    }
    if (out_both) {
        cf = compose(gen_p_dag(), cf);
        cg = compose(gen_q_dag(), cg);
    }
    return union_disjoint(cf, cg);
}

inline tree_ptr tensor_component(const tree_ptr &x, const tree_ptr &y) {
    if (x->is_unit())
        return y;
    if (y->is_unit())
        return x;
    if (x->is_leaf() && y->is_leaf())
        return object_tree::leaf(); // N is strictly self-similar here
    return object_tree::node(x, y);
}

} // namespace detail

inline rook_square box_tensor(const rook_square &f, const rook_square &g) {
    bool in_x = !f.src.first->is_unit() && !g.src.first->is_unit();
    bool in_v = !f.tgt.second->is_unit() && !g.tgt.second->is_unit();
    bool out_y = !f.tgt.first->is_unit() && !g.tgt.first->is_unit();
    bool out_u = !f.src.second->is_unit() && !g.src.second->is_unit();
    rook_square r;
    r.src = int_object{detail::tensor_component(f.src.first, g.src.first),
                       detail::tensor_component(f.src.second, g.src.second)};
    r.tgt = int_object{detail::tensor_component(f.tgt.first, g.tgt.first),
                       detail::tensor_component(f.tgt.second, g.tgt.second)};
    r.a = detail::box_edge(f.a, g.a, in_x, out_y);
    r.b = detail::box_edge(f.b, g.b, in_v, out_y);
    r.c = detail::box_edge(f.c, g.c, in_x, out_u);
    r.d = detail::box_edge(f.d, g.d, in_v, out_u);
    return r;
}

// The dual swaps the object components and rotates the square half a turn;
// at (N,N) it is a dagger.
inline rook_square dual(const rook_square &s) {
    return rook_square{s.tgt.dual(), s.src.dual(), s.d, s.c, s.b, s.a};
}

// unit and co-unit of the compact closed structure
inline rook_square eta() { return element_square(gen_sigma()); }
inline rook_square epsilon() { return coelement_square(gen_sigma()); }

// canonical isomorphisms of the pasting tensor, as endomorphism squares
inline rook_square assoc_T() {
    return rook_square{int_object::nn(), int_object::nn(), gen_tau(), dyadic_pinj::zero(),
                       dyadic_pinj::zero(), gen_tau_inv()};
}
inline rook_square assoc_T_inv() {
    return rook_square{int_object::nn(), int_object::nn(), gen_tau_inv(), dyadic_pinj::zero(),
                       dyadic_pinj::zero(), gen_tau()};
}
inline rook_square sym_S() {
    return rook_square{int_object::nn(), int_object::nn(), gen_sigma(), dyadic_pinj::zero(),
                       dyadic_pinj::zero(), gen_sigma()};
}

// f rides the top rail (a homomorphic embedding), or the bottom rail
// (an anti-homomorphic one).
inline rook_square embed_left(const dyadic_pinj &f) {
    return rook_square{int_object::nn(), int_object::nn(), f, dyadic_pinj::zero(),
                       dyadic_pinj::zero(), dyadic_pinj::one()};
}
inline rook_square embed_right(const dyadic_pinj &f) {
    return rook_square{int_object::nn(), int_object::nn(), dyadic_pinj::one(),
                       dyadic_pinj::zero(), dyadic_pinj::zero(), f};
}

} // namespace goi
