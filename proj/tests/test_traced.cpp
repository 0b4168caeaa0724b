#include <doctest.h>

#include <vector>

#include "goi/algebra.hpp"
#include "goi/matrix.hpp"
#include "goi/tree.hpp"
#include "goi/words.hpp"

using namespace goi;

namespace {
dyadic_pinj one() { return dyadic_pinj::one(); }
dyadic_pinj zero() { return dyadic_pinj::zero(); }
} // namespace

TEST_CASE("matrix of the named elements") {
    // expanding sigma = p#q \/ q#p through the four conjugations kills the
    // diagonal and leaves identities off it
    matrix2x2 ms = decompose(gen_sigma());
    CHECK(ms.f00 == zero());
    CHECK(ms.f01 == one());
    CHECK(ms.f10 == one());
    CHECK(ms.f11 == zero());

    CHECK(decompose(one()) == matrix2x2::identity());

    matrix2x2 mt = decompose(gen_tau());
    CHECK(mt.f00 == gen_p_dag());
    CHECK(mt.f01 == compose(gen_q_dag(), gen_p()));
    CHECK(mt.f10 == zero());
    CHECK(mt.f11 == gen_q());

    CHECK(is_rook(ms));
    CHECK(is_rook(mt));
}

TEST_CASE("decompose and recompose are mutually inverse") {
    CHECK(recompose(matrix2x2::identity()) == one());
    matrix2x2 assoc{gen_p_dag(), compose(gen_q_dag(), gen_p()), zero(), gen_q()};
    CHECK(equals(recompose(assoc), gen_tau()));
    matrix2x2 split{gen_p_dag(), compose(gen_q_dag(), gen_q()), zero(), gen_p()};
    CHECK(recompose(split) == delta_split());
    splitmix64 rng(23);
    for (int k = 0; k < 100; ++k) {
        dyadic_pinj f = evaluate(random_word(rng, 1 + rng.below(6)));
        matrix2x2 m = decompose(f);
        CHECK(is_rook(m));
        CHECK(recompose(m) == f);
        CHECK(decompose(recompose(m)) == m);
    }
    // a column overlap is not a rook matrix and cannot recompose
    matrix2x2 bad{one(), zero(), one(), zero()};
    CHECK_THROWS_AS(recompose(bad), not_disjoint_error);
}

TEST_CASE("matrix composition is composition in disguise") {
    matrix2x2 ms = decompose(gen_sigma());
    CHECK(matrix_compose(ms, ms) == matrix2x2::identity());

    matrix2x2 md = decompose(delta_split());
    matrix2x2 mn = decompose(nabla_merge());
    CHECK(matrix_compose(md, mn) == matrix2x2::identity());
    CHECK(matrix_compose(mn, md) == matrix2x2::identity());

    splitmix64 rng(29);
    for (int k = 0; k < 60; ++k) {
        dyadic_pinj f = evaluate(random_word(rng, 1 + rng.below(5)));
        dyadic_pinj g = evaluate(random_word(rng, 1 + rng.below(5)));
        matrix2x2 mf = decompose(f), mg = decompose(g);
        CHECK(matrix_compose(mg, mf) == decompose(compose(g, f)));
        CHECK(matrix_compose(mf, matrix2x2::identity()) == mf);
        CHECK(matrix_compose(matrix2x2::identity(), mf) == mf);
    }
}

TEST_CASE("star tensor runs both maps in parallel") {
    dyadic_pinj pq = star_tensor(gen_p(), gen_q());
    CHECK(pq.apply(4) == 2); // 2 * p(2)
    CHECK(star_tensor(one(), one()) == one());
    CHECK(star_tensor(zero(), zero()) == zero());

    splitmix64 rng(31);
    for (int k = 0; k < 30; ++k) {
        dyadic_pinj f = evaluate(random_word(rng, 3));
        dyadic_pinj g = evaluate(random_word(rng, 3));
        dyadic_pinj fg = star_tensor(f, g);
        for (u64 n = 0; n < (1 << 12); ++n) {
            std::optional<u64> want;
            if (n % 2 == 0) {
                auto v = f.apply(n / 2);
                want = v ? std::optional<u64>(2 * *v) : std::optional<u64>{};
            } else {
                auto v = g.apply((n - 1) / 2);
                want = v ? std::optional<u64>(2 * *v + 1) : std::optional<u64>{};
            }
            CHECK(fg.apply(n) == want);
        }
        // functoriality
        dyadic_pinj h = evaluate(random_word(rng, 3));
        dyadic_pinj i = evaluate(random_word(rng, 3));
        CHECK(compose(star_tensor(f, g), star_tensor(h, i)) ==
              star_tensor(compose(f, h), compose(g, i)));
    }
}

TEST_CASE("trace") {
    CHECK(trace(gen_sigma()) == one()); // yanking
    CHECK(trace(one()) == one());

    splitmix64 rng(37);
    for (int k = 0; k < 50; ++k) {
        dyadic_pinj f = evaluate(random_word(rng, 1 + rng.below(5)));
        // star with the empty map leaves only the first component
        dyadic_pinj traced = trace(star_tensor(f, zero()));
        CHECK(traced == f);
        for (u64 n = 0; n < (1 << 12); ++n)
            CHECK(traced.apply(n) == f.apply(n));
    }
}

TEST_CASE("trace keeps iterating while the loop state is alive") {
    // t_0 = exit . seed is empty here but t_1 is not: stopping at the first
    // empty term would lose the whole value
    matrix2x2 m{zero(),
                dyadic_pinj::single(piece{2, 2, 0, 0}),  // exit: 4k+2 -> k
                dyadic_pinj::single(piece{0, 0, 2, 0}),  // seed: k -> 4k
                dyadic_pinj::single(piece{2, 0, 2, 2})}; // loop: 4k -> 4k+2
    CHECK(is_rook(m));
    CHECK(compose(m.f01, m.f10) == zero());
    CHECK(trace_matrix(m) == one());
}

TEST_CASE("trace reports divergence instead of guessing") {
    // the loop entry keeps climbing and the exit is reachable never
    matrix2x2 m = decompose(gen_q_dag());
    CHECK(m.f01 == zero());
    CHECK(trace_matrix(m) == zero()); // empty exit edge: nothing ever leaves

    // with a live exit edge and an endless even-valued loop the iteration
    // must give up: the exit lives on the odds and is never reached
    matrix2x2 climb{zero(), dyadic_pinj::single(piece{1, 1, 0, 0}),
                    dyadic_pinj::single(piece{0, 0, 3, 0}),
                    dyadic_pinj::single(piece{2, 0, 3, 4})};
    CHECK(is_rook(climb));
    CHECK_THROWS_AS(trace_matrix(climb, 32), trace_divergence_error);
}

TEST_CASE("object trees and their codes") {
    tree_ptr L = object_tree::leaf();
    tree_ptr LL = object_tree::node(L, L);
    tree_ptr left3 = object_tree::node(LL, L);
    tree_ptr right3 = object_tree::node(L, LL);

    CHECK(phi_code(L) == one());
    CHECK(phi_code(LL) == one());
    CHECK_THROWS_AS(phi_code(object_tree::unit()), unit_has_no_code_error);

    // the two bracketings of three leaves differ by exactly the associator
    CHECK(!(phi_code(left3) == phi_code(right3)));
    CHECK(compose(phi_code(left3), dagger(phi_code(right3))) == gen_tau());

    // codes and decodes cancel for every shape with up to five leaves
    std::vector<tree_ptr> shapes{L};
    for (int round = 0; round < 2; ++round) {
        std::vector<tree_ptr> next = shapes;
        for (const tree_ptr &a : shapes)
            for (const tree_ptr &b : shapes)
                if (a->leaf_count() + b->leaf_count() <= 5)
                    next.push_back(object_tree::node(a, b));
        shapes = next;
    }
    for (const tree_ptr &t : shapes) {
        CHECK(compose(phi_code(t), phi_decode(t)) == one());
        CHECK(compose(phi_decode(t), phi_code(t)) == one());
    }
}

TEST_CASE("typed arrows keep shapes straight") {
    tree_ptr L = object_tree::leaf();
    typed_arrow f = typed_from_endo(gen_tau());
    typed_arrow g = typed_from_endo(gen_sigma());

    CHECK(typed_equal(typed_tensor(typed_identity(object_tree::unit()), f), f));
    CHECK(typed_equal(typed_tensor(f, typed_identity(object_tree::unit())), f));
    CHECK(typed_equal(typed_compose(f, typed_identity(L)), f));
    CHECK(typed_tensor(f, g).code == star_tensor(f.code, g.code));

    typed_arrow split = typed_arrow(L, object_tree::node(L, L), delta_split());
    CHECK_THROWS_AS(typed_compose(split, split), type_mismatch_error);
    CHECK_THROWS_AS(typed_arrow(object_tree::unit(), L, dyadic_pinj::zero()),
                    type_mismatch_error);

    // naturality of the associator through typed composition
    typed_arrow assoc = typed_assoc(L, L, L);
    typed_arrow lhs = typed_compose(assoc, typed_tensor(f, typed_tensor(g, f)));
    typed_arrow rhs = typed_compose(typed_tensor(typed_tensor(f, g), f), assoc);
    CHECK(typed_equal(lhs, rhs));
}
