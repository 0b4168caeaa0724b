#include <doctest.h>

#include <optional>

#include "goi/io.hpp"
#include "goi/pinj.hpp"
#include "goi/words.hpp"

using namespace goi;

namespace {

// pointwise application of the defining case formulas, used as the oracle
std::optional<u64> by_formula(const std::string &name, u64 n) {
    return pointwise_generator(name, n);
}

void check_pointwise(const dyadic_pinj &f, const std::string &name, u64 window) {
    for (u64 n = 0; n < window; ++n)
        CHECK(f.apply(n) == by_formula(name, n));
}

} // namespace

TEST_CASE("generator values match their case formulas") {
    check_pointwise(gen_p(), "p", 1 << 12);
    check_pointwise(gen_q(), "q", 1 << 12);
    check_pointwise(gen_p_dag(), "P", 1 << 12);
    check_pointwise(gen_q_dag(), "Q", 1 << 12);
    check_pointwise(gen_sigma(), "s", 1 << 12);
    check_pointwise(gen_tau(), "t", 1 << 12);
    check_pointwise(gen_tau_inv(), "t'", 1 << 12);

    CHECK(gen_p().apply(6) == 3);
    CHECK(!gen_p().apply(7));
    CHECK(dyadic_pinj::one().apply(42) == 42);
    CHECK(gen_sigma().apply(4) == 5);
    CHECK(gen_sigma().apply(5) == 4);
    CHECK(gen_tau().apply(4) == 8);
    CHECK(gen_tau().apply(1) == 2);
    CHECK(gen_tau().apply(3) == 1);
}

TEST_CASE("polycyclic relations hold exactly") {
    CHECK(compose(gen_p(), gen_p_dag()) == dyadic_pinj::one());
    CHECK(compose(gen_q(), gen_q_dag()) == dyadic_pinj::one());
    CHECK(compose(gen_p(), gen_q_dag()) == dyadic_pinj::zero());
    CHECK(compose(gen_q(), gen_p_dag()) == dyadic_pinj::zero());
    dyadic_pinj pp = compose(gen_p_dag(), gen_p());
    dyadic_pinj qq = compose(gen_q_dag(), gen_q());
    CHECK(union_disjoint(pp, qq) == dyadic_pinj::one());
    CHECK(compose(gen_tau_inv(), gen_tau()) == dyadic_pinj::one());
    CHECK(compose(gen_tau(), gen_tau_inv()) == dyadic_pinj::one());
}

TEST_CASE("zero absorbs and the empty map is the unit of union") {
    dyadic_pinj f = compose(gen_tau(), gen_sigma());
    CHECK(compose(dyadic_pinj::zero(), f) == dyadic_pinj::zero());
    CHECK(compose(f, dyadic_pinj::zero()) == dyadic_pinj::zero());
    CHECK(union_disjoint(f, dyadic_pinj::zero()) == f);
    CHECK(union_disjoint(dyadic_pinj::zero(), f) == f);
}

TEST_CASE("overlapping unions are rejected with a witness") {
    CHECK_THROWS_AS(union_disjoint(dyadic_pinj::one(), dyadic_pinj::one()),
                    not_disjoint_error);
    // compatible overlap (the maps agree on the overlap) is still rejected
    dyadic_pinj evens = compose(gen_p_dag(), gen_p());
    CHECK_THROWS_AS(union_disjoint(dyadic_pinj::one(), evens), not_disjoint_error);
    try {
        union_disjoint(evens, evens);
        CHECK(false);
    } catch (const not_disjoint_error &e) {
        CHECK(e.depth == 1);
        CHECK(e.res == 0);
    }
    // disjoint domains are not enough: p and q share their whole image
    CHECK_THROWS_AS(union_disjoint(gen_p(), gen_q()), not_disjoint_error);
}

TEST_CASE("converse is an involutive anti-homomorphism") {
    // sigma is a self-inverse bijection, so its converse is itself
    for (u64 n = 0; n < (1 << 10); ++n)
        CHECK(gen_sigma().apply(*gen_sigma().apply(n)) == n);
    CHECK(dagger(gen_sigma()) == gen_sigma());
    CHECK(dagger(dyadic_pinj::one()) == dyadic_pinj::one());
    CHECK(dagger(gen_p()) == gen_p_dag());

    splitmix64 rng(7);
    for (int k = 0; k < 50; ++k) {
        dyadic_pinj f = evaluate(random_word(rng, 3));
        dyadic_pinj g = evaluate(random_word(rng, 3));
        CHECK(dagger(dagger(f)) == f);
        CHECK(dagger(compose(g, f)) == compose(dagger(f), dagger(g)));
    }
}

TEST_CASE("source and target idempotents") {
    // p is defined on the evens, so its source idempotent fixes exactly them
    dyadic_pinj src = source_idempotent(gen_p());
    for (u64 n = 0; n < (1 << 10); ++n)
        CHECK(src.apply(n) == (n % 2 == 0 ? std::optional<u64>(n) : std::nullopt));
    CHECK(src == dyadic_pinj::single(piece{1, 0, 1, 0}));
    CHECK(source_idempotent(dyadic_pinj::one()) == dyadic_pinj::one());
    CHECK(target_idempotent(dyadic_pinj::zero()) == dyadic_pinj::zero());
    CHECK(compose(gen_p(), dagger(gen_p())) == target_idempotent(gen_p()));
}

TEST_CASE("composition agrees with pointwise application") {
    splitmix64 rng(11);
    for (int k = 0; k < 20; ++k) {
        dyadic_pinj f = evaluate(random_word(rng, 4));
        dyadic_pinj g = evaluate(random_word(rng, 4));
        dyadic_pinj gf = compose(g, f);
        for (u64 n = 0; n <= (u64{1} << 16); ++n) {
            auto inner = f.apply(n);
            std::optional<u64> expect = inner ? g.apply(*inner) : std::optional<u64>{};
            CHECK(gf.apply(n) == expect);
        }
    }
}

TEST_CASE("the two equality routes agree and canonical forms are stable") {
    // p is not q: they disagree at n = 2 already
    CHECK(gen_p().apply(2) == 1);
    CHECK(!gen_q().apply(2));
    CHECK(!equals(gen_p(), gen_q()));
    CHECK(equals(gen_p(), gen_p()));

    splitmix64 rng(13);
    for (int k = 0; k < 1000; ++k) {
        dyadic_pinj f = evaluate(random_word(rng, 1 + rng.below(5)));
        dyadic_pinj g = evaluate(random_word(rng, 1 + rng.below(5)));
        CHECK(equals(f, g) == (f == g));
        // canonicalization is idempotent: rebuilding from pieces changes nothing
        CHECK(dyadic_pinj::from_pieces(f.pieces()) == f);
    }
}

TEST_CASE("closure under the three operations") {
    splitmix64 rng(17);
    for (int k = 0; k < 100; ++k) {
        dyadic_pinj f = evaluate(random_word(rng, 1 + rng.below(6)));
        // every produced value revalidates as a well-formed canonical union
        CHECK_NOTHROW(dyadic_pinj::from_pieces(f.pieces()));
        CHECK_NOTHROW(dyadic_pinj::from_pieces(dagger(f).pieces()));
    }
}

TEST_CASE("canonicalization undoes any refinement") {
    splitmix64 rng(127);
    for (int k = 0; k < 200; ++k) {
        dyadic_pinj f = evaluate(random_word(rng, 1 + rng.below(5)));
        u64 depth = 0;
        for (const piece &p : f.pieces())
            depth = std::max(depth, p.d);
        // split every piece down to a uniform depth and rebuild
        std::vector<piece> fine = refine_to_depth(f, depth + 1 + rng.below(3));
        CHECK(dyadic_pinj::from_pieces(fine) == f);
    }
}

TEST_CASE("sibling merging rebuilds split identities") {
    // the two halves of the identity merge back to the single piece
    dyadic_pinj u = union_disjoint(compose(gen_p_dag(), gen_p()),
                                   compose(gen_q_dag(), gen_q()));
    CHECK(u.pieces().size() == 1);
    CHECK(u == dyadic_pinj::one());
}

TEST_CASE("depth limit is enforced") {
    dyadic_pinj doubler = gen_p_dag();
    dyadic_pinj f = doubler;
    CHECK_THROWS_AS(
        [&] {
            for (int i = 0; i < 70; ++i)
                f = compose(doubler, f);
        }(),
        depth_exceeded_error);
}

TEST_CASE("json round-trips are bit exact") {
    splitmix64 rng(19);
    for (int k = 0; k < 100; ++k) {
        dyadic_pinj f = evaluate(random_word(rng, 1 + rng.below(6)));
        json j = to_json(f);
        CHECK(pinj_from_json(j) == f);
        CHECK(to_json(pinj_from_json(j)) == j);
    }
    CHECK(to_json(dyadic_pinj::zero())["pieces"].empty());
    CHECK_THROWS_AS(pinj_from_json(json{{"pieces", json::array({json{{"d", 1}, {"r", 3}}})}}),
                    error);
}
