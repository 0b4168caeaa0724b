#pragma once

// Machine-checked identity suites. Every law is decided symbolically on
// canonical forms and spot-checked pointwise on a finite window; failures
// carry a concrete witness.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "matrix.hpp"
#include "pinj.hpp"
#include "square.hpp"
#include "window.hpp"
#include "words.hpp"

namespace goi {

enum class law_status { holds, fails, diverged };

struct law_result {
    std::string name;
    law_status status = law_status::holds;
    std::string witness; // set when the law fails or diverges
    double millis = 0.0;
};

struct law_report {
    std::string suite;
    std::vector<law_result> laws;

    bool all_hold() const {
        for (const law_result &l : laws)
            if (l.status != law_status::holds)
                return false;
        return true;
    }
    bool any_diverged() const {
        for (const law_result &l : laws)
            if (l.status == law_status::diverged)
                return true;
        return false;
    }
};

namespace detail {

inline constexpr u64 law_spot_window = u64{1} << 12;

// symbolic equality plus a pointwise sweep; returns a witness when they differ
inline std::optional<std::string> pinj_law(const dyadic_pinj &lhs, const dyadic_pinj &rhs) {
    for (u64 n = 0; n < law_spot_window; ++n)
        if (lhs.apply(n) != rhs.apply(n))
            return "sides differ at n=" + std::to_string(n);
    if (!(lhs == rhs) || !equals(lhs, rhs))
        return std::string("canonical forms differ beyond the spot window");
    return std::nullopt;
}

inline std::optional<std::string> square_law(const rook_square &lhs, const rook_square &rhs) {
    const char *names[] = {"a", "b", "c", "d"};
    const dyadic_pinj *ls[] = {&lhs.a, &lhs.b, &lhs.c, &lhs.d};
    const dyadic_pinj *rs[] = {&rhs.a, &rhs.b, &rhs.c, &rhs.d};
    for (int i = 0; i < 4; ++i)
        if (auto w = pinj_law(*ls[i], *rs[i]))
            return std::string("edge ") + names[i] + ": " + *w;
    if (!object_equal(lhs.src, rhs.src) || !object_equal(lhs.tgt, rhs.tgt))
        return std::string("typing differs");
    return std::nullopt;
}

// each law body returns nullopt when it holds, a witness otherwise
inline void run_law(law_report &rep, const std::string &name,
                    const std::function<std::optional<std::string>()> &body) {
    auto t0 = std::chrono::steady_clock::now();
    law_result r;
    r.name = name;
    try {
        if (auto w = body()) {
            r.status = law_status::fails;
            r.witness = *w;
        }
    } catch (const trace_divergence_error &e) {
        r.status = law_status::diverged;
        r.witness = e.what();
    } catch (const depth_exceeded_error &e) {
        // iterated unions that walk out of the representable depth count as
        // non-stabilising too
        r.status = law_status::diverged;
        r.witness = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rep.laws.push_back(std::move(r));
}

inline rook_square square_inverse(const rook_square &s) {
    // only used on diagonal squares of bijections
    return rook_square{s.tgt, s.src, dagger(s.a), dyadic_pinj::zero(), dyadic_pinj::zero(),
                       dagger(s.d)};
}

} // namespace detail

// split/merge squares, shared by several suites
inline rook_square delta_square() { return square_from_endo(delta_split()); }
inline rook_square nabla_square() { return square_from_endo(nabla_merge()); }

// --- individual suites -----------------------------------------------------

inline law_report law_suite_dynamical() {
    law_report rep{"dynamical", {}};
    using detail::pinj_law;
    detail::run_law(rep, "p p# = 1", [] {
        return pinj_law(compose(gen_p(), gen_p_dag()), dyadic_pinj::one());
    });
    detail::run_law(rep, "q q# = 1", [] {
        return pinj_law(compose(gen_q(), gen_q_dag()), dyadic_pinj::one());
    });
    detail::run_law(rep, "p q# = 0", [] {
        return pinj_law(compose(gen_p(), gen_q_dag()), dyadic_pinj::zero());
    });
    detail::run_law(rep, "q p# = 0", [] {
        return pinj_law(compose(gen_q(), gen_p_dag()), dyadic_pinj::zero());
    });
    detail::run_law(rep, "p#p \\/ q#q = 1", [] {
        return pinj_law(union_disjoint(compose(gen_p_dag(), gen_p()),
                                       compose(gen_q_dag(), gen_q())),
                        dyadic_pinj::one());
    });
    return rep;
}

// relations x_i^-1 x_j x_i = x_{j+1}, i < j <= max_index, in both
// presentations; empty report when max_index = 0
inline law_report check_f_relations(u64 max_index, u64 max_iter = default_max_iter) {
    law_report rep{"f-relations", {}};
    for (u64 i = 0; i < max_index; ++i)
        for (u64 j = i + 1; j <= max_index; ++j) {
            detail::run_law(rep,
                            "x" + std::to_string(i) + "^-1 x" + std::to_string(j) + " x" +
                                std::to_string(i) + " = x" + std::to_string(j + 1),
                            [i, j] {
                                dyadic_pinj xi = thompson_x(i), xj = thompson_x(j);
                                dyadic_pinj lhs = compose(dagger(xi), compose(xj, xi));
                                return detail::pinj_law(lhs, thompson_x(j + 1));
                            });
            detail::run_law(rep,
                            "X" + std::to_string(i) + "^-1 X" + std::to_string(j) + " X" +
                                std::to_string(i) + " = X" + std::to_string(j + 1) + " (squares)",
                            [i, j, max_iter] {
                                rook_square xi = thompson_box_x(i), xj = thompson_box_x(j);
                                rook_square lhs = compose_int(
                                    compose_int(detail::square_inverse(xi), xj, max_iter), xi,
                                    max_iter);
                                return detail::square_law(lhs, thompson_box_x(j + 1));
                            });
        }
    return rep;
}

// the pentagon itself plus the generated relation family
inline law_report law_suite_pentagon_f(u64 max_iter = default_max_iter) {
    law_report rep{"pentagonF", {}};
    detail::run_law(rep, "pentagon (base)", [] {
        dyadic_pinj lhs = compose(star_tensor(gen_tau(), dyadic_pinj::one()),
                                  compose(gen_tau(), star_tensor(dyadic_pinj::one(), gen_tau())));
        return detail::pinj_law(lhs, compose(gen_tau(), gen_tau()));
    });
    detail::run_law(rep, "pentagon (squares)", [max_iter] {
        rook_square one_T = box_tensor(identity_square(), assoc_T());
        rook_square T_one = box_tensor(assoc_T(), identity_square());
        rook_square lhs = compose_int(T_one, compose_int(assoc_T(), one_T, max_iter), max_iter);
        return detail::square_law(lhs, compose_int(assoc_T(), assoc_T(), max_iter));
    });
    law_report rels = check_f_relations(5, max_iter);
    for (law_result &l : rels.laws)
        rep.laws.push_back(std::move(l));
    return rep;
}

inline law_report law_suite_hexagon(u64 max_iter = default_max_iter) {
    law_report rep{"hexagon", {}};
    detail::run_law(rep, "hexagon (base)", [] {
        dyadic_pinj one = dyadic_pinj::one();
        dyadic_pinj lhs = compose(gen_tau_inv(), gen_sigma());
        dyadic_pinj rhs = compose(
            star_tensor(one, gen_sigma()),
            compose(gen_tau_inv(), compose(star_tensor(gen_sigma(), one), gen_tau())));
        return detail::pinj_law(lhs, rhs);
    });
    detail::run_law(rep, "hexagon (squares)", [max_iter] {
        rook_square lhs = compose_int(assoc_T_inv(), sym_S(), max_iter);
        rook_square rhs = compose_int(
            box_tensor(identity_square(), sym_S()),
            compose_int(assoc_T_inv(),
                        compose_int(box_tensor(sym_S(), identity_square()), assoc_T(), max_iter),
                        max_iter),
            max_iter);
        return detail::square_law(lhs, rhs);
    });
    return rep;
}

inline law_report law_suite_trace_axioms(u64 seed, u64 max_iter = default_max_iter) {
    law_report rep{"traceAxioms", {}};
    detail::run_law(rep, "yanking: Tr(sigma) = 1", [max_iter] {
        return detail::pinj_law(trace(gen_sigma(), max_iter), dyadic_pinj::one());
    });
    detail::run_law(rep, "unit trace is the identity on homsets", [] {
        typed_arrow f = typed_from_endo(gen_tau());
        return typed_equal(typed_trace_over_unit(f), f)
                   ? std::nullopt
                   : std::optional<std::string>("typed no-op changed the arrow");
    });

    // sampled instances; samples whose iteration does not stabilise are
    // skipped, the laws quantify over the instances that terminate
    auto sampled = [&rep, seed, max_iter](const std::string &name, u64 want, u64 arity,
                                          auto &&check) {
        detail::run_law(rep, name, [=]() -> std::optional<std::string> {
            splitmix64 rng(seed ^ std::hash<std::string>{}(name));
            u64 checked = 0, attempts = 0;
            while (checked < want && attempts < want * 10) {
                ++attempts;
                dyadic_pinj f = evaluate(random_word(rng, 2 + rng.below(5)), max_iter);
                dyadic_pinj g = arity > 1
                                    ? evaluate(random_word(rng, 2 + rng.below(5)), max_iter)
                                    : dyadic_pinj::one();
                try {
                    if (auto w = check(f, g))
                        return "sample " + std::to_string(attempts) + ": " + *w;
                } catch (const trace_divergence_error &) {
                    continue; // instance outside the terminating fragment
                } catch (const depth_exceeded_error &) {
                    continue;
                }
                ++checked;
            }
            if (checked < want / 4)
                return "only " + std::to_string(checked) + " terminating samples found";
            return std::nullopt;
        });
    };

    sampled("vanishing II on 200 samples", 200, 1,
            [max_iter](const dyadic_pinj &f, const dyadic_pinj &) {
                dyadic_pinj nested =
                    trace(trace(compose(gen_tau(), compose(f, gen_tau_inv())), max_iter), max_iter);
                return detail::pinj_law(trace(f, max_iter), nested);
            });
    sampled("superposing on 200 samples", 200, 2,
            [max_iter](const dyadic_pinj &f, const dyadic_pinj &g) {
                dyadic_pinj shuffle = compose(
                    gen_tau(),
                    compose(star_tensor(dyadic_pinj::one(), gen_sigma()), gen_tau_inv()));
                dyadic_pinj rhs = trace(
                    compose(shuffle, compose(star_tensor(f, g), shuffle)), max_iter);
                return detail::pinj_law(star_tensor(trace(f, max_iter), g), rhs);
            });
    sampled("dinaturality on 200 samples", 200, 2,
            [max_iter](const dyadic_pinj &f, const dyadic_pinj &g) {
                dyadic_pinj side = star_tensor(dyadic_pinj::one(), g);
                return detail::pinj_law(trace(compose(side, f), max_iter),
                                        trace(compose(f, side), max_iter));
            });
    return rep;
}

inline law_report law_suite_yanking_cc(u64 max_iter = default_max_iter) {
    law_report rep{"yankingCC", {}};
    detail::run_law(rep, "(1 [] eps) T' (eta [] 1) = 1", [max_iter] {
        rook_square lhs = compose_int(
            box_tensor(identity_square(), epsilon()),
            compose_int(assoc_T_inv(), box_tensor(eta(), identity_square()), max_iter), max_iter);
        return detail::square_law(lhs, identity_square());
    });
    detail::run_law(rep, "(eps [] 1) T (1 [] eta) = 1", [max_iter] {
        rook_square lhs = compose_int(
            box_tensor(epsilon(), identity_square()),
            compose_int(assoc_T(), box_tensor(identity_square(), eta()), max_iter), max_iter);
        return detail::square_law(lhs, identity_square());
    });
    detail::run_law(rep, "dual(eta) is eps up to typing", [] {
        rook_square d = dual(eta());
        rook_square e = epsilon();
        return (d.a == e.a && d.b == e.b && d.c == e.c && d.d == e.d)
                   ? std::nullopt
                   : std::optional<std::string>("edges differ");
    });
    detail::run_law(rep, "eps o eta is the unit scalar", [max_iter] {
        return detail::square_law(compose_int(epsilon(), eta(), max_iter), unit_square());
    });
    return rep;
}

inline law_report law_suite_bicyclic(u64 max_iter = default_max_iter) {
    law_report rep{"bicyclic", {}};
    detail::run_law(rep, "(0,1)(1,0) = (0,0)", [] {
        return bicyclic_compose_nf({0, 1}, {1, 0}) == bicyclic_nf{0, 0}
                   ? std::nullopt
                   : std::optional<std::string>("monus law broken");
    });
    detail::run_law(rep, "(1,0)(0,1) = (1,1)", [] {
        return bicyclic_compose_nf({1, 0}, {0, 1}) == bicyclic_nf{1, 1}
                   ? std::nullopt
                   : std::optional<std::string>("monus law broken");
    });
    detail::run_law(rep, "merge o split = 1, split o merge != 1", [max_iter] {
        bicyclic_value vd = bicyclic_eval({split_merge::merge, split_merge::split}, max_iter);
        bicyclic_value dv = bicyclic_eval({split_merge::split, split_merge::merge}, max_iter);
        if (!vd.endo.is_one())
            return std::optional<std::string>("merge o split is not the identity");
        if (dv.endo.is_one())
            return std::optional<std::string>("split o merge collapsed to the identity");
        return std::optional<std::string>{};
    });
    detail::run_law(rep, "normal form equality matches evaluation, words up to length 8",
                    [max_iter]() -> std::optional<std::string> {
                        std::map<std::pair<u64, u64>, dyadic_pinj> by_nf;
                        std::vector<split_merge> word;
                        std::function<std::optional<std::string>(u64)> walk =
                            [&](u64 remaining) -> std::optional<std::string> {
                            bicyclic_value v = bicyclic_eval(word, max_iter);
                            auto key = std::make_pair(v.nf.d, v.nf.c);
                            auto it = by_nf.find(key);
                            if (it == by_nf.end())
                                by_nf.emplace(key, v.endo);
                            else if (!(it->second == v.endo))
                                return "same normal form, different maps";
                            if (remaining == 0)
                                return std::nullopt;
                            for (split_merge w : {split_merge::split, split_merge::merge}) {
                                word.push_back(w);
                                if (auto bad = walk(remaining - 1))
                                    return bad;
                                word.pop_back();
                            }
                            return std::nullopt;
                        };
                        if (auto bad = walk(8))
                            return bad;
                        for (auto i = by_nf.begin(); i != by_nf.end(); ++i)
                            for (auto j = std::next(i); j != by_nf.end(); ++j)
                                if (i->second == j->second)
                                    return "distinct normal forms, equal maps";
                        return std::nullopt;
                    });
    return rep;
}

inline law_report law_suite_frobenius(u64 max_iter = default_max_iter) {
    law_report rep{"frobenius", {}};
    auto dsq = delta_square, nsq = nabla_square;
    detail::run_law(rep, "merge o split = 1", [=] {
        return detail::square_law(compose_int(nsq(), dsq(), max_iter), identity_square());
    });
    detail::run_law(rep, "split o merge as displayed, != 1", [=]() -> std::optional<std::string> {
        rook_square got = compose_int(dsq(), nsq(), max_iter);
        dyadic_pinj pp = compose(gen_p_dag(), gen_p());
        dyadic_pinj qq = compose(gen_q_dag(), gen_q());
        rook_square want{int_object::nn(), int_object::nn(), pp, qq, qq, pp};
        if (auto w = detail::square_law(got, want))
            return w;
        if (square_equal(got, identity_square()))
            return std::optional<std::string>("collapsed to the identity");
        return std::nullopt;
    });
    detail::run_law(rep, "Frobenius condition, left", [=] {
        rook_square lhs = compose_int(
            box_tensor(identity_square(), nsq()),
            compose_int(assoc_T_inv(), box_tensor(dsq(), identity_square()), max_iter), max_iter);
        return detail::square_law(lhs, compose_int(dsq(), nsq(), max_iter));
    });
    detail::run_law(rep, "Frobenius condition, right", [=] {
        rook_square rhs = compose_int(
            box_tensor(nsq(), identity_square()),
            compose_int(assoc_T(), box_tensor(identity_square(), dsq()), max_iter), max_iter);
        return detail::square_law(rhs, compose_int(dsq(), nsq(), max_iter));
    });
    detail::run_law(rep, "associativity", [=] {
        rook_square lhs = compose_int(nsq(), box_tensor(identity_square(), nsq()), max_iter);
        rook_square rhs = compose_int(
            nsq(), compose_int(box_tensor(nsq(), identity_square()), assoc_T(), max_iter),
            max_iter);
        return detail::square_law(lhs, rhs);
    });
    detail::run_law(rep, "co-associativity", [=] {
        rook_square lhs = compose_int(box_tensor(identity_square(), dsq()), dsq(), max_iter);
        rook_square rhs = compose_int(
            assoc_T_inv(), compose_int(box_tensor(dsq(), identity_square()), dsq(), max_iter),
            max_iter);
        return detail::square_law(lhs, rhs);
    });
    return rep;
}

inline law_report law_suite_embeddings(u64 seed, u64 max_iter = default_max_iter) {
    law_report rep{"embeddings", {}};
    detail::run_law(rep, "embed_left(1) is the identity square", [] {
        return detail::square_law(embed_left(dyadic_pinj::one()), identity_square());
    });
    detail::run_law(rep, "left embedding homomorphic on 200 pairs",
                    [seed, max_iter]() -> std::optional<std::string> {
                        splitmix64 rng(seed ^ 0x11d5ull);
                        for (u64 k = 0; k < 200; ++k) {
                            dyadic_pinj f = evaluate(random_word(rng, 2 + rng.below(5)), max_iter);
                            dyadic_pinj g = evaluate(random_word(rng, 2 + rng.below(5)), max_iter);
                            rook_square lhs =
                                compose_int(embed_left(g), embed_left(f), max_iter);
                            if (auto w = detail::square_law(lhs, embed_left(compose(g, f))))
                                return "pair " + std::to_string(k) + ": " + *w;
                        }
                        return std::nullopt;
                    });
    detail::run_law(rep, "right embedding anti-homomorphic on 200 pairs",
                    [seed, max_iter]() -> std::optional<std::string> {
                        splitmix64 rng(seed ^ 0x22d5ull);
                        for (u64 k = 0; k < 200; ++k) {
                            dyadic_pinj f = evaluate(random_word(rng, 2 + rng.below(5)), max_iter);
                            dyadic_pinj g = evaluate(random_word(rng, 2 + rng.below(5)), max_iter);
                            rook_square lhs =
                                compose_int(embed_right(g), embed_right(f), max_iter);
                            if (auto w = detail::square_law(lhs, embed_right(compose(f, g))))
                                return "pair " + std::to_string(k) + ": " + *w;
                        }
                        return std::nullopt;
                    });
    return rep;
}

inline law_report law_suite_canonical_isos(u64 max_iter = default_max_iter) {
    law_report rep{"canonicalIsoIdentities", {}};
    detail::run_law(rep, "S = sigma * sigma", [] {
        return detail::pinj_law(endo_from_square(sym_S()),
                                star_tensor(gen_sigma(), gen_sigma()));
    });
    detail::run_law(rep, "S = sigma . S . sigma", [] {
        dyadic_pinj S = endo_from_square(sym_S());
        return detail::pinj_law(S, compose(gen_sigma(), compose(S, gen_sigma())));
    });
    detail::run_law(rep, "T = tau * tau'", [] {
        return detail::pinj_law(endo_from_square(assoc_T()),
                                star_tensor(gen_tau(), gen_tau_inv()));
    });
    detail::run_law(rep, "T' = sigma . T . sigma", [] {
        dyadic_pinj T = endo_from_square(assoc_T());
        return detail::pinj_law(endo_from_square(assoc_T_inv()),
                                compose(gen_sigma(), compose(T, gen_sigma())));
    });
    detail::run_law(rep, "T' inverts T in the base monoid", [] {
        dyadic_pinj T = endo_from_square(assoc_T());
        dyadic_pinj Ti = endo_from_square(assoc_T_inv());
        if (auto w = detail::pinj_law(compose(T, Ti), dyadic_pinj::one()))
            return w;
        return detail::pinj_law(compose(Ti, T), dyadic_pinj::one());
    });
    detail::run_law(rep, "T' inverts T under pasting", [max_iter] {
        if (auto w = detail::square_law(compose_int(assoc_T(), assoc_T_inv(), max_iter),
                                        identity_square()))
            return w;
        return detail::square_law(compose_int(assoc_T_inv(), assoc_T(), max_iter),
                                  identity_square());
    });
    detail::run_law(rep, "S is self-inverse both ways", [max_iter] {
        dyadic_pinj S = endo_from_square(sym_S());
        if (auto w = detail::pinj_law(compose(S, S), dyadic_pinj::one()))
            return w;
        return detail::square_law(compose_int(sym_S(), sym_S(), max_iter), identity_square());
    });
    return rep;
}

inline law_report law_suite_curiosity(u64 max_iter = default_max_iter) {
    law_report rep{"curiosity", {}};
    detail::run_law(rep, "(split o merge) . (split o merge) = 1", [max_iter] {
        dyadic_pinj e = endo_from_square(compose_int(delta_square(), nabla_square(), max_iter));
        return detail::pinj_law(compose(e, e), dyadic_pinj::one());
    });
    return rep;
}

inline law_report law_suite(const std::string &name, u64 seed = 0,
                            u64 max_iter = default_max_iter) {
    if (name == "dynamical")
        return law_suite_dynamical();
    if (name == "pentagonF")
        return law_suite_pentagon_f(max_iter);
    if (name == "hexagon")
        return law_suite_hexagon(max_iter);
    if (name == "traceAxioms")
        return law_suite_trace_axioms(seed, max_iter);
    if (name == "yankingCC")
        return law_suite_yanking_cc(max_iter);
    if (name == "bicyclic")
        return law_suite_bicyclic(max_iter);
    if (name == "frobenius")
        return law_suite_frobenius(max_iter);
    if (name == "embeddings")
        return law_suite_embeddings(seed, max_iter);
    if (name == "canonicalIsoIdentities")
        return law_suite_canonical_isos(max_iter);
    if (name == "curiosity")
        return law_suite_curiosity(max_iter);
    if (name == "all") {
        law_report all{"all", {}};
        for (const char *sub :
             {"dynamical", "pentagonF", "hexagon", "traceAxioms", "yankingCC", "bicyclic",
              "frobenius", "embeddings", "canonicalIsoIdentities", "curiosity"}) {
            law_report part = law_suite(sub, seed, max_iter);
            for (law_result &l : part.laws) {
                l.name = part.suite + ": " + l.name;
                all.laws.push_back(std::move(l));
            }
        }
        return all;
    }
    throw error("unknown law suite: " + name);
}

// the merge/split law suite required by the algebra surface
inline law_report frobenius_laws(u64 max_iter = default_max_iter) {
    return law_suite_frobenius(max_iter);
}

} // namespace goi
