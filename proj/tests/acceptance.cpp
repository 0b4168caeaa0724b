// Acceptance runner: one line per criterion, all tolerances exact.
// Exits 0 only when every criterion passes.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "goi/algebra.hpp"
#include "goi/laws.hpp"
#include "goi/window.hpp"
#include "goi/words.hpp"

using namespace goi;

namespace {

int failures = 0;

void criterion(int number, const std::string &label, const std::function<bool()> &body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception &e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << label << note
              << "\n";
    if (!ok)
        ++failures;
}

const u64 window14 = u64{1} << 14;

bool pointwise_equal_on(const dyadic_pinj &f, const dyadic_pinj &g, u64 window) {
    for (u64 n = 0; n < window; ++n)
        if (f.apply(n) != g.apply(n))
            return false;
    return true;
}

bool exact_equal(const dyadic_pinj &f, const dyadic_pinj &g, u64 window) {
    return f == g && equals(f, g) && pointwise_equal_on(f, g, window);
}

// deterministic supply of words whose traces stabilise
std::vector<dyadic_pinj> terminating_words(u64 seed, int count, int max_atoms) {
    splitmix64 rng(seed);
    std::vector<dyadic_pinj> out;
    while (static_cast<int>(out.size()) < count) {
        dyadic_pinj f = evaluate(random_word(rng, 1 + rng.below(max_atoms)));
        try {
            trace(f);
        } catch (const error &) {
            continue;
        }
        out.push_back(f);
    }
    return out;
}

bool criterion_dynamical() {
    dyadic_pinj one = dyadic_pinj::one(), zero = dyadic_pinj::zero();
    return exact_equal(compose(gen_p(), gen_p_dag()), one, window14) &&
           exact_equal(compose(gen_q(), gen_q_dag()), one, window14) &&
           exact_equal(compose(gen_p(), gen_q_dag()), zero, window14) &&
           exact_equal(compose(gen_q(), gen_p_dag()), zero, window14) &&
           exact_equal(union_disjoint(compose(gen_p_dag(), gen_p()),
                                      compose(gen_q_dag(), gen_q())),
                       one, window14);
}

bool criterion_value_tables() {
    for (u64 n = 0; n < window14; ++n) {
        u64 swap_want = n % 2 == 0 ? n + 1 : n - 1;
        if (gen_sigma().apply(n) != swap_want)
            return false;
        u64 assoc_want = n % 2 == 0 ? 2 * n : (n % 4 == 1 ? n + 1 : (n - 1) / 2);
        if (gen_tau().apply(n) != assoc_want)
            return false;
    }
    return true;
}

bool criterion_f_relations() {
    law_report rels = check_f_relations(5);
    return rels.laws.size() == 30 && rels.all_hold();
}

bool criterion_trace_yanking() {
    if (!exact_equal(trace(gen_sigma()), dyadic_pinj::one(), window14))
        return false;
    std::vector<dyadic_pinj> corpus = terminating_words(2024, 100, 6);
    for (const dyadic_pinj &f : corpus) {
        matrix2x2 m = decompose(f);
        dyadic_pinj symbolic = trace_matrix(m);
        for (u64 x = 0; x < window14; ++x) {
            sim_outcome out = simulate_trace(m, x, window14, default_step_bound);
            auto sym = symbolic.apply(x);
            if (out.kind == sim_kind::value) {
                if (!(sym && *sym == out.v))
                    return false;
            } else if (out.kind == sim_kind::undefined) {
                // a stuck token means the map is genuinely undefined there
                if (sym)
                    return false;
            }
        }
    }
    return true;
}

bool criterion_cc_yanking() {
    rook_square snake1 =
        compose_int(box_tensor(identity_square(), epsilon()),
                    compose_int(assoc_T_inv(), box_tensor(eta(), identity_square())));
    rook_square snake2 =
        compose_int(box_tensor(epsilon(), identity_square()),
                    compose_int(assoc_T(), box_tensor(identity_square(), eta())));
    return square_equal(snake1, identity_square()) &&
           square_equal(snake2, identity_square());
}

bool criterion_matrix_forms() {
    dyadic_pinj one = dyadic_pinj::one(), zero = dyadic_pinj::zero();
    dyadic_pinj pp = compose(gen_p_dag(), gen_p());
    dyadic_pinj qq = compose(gen_q_dag(), gen_q());

    matrix2x2 md = decompose(delta_split());
    if (!(md.f00 == gen_p_dag() && md.f01 == qq && md.f10 == zero && md.f11 == gen_p()))
        return false;
    matrix2x2 mn = decompose(nabla_merge());
    if (!(mn.f00 == gen_p() && mn.f01 == zero && mn.f10 == qq && mn.f11 == gen_p_dag()))
        return false;
    if (!exact_equal(compose(delta_split(), nabla_merge()), one, window14) ||
        !exact_equal(compose(nabla_merge(), delta_split()), one, window14))
        return false;

    rook_square nd = compose_int(nabla_square(), delta_square());
    if (!square_equal(nd, identity_square()))
        return false;
    rook_square dn = compose_int(delta_square(), nabla_square());
    rook_square shown{int_object::nn(), int_object::nn(), pp, qq, qq, pp};
    if (!square_equal(dn, shown) || square_equal(dn, identity_square()))
        return false;
    dyadic_pinj dn_endo = endo_from_square(dn);
    return exact_equal(compose(dn_endo, dn_endo), one, window14);
}

bool criterion_frobenius() {
    rook_square dsq = delta_square(), nsq = nabla_square();
    rook_square center = compose_int(dsq, nsq);
    rook_square left = compose_int(
        box_tensor(identity_square(), nsq),
        compose_int(assoc_T_inv(), box_tensor(dsq, identity_square())));
    rook_square right = compose_int(
        box_tensor(nsq, identity_square()),
        compose_int(assoc_T(), box_tensor(identity_square(), dsq)));
    if (!square_equal(left, center) || !square_equal(right, center))
        return false;

    rook_square assoc_l = compose_int(nsq, box_tensor(identity_square(), nsq));
    rook_square assoc_r =
        compose_int(nsq, compose_int(box_tensor(nsq, identity_square()), assoc_T()));
    if (!square_equal(assoc_l, assoc_r))
        return false;

    rook_square co_l = compose_int(box_tensor(identity_square(), dsq), dsq);
    rook_square co_r =
        compose_int(assoc_T_inv(), compose_int(box_tensor(dsq, identity_square()), dsq));
    if (!square_equal(co_l, co_r))
        return false;

    // pointwise confirmation on the window
    return pointwise_equal_on(endo_from_square(left), endo_from_square(center), window14) &&
           pointwise_equal_on(endo_from_square(right), endo_from_square(center), window14) &&
           pointwise_equal_on(endo_from_square(assoc_l), endo_from_square(assoc_r),
                              window14) &&
           pointwise_equal_on(endo_from_square(co_l), endo_from_square(co_r), window14);
}

bool criterion_bicyclic() {
    std::map<std::pair<u64, u64>, dyadic_pinj> by_nf;
    std::vector<split_merge> word;
    std::function<bool(u64)> walk = [&](u64 remaining) -> bool {
        bicyclic_value v = bicyclic_eval(word);
        auto key = std::make_pair(v.nf.d, v.nf.c);
        auto it = by_nf.find(key);
        if (it == by_nf.end())
            by_nf.emplace(key, v.endo);
        else if (!(it->second == v.endo))
            return false; // equal normal forms must evaluate equal
        if (remaining == 0)
            return true;
        for (split_merge w : {split_merge::split, split_merge::merge}) {
            word.push_back(w);
            bool ok = walk(remaining - 1);
            word.pop_back();
            if (!ok)
                return false;
        }
        return true;
    };
    if (!walk(8))
        return false;
    for (auto i = by_nf.begin(); i != by_nf.end(); ++i)
        for (auto j = std::next(i); j != by_nf.end(); ++j)
            if (i->second == j->second)
                return false; // distinct normal forms must stay distinct
    return true;
}

bool criterion_canonical_isos() {
    dyadic_pinj S = endo_from_square(sym_S());
    dyadic_pinj T = endo_from_square(assoc_T());
    dyadic_pinj Ti = endo_from_square(assoc_T_inv());
    return exact_equal(S, star_tensor(gen_sigma(), gen_sigma()), window14) &&
           exact_equal(S, compose(gen_sigma(), compose(S, gen_sigma())), window14) &&
           exact_equal(T, star_tensor(gen_tau(), gen_tau_inv()), window14) &&
           exact_equal(Ti, compose(gen_sigma(), compose(T, gen_sigma())), window14);
}

bool criterion_embeddings() {
    splitmix64 rng(4242);
    for (int k = 0; k < 200; ++k) {
        dyadic_pinj f = evaluate(random_word(rng, 1 + rng.below(6)));
        dyadic_pinj g = evaluate(random_word(rng, 1 + rng.below(6)));
        if (!square_equal(compose_int(embed_left(g), embed_left(f)),
                          embed_left(compose(g, f))))
            return false;
        if (!square_equal(compose_int(embed_right(g), embed_right(f)),
                          embed_right(compose(f, g))))
            return false;
    }
    return true;
}

bool criterion_representation() {
    splitmix64 rng(31337);
    const u64 window12 = u64{1} << 12;
    for (int k = 0; k < 1000; ++k) {
        expr_ptr w = random_word(rng, 1 + rng.below(7));
        dyadic_pinj f = evaluate(w);
        for (u64 n = 0; n < window12; ++n)
            if (f.apply(n) != pointwise_apply(w, n))
                return false;
    }
    splitmix64 rng2(271828);
    for (int k = 0; k < 10000; ++k) {
        dyadic_pinj f = evaluate(random_word(rng2, 1 + rng2.below(5)));
        dyadic_pinj g = evaluate(random_word(rng2, 1 + rng2.below(5)));
        if (equals(f, g) != (f == g))
            return false;
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "polycyclic relations, symbolic and on [0, 2^14)", criterion_dynamical);
    criterion(2, "swap and associator value tables on [0, 2^14)", criterion_value_tables);
    criterion(3, "30 Thompson relations across both presentations", criterion_f_relations);
    criterion(4, "trace yanking and 100-matrix token agreement", criterion_trace_yanking);
    criterion(5, "compact closure yanking, both snakes", criterion_cc_yanking);
    criterion(6, "split/merge matrix forms and compositions", criterion_matrix_forms);
    criterion(7, "Frobenius condition with (co)associativity", criterion_frobenius);
    criterion(8, "bicyclic normal forms match evaluation, words to length 8",
              criterion_bicyclic);
    criterion(9, "canonical isomorphism identities", criterion_canonical_isos);
    criterion(10, "embedding (anti)homomorphism on 200 word pairs", criterion_embeddings);
    criterion(11, "representation soundness against the pointwise oracle",
              criterion_representation);

    if (failures == 0) {
        std::cout << "all 11 criteria pass\n";
        return 0;
    }
    std::cout << failures << " criteria failing\n";
    return 1;
}
