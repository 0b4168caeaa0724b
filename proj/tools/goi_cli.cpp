// Command line front end for the dyadic partial-injection engine.
//
//   goi eval EXPR [--json]             canonical pieces of the value
//   goi table EXPR --n N               value table on [0, N)
//   goi nf EXPR                        pieces, plus the bicyclic normal form
//                                      when the word is over D, V and 'o'
//   goi laws SUITE [--seed K] [--max-iter J] [--json]
//   goi oracle EXPR --n N              symbolic vs pointwise cross-check
//   goi export EXPR [--out FILE]       value as JSON
//   goi import FILE|-                  read JSON, validate, print pieces
//
// Exit codes: 0 success / all laws hold, 1 law failure or mismatch,
// 2 usage or parse error, 3 divergence. GOI_MAX_ITER overrides the
// iteration bound.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "goi/expr.hpp"
#include "goi/io.hpp"
#include "goi/laws.hpp"
#include "goi/window.hpp"

namespace {

using goi::u64;

struct usage_failure {
    std::string what;
};

struct args {
    std::vector<std::string> positional;
    bool json = false;
    std::optional<u64> n;
    u64 seed = 0;
    u64 max_iter = goi::default_max_iter;
    std::optional<std::string> out;
};

int usage() {
    std::cerr << "usage: goi eval|table|nf|laws|oracle|export|import ...\n"
                 "  goi eval EXPR [--json]\n"
                 "  goi table EXPR --n N\n"
                 "  goi nf EXPR\n"
                 "  goi laws SUITE [--seed K] [--max-iter J] [--json]\n"
                 "       suites: dynamical pentagonF hexagon traceAxioms yankingCC\n"
                 "               bicyclic frobenius embeddings canonicalIsoIdentities\n"
                 "               curiosity all\n"
                 "  goi oracle EXPR --n N\n"
                 "  goi export EXPR [--out FILE]\n"
                 "  goi import FILE|-\n"
                 "generators: p q P Q s t t' D V id zero S T T' x0 x1 ...\n"
                 "operators:  ~ converse, * and # tensors, . and o compositions,\n"
                 "            g vertical pasting; tensors bind tighter\n";
    return 2;
}

args parse_args(int argc, char **argv, int first) {
    args a;
    if (const char *env = std::getenv("GOI_MAX_ITER"))
        a.max_iter = std::strtoull(env, nullptr, 10);
    for (int i = first; i < argc; ++i) {
        std::string s = argv[i];
        auto need_value = [&](const char *flag) -> std::string {
            if (i + 1 >= argc)
                throw usage_failure{std::string(flag) + " needs a value"};
            return argv[++i];
        };
        if (s == "--json")
            a.json = true;
        else if (s == "--n")
            a.n = std::strtoull(need_value("--n").c_str(), nullptr, 10);
        else if (s == "--seed")
            a.seed = std::strtoull(need_value("--seed").c_str(), nullptr, 10);
        else if (s == "--max-iter")
            a.max_iter = std::strtoull(need_value("--max-iter").c_str(), nullptr, 10);
        else if (s == "--out")
            a.out = need_value("--out");
        else if (s.size() > 1 && s[0] == '-')
            throw usage_failure{"unknown flag: " + s};
        else
            a.positional.push_back(s);
    }
    return a;
}

void print_pieces(const goi::dyadic_pinj &f) {
    if (f.is_zero()) {
        std::cout << "0 pieces (nowhere defined)\n";
        return;
    }
    std::cout << f.pieces().size() << (f.pieces().size() == 1 ? " piece:\n" : " pieces:\n");
    auto pow2_str = [](u64 depth) {
        goi::u128 v = goi::u128{1} << depth;
        std::string s;
        while (v > 0) {
            s.insert(s.begin(), char('0' + int(v % 10)));
            v /= 10;
        }
        return s;
    };
    for (const goi::piece &p : f.pieces()) {
        auto term = [&](u64 depth, u64 res) {
            std::ostringstream os;
            if (depth == 0)
                os << "k";
            else
                os << pow2_str(depth) << "k";
            if (res > 0)
                os << "+" << res;
            return os.str();
        };
        std::cout << "  " << term(p.d, p.r) << " -> " << term(p.e, p.s) << "\n";
    }
}

int cmd_eval(const args &a, bool as_json) {
    goi::dyadic_pinj f = goi::evaluate(goi::parse(a.positional.at(1)), a.max_iter);
    if (as_json)
        std::cout << goi::to_json(f).dump(2) << "\n";
    else
        print_pieces(f);
    return 0;
}

int cmd_table(const args &a) {
    if (!a.n)
        throw usage_failure{"table needs --n"};
    goi::dyadic_pinj f = goi::evaluate(goi::parse(a.positional.at(1)), a.max_iter);
    for (u64 x = 0; x < *a.n; ++x) {
        auto v = f.apply(x);
        std::cout << x << " -> ";
        if (v)
            std::cout << *v << "\n";
        else
            std::cout << "_\n";
    }
    return 0;
}

int cmd_nf(const args &a) {
    goi::expr_ptr e = goi::parse(a.positional.at(1));
    goi::dyadic_pinj f = goi::evaluate(e, a.max_iter);
    print_pieces(f);
    if (goi::is_bicyclic_word(e)) {
        goi::bicyclic_nf nf{0, 0};
        goi::bicyclic_nf_of_expr(e, nf);
        std::cout << "bicyclic normal form: (" << nf.d << ", " << nf.c << ")\n";
    }
    return 0;
}

int cmd_laws(const args &a) {
    static const char *known[] = {"dynamical",  "pentagonF", "hexagon",
                                  "traceAxioms", "yankingCC", "bicyclic",
                                  "frobenius",  "embeddings", "canonicalIsoIdentities",
                                  "curiosity",  "all"};
    const std::string &suite = a.positional.at(1);
    bool found = false;
    for (const char *k : known)
        found = found || suite == k;
    if (!found)
        throw usage_failure{"unknown law suite: " + suite};
    goi::law_report rep = goi::law_suite(suite, a.seed, a.max_iter);
    if (a.json) {
        std::cout << goi::to_json(rep).dump(2) << "\n";
    } else {
        std::size_t held = 0;
        for (const goi::law_result &l : rep.laws) {
            const char *st = l.status == goi::law_status::holds    ? "holds  "
                             : l.status == goi::law_status::fails ? "FAILS  "
                                                                  : "DIVERGED";
            std::cout << st << " " << l.name;
            if (!l.witness.empty())
                std::cout << "  [" << l.witness << "]";
            std::cout << "\n";
            if (l.status == goi::law_status::holds)
                ++held;
        }
        std::cout << rep.suite << ": " << held << "/" << rep.laws.size() << " hold\n";
    }
    if (rep.all_hold())
        return 0;
    return rep.any_diverged() ? 3 : 1;
}

int cmd_oracle(const args &a) {
    if (!a.n)
        throw usage_failure{"oracle needs --n"};
    goi::expr_ptr e = goi::parse(a.positional.at(1));
    goi::dyadic_pinj f = goi::evaluate(e, a.max_iter);
    goi::window_map w = goi::truncate(f, *a.n);
    u64 mismatches = 0, compared = 0, skipped = 0;
    for (u64 x = 0; x < *a.n; ++x) {
        goi::oracle_outcome direct =
            goi::oracle_apply(e, x, *a.n, goi::default_step_bound);
        const goi::window_cell &cell = w.cells[x];
        // out-of-window on either side carries no information
        if (direct.k == goi::oracle_outcome::kind::no_information ||
            cell.kind == goi::cell_kind::out_of_window) {
            ++skipped;
            continue;
        }
        bool ok;
        if (direct.k == goi::oracle_outcome::kind::undefined)
            ok = cell.kind == goi::cell_kind::undefined;
        else
            ok = cell.kind == goi::cell_kind::value && cell.v == direct.v;
        if (ok) {
            ++compared;
        } else {
            ++mismatches;
            std::cout << "mismatch at " << x << "\n";
        }
    }
    std::cout << compared << " points agree, " << skipped << " carry no information, "
              << mismatches << " mismatch\n";
    return mismatches == 0 ? 0 : 1;
}

int cmd_export(const args &a) {
    goi::dyadic_pinj f = goi::evaluate(goi::parse(a.positional.at(1)), a.max_iter);
    std::string text = goi::to_json(f).dump(2);
    if (a.out) {
        std::ofstream os(*a.out);
        if (!os)
            throw goi::error("cannot write " + *a.out);
        os << text << "\n";
    } else {
        std::cout << text << "\n";
    }
    return 0;
}

int cmd_import(const args &a) {
    const std::string &src = a.positional.at(1);
    goi::json j;
    if (src == "-") {
        std::cin >> j;
    } else {
        std::ifstream is(src);
        if (!is)
            throw goi::error("cannot read " + src);
        is >> j;
    }
    goi::dyadic_pinj f = goi::pinj_from_json(j);
    if (a.json)
        std::cout << goi::to_json(f).dump(2) << "\n";
    else
        print_pieces(f);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    if (argc < 2)
        return usage();
    std::string cmd = argv[1];
    try {
        args a = parse_args(argc, argv, 1);
        if (a.positional.size() < 2)
            return usage();
        if (cmd == "eval")
            return cmd_eval(a, a.json);
        if (cmd == "table")
            return cmd_table(a);
        if (cmd == "nf")
            return cmd_nf(a);
        if (cmd == "laws")
            return cmd_laws(a);
        if (cmd == "oracle")
            return cmd_oracle(a);
        if (cmd == "export")
            return cmd_export(a);
        if (cmd == "import")
            return cmd_import(a);
        return usage();
    } catch (const usage_failure &e) {
        std::cerr << "error: " << e.what << "\n";
        return 2;
    } catch (const goi::parse_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const goi::trace_divergence_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const goi::error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
