#include "liescan/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "liescan/cartan.hpp"
#include "liescan/diophantine.hpp"
#include "liescan/errors.hpp"
#include "liescan/homotopy.hpp"
#include "liescan/poincare.hpp"
#include "liescan/screener.hpp"
#include "liescan/serialize.hpp"

namespace liescan::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

std::string group_text(const CartanGroup& g) {
    return g.name() + " [" + g.cartan_label() + "]";
}

std::string factored_text(const CartanGroup& g) {
    std::string s;
    for (long long alpha : g.exponents()) {
        s += "(1+t^" + std::to_string(2 * alpha + 1) + ")";
    }
    return s;
}

std::string expanded_text(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (long long q = 0; q <= p.degree(); ++q) {
        const mpz_class& c = p.coeff(q);
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (q == 0) {
            s += c.get_str();
        } else {
            if (c != 1) s += c.get_str() + "*";
            s += (q == 1) ? "t" : "t^" + std::to_string(q);
        }
    }
    return s;
}

void emit(const json& j, std::ostream& out) {
    out << j.dump(2) << "\n";
}

void render_report_text(const ScreeningReport& r, std::ostream& out) {
    out << "screen " << group_text(r.group_a) << " vs " << group_text(r.group_b) << "\n";
    out << "  dimensions: " << r.dim_a << " vs " << r.dim_b
        << (r.dims_match ? " (match)" : " (mismatch)") << "\n";
    if (!r.poly) {
        out << "  poincare: skipped (dimensions differ)\n";
    } else if (r.poly->equal) {
        out << "  poincare: polynomials equal\n";
    } else {
        const CoeffDiff& d = *r.poly->first_diff;
        out << "  poincare: polynomials differ; first difference at degree " << d.degree
            << " (coefficients " << d.lhs << " vs " << d.rhs << ")\n";
    }
    if (!r.homotopy) {
        out << (r.dims_match
                    ? "  homotopy: skipped (no stable-range bound for a symplectic group)\n"
                    : "  homotopy: skipped (dimensions differ)\n");
    } else if (r.homotopy->k_max < 2) {
        out << "  homotopy: no common stable range at k >= 2 (bounds " << r.homotopy->bound_a
            << " and " << r.homotopy->bound_b << ")\n";
    } else if (!r.homotopy->witness) {
        out << "  homotopy: agree for all k in [2, " << r.homotopy->k_max << "]\n";
    } else {
        const HomotopyWitness& w = *r.homotopy->witness;
        out << "  homotopy: differ at k=" << w.k << " (pi_" << w.k << " = " << w.pi_a.render()
            << " vs " << w.pi_b.render() << ")\n";
    }
    out << "  verdict: " << verdict_name(r.verdict) << "\n";
}

void run_dim(const std::string& name, bool as_json, std::ostream& out) {
    const CartanGroup g = parse_group(name);
    if (as_json) {
        emit(json{{"group", g}, {"dimension", g.dimension()}}, out);
    } else {
        out << "dim " << group_text(g) << " = " << g.dimension() << "\n";
    }
}

void run_exponents(const std::string& name, bool as_json, std::ostream& out) {
    const CartanGroup g = parse_group(name);
    const auto exps = g.exponents();
    if (as_json) {
        emit(json{{"group", g}, {"exponents", exps}}, out);
    } else {
        out << "exponents " << group_text(g) << " =";
        for (long long a : exps) out << " " << a;
        out << "\n";
    }
}

void run_poincare(const std::string& name, bool as_json, std::ostream& out) {
    const CartanGroup g = parse_group(name);
    const IntPolynomial p = poincare_polynomial(g);
    if (as_json) {
        json factors = json::array();
        for (long long alpha : g.exponents()) factors.push_back(2 * alpha + 1);
        emit(json{{"group", g},
                  {"degree", p.degree()},
                  {"factor_degrees", factors},
                  {"coefficients", p}},
             out);
        return;
    }
    out << "P(" << g.name() << ", t) = " << factored_text(g) << "\n";
    out << "degree " << p.degree() << ", P(1) = " << p.evaluate(1) << "\n";
    if (p.degree() <= 64) {
        out << "expanded: " << expanded_text(p) << "\n";
    } else {
        out << "(" << p.degree() + 1 << " coefficients; use --json for the full list)\n";
    }
}

void run_betti(const std::string& name, long long q, bool as_json, std::ostream& out) {
    const CartanGroup g = parse_group(name);
    const mpz_class b = betti(g, q);
    if (as_json) {
        emit(json{{"group", g}, {"q", q}, {"betti", b.get_str()}}, out);
    } else {
        out << "b_" << q << "(" << g.name() << ") = " << b << "\n";
    }
}

void run_homotopy(const std::string& name, long long k, bool as_json, std::ostream& out) {
    const CartanGroup g = parse_group(name);
    const FGAbelianGroup value = pi(g, k);
    if (as_json) {
        emit(json{{"group", g}, {"k", k}, {"pi", value}, {"rendered", value.render()}}, out);
    } else {
        out << "pi_" << k << "(" << g.name() << ") = " << value.render() << "\n";
    }
}

void run_rn(long long max_b, bool as_json, std::ostream& out) {
    const auto solutions = solve_rn_bruteforce(max_b);
    if (as_json) {
        emit(json{{"max_b", max_b}, {"solutions", solutions}}, out);
        return;
    }
    out << "solutions of 2^b = k^2 + 7 with b <= " << max_b << ":\n";
    for (const RNSolution& s : solutions) {
        out << "  b=" << s.b << "  k=" << s.k << "\n";
    }
    out << solutions.size() << " solution(s)\n";
}

void run_qubit_scan(long long max_n, bool as_json, std::ostream& out) {
    const auto scan = scan_qubit_rotations(max_n);
    if (as_json) {
        json rows = json::array();
        for (const auto& [match, report] : scan) {
            rows.push_back(json{{"match", match}, {"report", report}});
        }
        emit(json{{"max_n", max_n}, {"matches", rows}}, out);
        return;
    }
    out << "SU(2^n) vs SO(N) dimension matches with n <= " << max_n << ":\n";
    for (const auto& [match, report] : scan) {
        out << "  n=" << match.n << "  " << group_text(report.group_a) << " vs "
            << group_text(report.group_b) << "  dim " << report.dim_a << "  "
            << verdict_name(report.verdict) << "\n";
    }
    out << scan.size() << " match(es)\n";
}

int parse_seed(const std::string& seed) {
    if (seed == "+" || seed == "+1") return 1;
    if (seed == "-" || seed == "-1") return -1;
    throw Error("seed must be + or -");
}

void run_pell(const std::string& seed_text, long long count, bool as_json, std::ostream& out) {
    const int seed = parse_seed(seed_text);
    const auto solutions = pell_enumerate(seed, count);
    if (as_json) {
        json rows = json::array();
        for (const PellSolution& s : solutions) {
            json r = s;
            r["seed"] = seed;
            rows.push_back(std::move(r));
        }
        emit(json{{"seed", seed}, {"count", count}, {"solutions", rows}}, out);
        return;
    }
    out << "solutions of 8d^2 = k^2 + 7 from seed (d, k) = (1, " << (seed > 0 ? "+1" : "-1")
        << "):\n";
    long long step = 1;
    for (const PellSolution& s : solutions) {
        out << "  step=" << step++ << "  d=" << s.d << "  k=" << s.k << "\n";
    }
}

void run_screen(const std::string& name_a, const std::string& name_b, bool as_json,
                std::ostream& out) {
    const ScreeningReport report = screen(parse_group(name_a), parse_group(name_b));
    if (as_json) {
        emit(report, out);
    } else {
        render_report_text(report, out);
    }
}

json class_scan_json(CartanClass x, CartanClass y, long long max_rank,
                     const std::vector<std::pair<long long, long long>>& pairs) {
    json rows = json::array();
    for (const auto& [i, j] : pairs) {
        rows.push_back(json{{"rank_x", i},
                            {"rank_y", j},
                            {"group_x", CartanGroup(x, i).name()},
                            {"group_y", CartanGroup(y, j).name()}});
    }
    return json{{"class_x", std::string(1, cartan_letter(x))},
                {"class_y", std::string(1, cartan_letter(y))},
                {"max_rank", max_rank},
                {"pairs", rows}};
}

void render_class_scan_text(CartanClass x, CartanClass y, long long max_rank,
                            const std::vector<std::pair<long long, long long>>& pairs,
                            std::ostream& out) {
    out << "equal Poincare polynomials, class " << cartan_letter(x) << " vs class "
        << cartan_letter(y) << ", ranks <= " << max_rank << ":\n";
    for (const auto& [i, j] : pairs) {
        const CartanGroup gx{x, i};
        const CartanGroup gy{y, j};
        out << "  " << gx.cartan_label() << " ~ " << gy.cartan_label() << "  (" << gx.name()
            << " ~ " << gy.name() << ", dim " << gx.dimension() << ")\n";
    }
    out << pairs.size() << " pair(s)\n";
}

CartanClass class_from_option(const std::string& letter) {
    switch (letter.empty() ? '\0' : letter.front()) {
        case 'A': return CartanClass::A;
        case 'B': return CartanClass::B;
        case 'C': return CartanClass::C;
        case 'D': return CartanClass::D;
        default: throw Error("class must be one of A, B, C, D");
    }
}

void run_class_scan(const std::string& letter_x, const std::string& letter_y, long long max_rank,
                    bool as_json, std::ostream& out) {
    const CartanClass x = class_from_option(letter_x);
    const CartanClass y = class_from_option(letter_y);
    const auto pairs = scan_class_pairs(x, y, max_rank);
    if (as_json) {
        emit(class_scan_json(x, y, max_rank, pairs), out);
    } else {
        render_class_scan_text(x, y, max_rank, pairs, out);
    }
}

void run_paper(bool as_json, std::ostream& out) {
    constexpr long long max_n = 20;
    constexpr long long max_rank = 100;
    const auto scan = scan_qubit_rotations(max_n);
    const auto pairs_ab = scan_class_pairs(CartanClass::A, CartanClass::B, max_rank);
    const auto pairs_ad = scan_class_pairs(CartanClass::A, CartanClass::D, max_rank);

    std::vector<std::pair<std::string, std::string>> candidates;
    std::vector<std::pair<std::string, std::string>> ruled_out;
    for (const auto& [match, report] : scan) {
        auto names = std::make_pair(report.group_a.name(), report.group_b.name());
        if (report.verdict == Verdict::CandidateHomeomorphism) {
            candidates.push_back(std::move(names));
        } else {
            ruled_out.push_back(std::move(names));
        }
    }

    if (as_json) {
        json rows = json::array();
        for (const auto& [match, report] : scan) {
            rows.push_back(json{{"match", match}, {"report", report}});
        }
        emit(json{{"max_n", max_n},
                  {"qubit_scan", rows},
                  {"class_scans",
                   json::array({class_scan_json(CartanClass::A, CartanClass::B, max_rank, pairs_ab),
                                class_scan_json(CartanClass::A, CartanClass::D, max_rank, pairs_ad)})},
                  {"candidates", candidates},
                  {"ruled_out", ruled_out}},
             out);
        return;
    }

    out << "== dimension matches: SU(2^n) vs SO(N), n <= " << max_n << " ==\n";
    for (const auto& [match, report] : scan) {
        out << "  n=" << match.n << "  " << group_text(report.group_a) << " vs "
            << group_text(report.group_b) << "  dim " << report.dim_a << "  "
            << verdict_name(report.verdict) << "\n";
    }
    out << "\n== screening details ==\n";
    for (const auto& [match, report] : scan) {
        render_report_text(report, out);
    }
    out << "\n== uniqueness scans (ranks <= " << max_rank << ") ==\n";
    render_class_scan_text(CartanClass::A, CartanClass::B, max_rank, pairs_ab, out);
    render_class_scan_text(CartanClass::A, CartanClass::D, max_rank, pairs_ad, out);
    out << "\n== summary ==\n";
    out << "candidates surviving every screen:";
    for (const auto& [a, b] : candidates) out << "  " << a << " ~ " << b;
    out << "\n";
    for (const auto& [a, b] : ruled_out) {
        out << "ruled out: " << a << " vs " << b
            << " (equal dimension, but Poincare polynomials and pi_5 differ)\n";
    }
    out << "note: polynomial data is computed from Cartan exponents, i.e. for the simply\n"
           "connected form of each class; SO(m) itself is not simply connected.\n";
}

void print_domain_error(const Error& e, bool as_json, std::ostream& err) {
    std::string type = "Error";
    json extra = json::object();
    if (const auto* range = dynamic_cast<const OutsideStableRangeError*>(&e)) {
        type = "OutsideStableRange";
        extra["k"] = range->k();
        extra["bound"] = range->bound();
    } else if (dynamic_cast<const NotSimpleError*>(&e) != nullptr) {
        type = "NotSimple";
    } else if (dynamic_cast<const ParseError*>(&e) != nullptr) {
        type = "ParseError";
    } else if (dynamic_cast<const UnsupportedFamilyError*>(&e) != nullptr) {
        type = "UnsupportedFamily";
    }
    if (as_json) {
        json j{{"error", json{{"type", type}, {"message", e.what()}}}};
        for (auto& [key, value] : extra.items()) j["error"][key] = value;
        err << j.dump(2) << "\n";
    } else {
        err << "error: " << type << ": " << e.what() << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact dimension, Betti-number and stable-homotopy screening of SU/SO/Sp groups"};
    app.name("liescan");
    app.set_version_flag("--version", std::string("liescan ") + kVersion);
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON on stdout");

    std::string arg_group;
    std::string arg_group_b;
    std::string arg_seed;
    std::string arg_class_x;
    std::string arg_class_y;
    long long arg_q = 0;
    long long arg_k = 0;
    long long arg_max_b = 0;
    long long arg_max_n = 0;
    long long arg_count = 0;
    long long arg_max_rank = 0;

    auto* cmd_dim = app.add_subcommand("dim", "dimension of a group");
    cmd_dim->fallthrough();
    cmd_dim->add_option("group", arg_group, "group name, e.g. SU(64), SO(91) or A63")->required();
    cmd_dim->callback([&] { run_dim(arg_group, as_json, out); });

    auto* cmd_exp = app.add_subcommand("exponents", "exponents of a group");
    cmd_exp->fallthrough();
    cmd_exp->add_option("group", arg_group)->required();
    cmd_exp->callback([&] { run_exponents(arg_group, as_json, out); });

    auto* cmd_poincare = app.add_subcommand("poincare", "Poincare polynomial of a group");
    cmd_poincare->fallthrough();
    cmd_poincare->add_option("group", arg_group)->required();
    cmd_poincare->callback([&] { run_poincare(arg_group, as_json, out); });

    auto* cmd_betti = app.add_subcommand("betti", "Betti number b_q of a group");
    cmd_betti->fallthrough();
    cmd_betti->add_option("group", arg_group)->required();
    cmd_betti->add_option("q", arg_q)->required()->check(CLI::NonNegativeNumber);
    cmd_betti->callback([&] { run_betti(arg_group, arg_q, as_json, out); });

    auto* cmd_homotopy = app.add_subcommand("homotopy", "stable homotopy group pi_k of a group");
    cmd_homotopy->fallthrough();
    cmd_homotopy->add_option("group", arg_group)->required();
    cmd_homotopy->add_option("k", arg_k)->required()->check(CLI::NonNegativeNumber);
    cmd_homotopy->callback([&] { run_homotopy(arg_group, arg_k, as_json, out); });

    auto* cmd_rn = app.add_subcommand("rn", "solve 2^b = k^2 + 7 exhaustively for b <= B");
    cmd_rn->fallthrough();
    cmd_rn->add_option("--max-b", arg_max_b)->required()->check(CLI::PositiveNumber);
    cmd_rn->callback([&] { run_rn(arg_max_b, as_json, out); });

    auto* cmd_qubit = app.add_subcommand("qubit-scan",
                                         "find and screen SU(2^n) vs SO(N) dimension matches");
    cmd_qubit->fallthrough();
    cmd_qubit->add_option("--max-n", arg_max_n)->required()->check(CLI::PositiveNumber);
    cmd_qubit->callback([&] { run_qubit_scan(arg_max_n, as_json, out); });

    auto* cmd_pell = app.add_subcommand("pell", "enumerate solutions of 8d^2 = k^2 + 7");
    cmd_pell->fallthrough();
    cmd_pell->add_option("--seed", arg_seed, "orbit seed: + or -")
        ->required()
        ->check(CLI::IsMember({"+", "-", "+1", "-1"}));
    cmd_pell->add_option("--count", arg_count)->required()->check(CLI::PositiveNumber);
    cmd_pell->callback([&] { run_pell(arg_seed, arg_count, as_json, out); });

    auto* cmd_screen = app.add_subcommand("screen", "screen two groups for candidate homeomorphism");
    cmd_screen->fallthrough();
    cmd_screen->add_option("group_a", arg_group)->required();
    cmd_screen->add_option("group_b", arg_group_b)->required();
    cmd_screen->callback([&] { run_screen(arg_group, arg_group_b, as_json, out); });

    auto* cmd_class = app.add_subcommand("class-scan",
                                         "find equal Poincare polynomials across two classes");
    cmd_class->fallthrough();
    cmd_class->add_option("class_x", arg_class_x)->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
    cmd_class->add_option("class_y", arg_class_y)->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
    cmd_class->add_option("--max-rank", arg_max_rank)->required()->check(CLI::PositiveNumber);
    cmd_class->callback([&] { run_class_scan(arg_class_x, arg_class_y, arg_max_rank, as_json, out); });

    auto* cmd_paper = app.add_subcommand("paper",
                                         "full reproduction: qubit scan, screening and uniqueness scans");
    cmd_paper->fallthrough();
    cmd_paper->callback([&] { run_paper(as_json, out); });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("liescan");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        err << "run 'liescan --help' for the command list\n";
        return 2;
    } catch (const Error& e) {
        print_domain_error(e, as_json, err);
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace liescan::cli
