// mismu: counting, construction, recognition and exhaustive verification for
// maximal independent sets against matching-number bounds, over graph6
// streams.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mismu/mismu.hpp"

namespace {

using namespace mismu;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::optional<FamilyId> family_from_string(const std::string& s) {
    static const std::map<std::string, FamilyId> table{
        {"GENERAL_T1", FamilyId::GeneralT1}, {"E_T", FamilyId::E_T},
        {"H_T", FamilyId::H_T},              {"A5", FamilyId::A5},
        {"L_T", FamilyId::L_T},              {"M_T", FamilyId::M_T},
        {"A_N", FamilyId::A_N},              {"B_N", FamilyId::B_N},
        {"D_N", FamilyId::D_N},              {"H7", FamilyId::H7},
        {"T_ODD", FamilyId::T_ODD},          {"P_CLASS", FamilyId::P_CLASS},
        {"G_T", FamilyId::G_T},              {"Q3", FamilyId::Q3},
        {"Q4", FamilyId::Q4},                {"F_T", FamilyId::F_T},
    };
    auto it = table.find(s);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::istream& open_input(const std::string& path, std::ifstream& file) {
    if (path.empty() || path == "-") return std::cin;
    file.open(path);
    if (!file) throw CLI::ValidationError("--input", "cannot open " + path);
    return file;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    return file;
}

struct LineCounters {
    long ok = 0;
    long failed = 0;
};

template <typename Fn>
LineCounters for_each_graph_line(std::istream& in, Fn&& fn) {
    LineCounters counters;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            Graph g = parse_graph6(line);
            fn(line, g, lineno);
            ++counters.ok;
        } catch (const std::exception& ex) {
            std::cerr << "line " << lineno << ": " << ex.what() << "\n";
            ++counters.failed;
        }
    }
    return counters;
}

int run_count(const std::string& input, const std::string& format, const std::string& out_path) {
    std::ifstream in_file;
    std::ofstream out_file;
    std::istream& in = open_input(input, in_file);
    std::ostream& out = open_output(out_path, out_file);
    LineCounters counters = for_each_graph_line(in, [&](const std::string&, const Graph& g, long) {
        std::string g6 = to_graph6(g);
        int mu = matching_number(g);
        u128 mis = count_mis(g);
        u128 ind = count_independent_sets(g);
        bool tf = is_triangle_free(g), conn = is_connected(g);
        if (format == "json-lines") {
            out << nlohmann::json{{"graph6", g6},
                                  {"n", g.order()},
                                  {"mu", mu},
                                  {"mis", to_string(mis)},
                                  {"i", to_string(ind)},
                                  {"triangle_free", tf},
                                  {"connected", conn}}
                       .dump()
                << '\n';
        } else {
            out << g6 << "  n=" << g.order() << " mu=" << mu << " mis=" << to_string(mis)
                << " i=" << to_string(ind) << " triangle_free=" << (tf ? "yes" : "no")
                << " connected=" << (conn ? "yes" : "no") << '\n';
        }
    });
    return counters.failed ? kExitUsage : kExitOk;
}

int run_recognize(const std::string& family_name, std::optional<int> t, const std::string& input,
                  const std::string& format, const std::string& out_path) {
    auto fam = family_from_string(family_name);
    if (!fam) {
        std::cerr << "unknown family: " << family_name << "\n";
        return kExitUsage;
    }
    std::ifstream in_file;
    std::ofstream out_file;
    std::istream& in = open_input(input, in_file);
    std::ostream& out = open_output(out_path, out_file);
    bool any_error = false;
    LineCounters counters = for_each_graph_line(in, [&](const std::string&, const Graph& g, long lineno) {
        std::string g6 = to_graph6(g);
        try {
            bool member = recognize(g, FamilySpec{*fam, t});
            if (format == "json-lines")
                out << nlohmann::json{{"graph6", g6}, {"member", member}}.dump() << '\n';
            else
                out << g6 << "  member=" << (member ? "true" : "false") << '\n';
        } catch (const std::exception& ex) {
            any_error = true;
            if (format == "json-lines")
                out << nlohmann::json{{"graph6", g6}, {"error", ex.what()}}.dump() << '\n';
            else
                out << g6 << "  error: " << ex.what() << '\n';
            std::cerr << "line " << lineno << ": " << ex.what() << "\n";
        }
    });
    return (counters.failed || any_error) ? kExitUsage : kExitOk;
}

int run_make(const std::string& family_name, std::optional<int> order, int t, int n, int r,
             int ell, int s, int l1, int l2, int l3, const std::string& variant,
             const std::string& out_path) {
    auto fam = family_from_string(family_name);
    if (!fam) {
        std::cerr << "unknown family: " << family_name << "\n";
        return kExitUsage;
    }
    std::ofstream out_file;
    std::ostream& out = open_output(out_path, out_file);
    try {
        if (order) {
            std::optional<int> param;
            if (t >= 0) param = t;
            if (*fam == FamilyId::T_ODD && r >= 0) param = r;
            for (const Graph& g : enumerate_family({*fam, param}, *order)) out << to_graph6(g) << '\n';
            return kExitOk;
        }
        Graph g(1);
        switch (*fam) {
            case FamilyId::GeneralT1: g = make_general_extremal(t, std::max(r, 0)); break;
            case FamilyId::E_T: g = make_E(t, ell); break;
            case FamilyId::A5: g = make_A5(); break;
            case FamilyId::L_T: g = make_L(t); break;
            case FamilyId::H7: g = make_H7(); break;
            case FamilyId::T_ODD: g = make_T(std::max(r, 0)); break;
            case FamilyId::M_T: g = make_M(t, ell, t % 2 == 0 ? std::max(r, 0) : std::max(s, 0)); break;
            case FamilyId::A_N: g = make_An(n); break;
            case FamilyId::B_N: g = make_Bn(n); break;
            case FamilyId::D_N:
                g = make_Dn(n, variant == "spider" ? DnVariant::Spider : DnVariant::H7,
                            std::max(r, 0));
                break;
            case FamilyId::P_CLASS: g = make_P(l1, l2, l3); break;
            case FamilyId::G_T:
                g = t % 2 == 1 ? make_G_odd(t, r) : make_G_even(t, l1, l2, l3);
                break;
            default:
                std::cerr << family_name << ": construct via --order (enumeration) only\n";
                return kExitUsage;
        }
        out << to_graph6(g) << '\n';
    } catch (const std::exception& ex) {
        std::cerr << "make: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

GenFilter default_filter(TheoremId thm) {
    switch (thm) {
        case TheoremId::THM2:
        case TheoremId::LEM21_STRICT:
        case TheoremId::LEM33:
        case TheoremId::THMC:
            return {.connected = true, .triangle_free = false};
        case TheoremId::THM3:
        case TheoremId::THMD:
        case TheoremId::THME_ODD:
            return {.connected = false, .triangle_free = true};
        case TheoremId::THM4:
            return {.connected = true, .triangle_free = true};
        default:
            return {};
    }
}

int run_verify(const std::string& theorem_arg, int max_n, const std::string& corpus,
               const std::vector<std::string>& filters, int workers, const std::string& format,
               const std::string& out_path) {
    auto thm = theorem_from_string(theorem_arg);
    if (!thm) {
        std::cerr << "unknown theorem: " << theorem_arg << "\n";
        return kExitUsage;
    }
    GenFilter filter = default_filter(*thm);
    for (const std::string& f : filters) {
        if (f == "connected")
            filter.connected = true;
        else if (f == "triangle-free")
            filter.triangle_free = true;
        else {
            std::cerr << "unknown filter: " << f << "\n";
            return kExitUsage;
        }
    }

    Universe universe;
    if (!corpus.empty()) {
        std::ifstream in(corpus);
        if (!in) {
            std::cerr << "cannot open corpus " << corpus << "\n";
            return kExitUsage;
        }
        universe.source = "corpus:" + corpus;
        universe.filter = filter;
        universe.max_order = max_n;
        LineCounters counters = for_each_graph_line(in, [&](const std::string&, const Graph& g, long) {
            if (g.order() <= max_n) universe.graphs.push_back(g);
        });
        if (counters.failed) return kExitUsage;
    } else {
        try {
            GraphGenerator gen;
            universe = make_universe(gen, max_n, filter);
        } catch (const std::exception& ex) {
            std::cerr << "verify: " << ex.what() << "\n";
            return kExitUsage;
        }
    }

    VerificationReport report;
    switch (*thm) {
        case TheoremId::THM1:
        case TheoremId::THM2:
        case TheoremId::THM3:
        case TheoremId::THM4:
            report = check_bound_theorem(universe, *thm, workers);
            break;
        case TheoremId::LEM21_STRICT:
        case TheoremId::LEM31:
        case TheoremId::LEM32:
        case TheoremId::LEM33:
            report = check_lemma_suite(universe, *thm, workers);
            break;
        case TheoremId::THMB_PROPS:
            report = check_gallai_edmonds(universe, workers);
            break;
        default:
            report = check_order_bounds(universe, *thm, workers);
            break;
    }

    std::ofstream out_file;
    std::ostream& out = open_output(out_path, out_file);
    if (format == "json-lines")
        write_report_json_lines(out, report);
    else
        write_report_text(out, report);
    return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal independent set counts, matching bounds and extremal families"};
    app.require_subcommand(1);

    std::string input, out_path, format = "text";
    std::string family, theorem, corpus, variant = "h7";
    int max_n = 7;
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    int t = -1, order_n = -1, r = -1, ell = 1, s = 0, l1 = 1, l2 = 1, l3 = 1;
    std::optional<int> order, recog_t;
    std::vector<std::string> filters;

    auto add_io = [&](CLI::App* cmd, bool with_input) {
        if (with_input) cmd->add_option("--input", input, "graph6 input file, '-' for stdin");
        cmd->add_option("--format", format, "text | json-lines")
            ->check(CLI::IsMember({"text", "json-lines"}));
        cmd->add_option("--out", out_path, "output file, default stdout");
    };

    CLI::App* count = app.add_subcommand("count", "mu, mis and i for each graph6 line");
    add_io(count, true);

    CLI::App* make = app.add_subcommand("make", "construct family members as graph6");
    make->add_option("--family", family, "family id, e.g. E_T, M_T, GENERAL_T1")->required();
    make->add_option("--t", t, "matching-number parameter");
    make->add_option("--n", order_n, "order parameter for A_N/B_N/D_N");
    make->add_option("--r", r, "isolated-vertex / leg / star parameter");
    make->add_option("--ell", ell, "leaf count");
    make->add_option("--s", s, "isolated-vertex count (odd M_t)");
    make->add_option("--l1", l1, "P-class leaf count on u");
    make->add_option("--l2", l2, "P-class leaf count on v");
    make->add_option("--l3", l3, "P-class shared-neighbor count");
    make->add_option("--variant", variant, "D_N variant: h7 | spider");
    make->add_option("--order", order, "enumerate all members of this order instead");
    make->add_option("--out", out_path, "output file, default stdout");

    CLI::App* rec = app.add_subcommand("recognize", "family membership per graph6 line");
    rec->add_option("--family", family, "family id")->required();
    rec->add_option("--t", recog_t, "family parameter; defaults to mu(g)");
    add_io(rec, true);

    CLI::App* verify = app.add_subcommand("verify", "exhaustive theorem verification");
    verify->add_option("--theorem", theorem, "THM1..THM4, LEM21_STRICT, LEM31, LEM32, LEM33, THMB_PROPS, THMD, THME_ODD, MOON_MOSER, THMC")
        ->required();
    verify->add_option("--max-n", max_n, "largest order in the universe");
    verify->add_option("--corpus", corpus, "graph6 corpus file instead of the generator");
    verify->add_option("--filter", filters, "extra universe filter: connected, triangle-free");
    verify->add_option("--workers", workers, "worker threads");
    add_io(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (count->parsed()) return run_count(input, format, out_path);
        if (make->parsed())
            return run_make(family, order, t, order_n, r, ell, s, l1, l2, l3, variant, out_path);
        if (rec->parsed()) return run_recognize(family, recog_t, input, format, out_path);
        if (verify->parsed())
            return run_verify(theorem, max_n, corpus, filters, workers, format, out_path);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
