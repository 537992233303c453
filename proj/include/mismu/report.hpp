#pragma once

#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "mismu/verify.hpp"

namespace mismu {

/// One summary record followed by one record per violation, equality graph,
/// and mismatch. Counts are serialized as decimal strings so 128-bit values
/// survive any consumer.
inline void write_report_json_lines(std::ostream& os, const VerificationReport& r) {
    nlohmann::json summary{
        {"type", "summary"},
        {"theorem", theorem_name(r.theorem)},
        {"max_order", r.max_order},
        {"filter", r.filter_desc},
        {"source", r.source},
        {"graphs_checked", r.graphs_checked},
        {"hypothesis_flagged", r.hypothesis_flagged},
        {"excluded", r.excluded},
        {"violations", r.violations.size()},
        {"equality_graphs", r.equality_graphs.size()},
        {"equality_mismatches", r.equality_mismatches.size()},
        {"wall_ms", r.wall_ms},
    };
    nlohmann::json by_order = nlohmann::json::object();
    for (auto& [n, c] : r.checked_by_order) by_order[std::to_string(n)] = c;
    summary["checked_by_order"] = by_order;
    os << summary.dump() << '\n';
    for (const Violation& v : r.violations) {
        nlohmann::json rec{{"type", "violation"},    {"theorem", theorem_name(r.theorem)},
                           {"graph6", v.graph6},     {"mu", v.mu},
                           {"mis", to_string(v.mis)}, {"bound", to_string(v.bound)}};
        if (!v.note.empty()) rec["property"] = v.note;
        os << rec.dump() << '\n';
    }
    for (const std::string& g6 : r.equality_graphs)
        os << nlohmann::json{{"type", "equality"},
                             {"theorem", theorem_name(r.theorem)},
                             {"graph6", g6}}
                  .dump()
           << '\n';
    for (const EqualityMismatch& m : r.equality_mismatches)
        os << nlohmann::json{{"type", "equality_mismatch"},
                             {"theorem", theorem_name(r.theorem)},
                             {"graph6", m.graph6},
                             {"direction", m.direction}}
                  .dump()
           << '\n';
}

inline void write_report_text(std::ostream& os, const VerificationReport& r) {
    os << "theorem: " << theorem_name(r.theorem) << "\n"
       << "universe: n <= " << r.max_order << ", filter = " << r.filter_desc
       << ", source = " << r.source << "\n"
       << "graphs checked: " << r.graphs_checked;
    if (!r.checked_by_order.empty()) {
        os << " (";
        bool first = true;
        for (auto& [n, c] : r.checked_by_order) {
            if (!first) os << ", ";
            os << "n=" << n << ": " << c;
            first = false;
        }
        os << ")";
    }
    os << "\n";
    if (r.hypothesis_flagged) os << "hypothesis flagged: " << r.hypothesis_flagged << "\n";
    if (r.excluded) os << "excluded by statement: " << r.excluded << "\n";
    os << "violations: " << r.violations.size() << "\n";
    for (const Violation& v : r.violations) {
        os << "  " << v.graph6 << "  mu=" << v.mu << "  mis=" << to_string(v.mis)
           << "  bound=" << to_string(v.bound);
        if (!v.note.empty()) os << "  [" << v.note << "]";
        os << "\n";
    }
    os << "equality graphs: " << r.equality_graphs.size() << "\n";
    for (const std::string& g6 : r.equality_graphs) os << "  " << g6 << "\n";
    os << "equality mismatches: " << r.equality_mismatches.size() << "\n";
    for (const EqualityMismatch& m : r.equality_mismatches)
        os << "  " << m.graph6 << "  " << m.direction << "\n";
    os << "wall time: " << std::fixed << std::setprecision(1) << r.wall_ms << " ms\n"
       << "result: " << (r.ok() ? "PASS" : "FAIL") << "\n";
}

}  // namespace mismu
