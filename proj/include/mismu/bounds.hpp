#pragma once

#include <stdexcept>
#include <string>

#include "mismu/common.hpp"

namespace mismu {

enum class FormulaId {
    MoonMoser,        // order bound for general graphs
    General,          // 3^t
    Connected,        // h(t)
    TriangleFree,     // m(t)
    ConnectedTriangleFree,  // f(t)
    GriggsC,          // c(n)
    HujterOrder,      // triangle-free order bound
    ChangQ,           // q(n)
};

struct BoundValue {
    u128 value;
    FormulaId formula;

    friend bool operator==(const BoundValue& a, u128 v) { return a.value == v; }
};

namespace detail {

[[noreturn]] inline void domain_error(const std::string& name, const std::string& what) {
    throw std::domain_error(name + ": " + what);
}

}  // namespace detail

/// Best possible mis over all graphs of order n >= 2.
inline BoundValue moon_moser(int n) {
    if (n < 2) detail::domain_error("moon_moser", "requires n >= 2");
    u128 v;
    switch (n % 3) {
        case 0: v = checked_pow(3, static_cast<unsigned>(n / 3)); break;
        case 1: v = 4 * checked_pow(3, static_cast<unsigned>((n - 4) / 3)); break;
        default: v = 2 * checked_pow(3, static_cast<unsigned>((n - 2) / 3)); break;
    }
    return {v, FormulaId::MoonMoser};
}

/// 3^t, the mis bound for an arbitrary graph with matching number t.
inline BoundValue general_bound(int t) {
    if (t < 0) detail::domain_error("general_bound", "requires t >= 0");
    return {checked_pow(3, static_cast<unsigned>(t)), FormulaId::General};
}

/// h(t): 3 for t = 1, else 3^(t-1) + 2^(t-1).
inline BoundValue connected_bound_h(int t) {
    if (t < 1) detail::domain_error("connected_bound_h", "requires t >= 1");
    u128 v = t == 1 ? 3
                    : checked_pow(3, static_cast<unsigned>(t - 1)) +
                          checked_pow(2, static_cast<unsigned>(t - 1));
    return {v, FormulaId::Connected};
}

/// m(t): 5^(t/2) for even t, 2*5^((t-1)/2) for odd t.
inline BoundValue trianglefree_bound_m(int t) {
    if (t < 1) detail::domain_error("trianglefree_bound_m", "requires t >= 1");
    u128 v = t % 2 == 0 ? checked_pow(5, static_cast<unsigned>(t / 2))
                        : 2 * checked_pow(5, static_cast<unsigned>((t - 1) / 2));
    return {v, FormulaId::TriangleFree};
}

/// f(t): 5 for t = 2, 2*(5^((t-2)/2) + 3^((t-2)/2)) for even t >= 4,
/// 5^((t-1)/2) + 3^((t-1)/2) for odd t.
inline BoundValue connected_trianglefree_bound_f(int t) {
    if (t < 1) detail::domain_error("connected_trianglefree_bound_f", "requires t >= 1");
    u128 v;
    if (t % 2 == 1) {
        v = checked_pow(5, static_cast<unsigned>((t - 1) / 2)) +
            checked_pow(3, static_cast<unsigned>((t - 1) / 2));
    } else if (t == 2) {
        v = 5;
    } else {
        v = 2 * (checked_pow(5, static_cast<unsigned>((t - 2) / 2)) +
                 checked_pow(3, static_cast<unsigned>((t - 2) / 2)));
    }
    return {v, FormulaId::ConnectedTriangleFree};
}

/// c(n): n for n < 6, else a three-case formula by n mod 3.
inline BoundValue griggs_c(int n) {
    if (n < 1) detail::domain_error("griggs_c", "requires n >= 1");
    u128 v;
    if (n < 6) {
        v = static_cast<u128>(n);
    } else {
        switch (n % 3) {
            case 0:
                v = 2 * checked_pow(3, static_cast<unsigned>((n - 3) / 3)) +
                    checked_pow(2, static_cast<unsigned>((n - 3) / 3));
                break;
            case 1:
                v = checked_pow(3, static_cast<unsigned>((n - 1) / 3)) +
                    checked_pow(2, static_cast<unsigned>((n - 4) / 3));
                break;
            default:
                v = 4 * checked_pow(3, static_cast<unsigned>((n - 5) / 3)) +
                    3 * checked_pow(2, static_cast<unsigned>((n - 8) / 3));
                break;
        }
    }
    return {v, FormulaId::GriggsC};
}

/// Order bound for triangle-free graphs: 2^(n/2) even, 5*2^((n-5)/2) odd.
inline BoundValue hujter_bound(int n) {
    if (n < 4) detail::domain_error("hujter_bound", "requires n >= 4");
    u128 v = n % 2 == 0 ? checked_pow(2, static_cast<unsigned>(n / 2))
                        : 5 * checked_pow(2, static_cast<unsigned>((n - 5) / 2));
    return {v, FormulaId::HujterOrder};
}

/// q(n): 3*2^((n-4)/2) even, 2^((n-1)/2) odd.
inline BoundValue chang_q(int n) {
    if (n < 4) detail::domain_error("chang_q", "requires n >= 4");
    u128 v = n % 2 == 0 ? 3 * checked_pow(2, static_cast<unsigned>((n - 4) / 2))
                        : checked_pow(2, static_cast<unsigned>((n - 1) / 2));
    return {v, FormulaId::ChangQ};
}

}  // namespace mismu
