#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "mismu/graph.hpp"

namespace mismu {

/// Certificate equality coincides with isomorphism; relabeling sends each
/// vertex to its position in the canonical ordering.
struct CanonicalForm {
    std::string certificate;
    std::vector<int> relabeling;
};

namespace detail {

// Ordered partition of 0..n-1: `order` lists vertices cell by cell,
// cell_end[i] marks whether position i closes its cell.
struct Partition {
    std::array<std::uint8_t, kMaxOrder> order;
    std::uint64_t cell_end = 0;  // bit i set when position i ends a cell
    int n = 0;

    void init(int count) {
        n = count;
        for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        cell_end = bit(n - 1);
    }

    bool discrete() const { return popcount64(cell_end) == n; }
};

class CanonicalSearch {
public:
    CanonicalSearch(int n, const std::uint64_t* rows) : n_(n), rows_(rows) {
        cert_len_ = 1 + (n * (n - 1) / 2 + 7) / 8;
    }

    CanonicalForm run() {
        Partition p;
        p.init(n_);
        search(p);
        CanonicalForm out;
        out.certificate.assign(best_.data(), static_cast<std::size_t>(cert_len_));
        out.relabeling.assign(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) out.relabeling[best_perm_[static_cast<std::size_t>(i)]] = i;
        return out;
    }

private:
    // Equitable refinement: repeatedly split cells by neighbor counts into a
    // splitter cell, ordering fragments by count. Both the split rule and the
    // fragment order are label-invariant.
    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            int cs = 0;
            while (cs < p.n) {
                int ce = cs;
                while (!(p.cell_end & bit(ce))) ++ce;
                std::uint64_t splitter = 0;
                for (int i = cs; i <= ce; ++i) splitter |= bit(p.order[static_cast<std::size_t>(i)]);

                int ds = 0;
                while (ds < p.n) {
                    int de = ds;
                    while (!(p.cell_end & bit(de))) ++de;
                    if (de > ds && split_cell(p, ds, de, splitter)) changed = true;
                    ds = de + 1;
                }
                cs = ce + 1;
            }
        }
    }

    bool split_cell(Partition& p, int ds, int de, std::uint64_t splitter) const {
        int counts[kMaxOrder];
        int lo = 1 << 30, hi = -1;
        for (int i = ds; i <= de; ++i) {
            int c = popcount64(rows_[p.order[static_cast<std::size_t>(i)]] & splitter);
            counts[i] = c;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (lo == hi) return false;
        // counting sort by count, stable
        std::uint8_t tmp[kMaxOrder];
        int write = ds;
        for (int c = lo; c <= hi; ++c) {
            int begin = write;
            for (int i = ds; i <= de; ++i)
                if (counts[i] == c) tmp[write++] = p.order[static_cast<std::size_t>(i)];
            if (write > begin) p.cell_end |= bit(write - 1);
        }
        std::memcpy(&p.order[static_cast<std::size_t>(ds)], &tmp[ds], static_cast<std::size_t>(de - ds + 1));
        return true;
    }

    void search(Partition p) {
        refine(p);
        if (p.discrete()) {
            process_leaf(p);
            return;
        }
        // first non-singleton cell is the branch point
        int cs = 0;
        while (p.cell_end & bit(cs)) ++cs;
        int ce = cs;
        while (!(p.cell_end & bit(ce))) ++ce;

        std::uint64_t tried = 0;
        for (int i = cs; i <= ce; ++i) {
            int v = p.order[static_cast<std::size_t>(i)];
            if (pruned_by_automorphism(v, tried)) continue;
            tried |= bit(v);
            Partition child = p;
            // move v to the front of the cell and close it off
            int at = cs;
            while (child.order[static_cast<std::size_t>(at)] != v) ++at;
            for (int j = at; j > cs; --j)
                child.order[static_cast<std::size_t>(j)] = child.order[static_cast<std::size_t>(j - 1)];
            child.order[static_cast<std::size_t>(cs)] = static_cast<std::uint8_t>(v);
            child.cell_end |= bit(cs);
            prefix_.push_back(v);
            search(child);
            prefix_.pop_back();
        }
    }

    bool pruned_by_automorphism(int v, std::uint64_t tried) const {
        if (!tried) return false;
        for (const auto& sigma : automorphisms_) {
            bool fixes_prefix = true;
            for (int w : prefix_)
                if (sigma[static_cast<std::size_t>(w)] != w) {
                    fixes_prefix = false;
                    break;
                }
            if (!fixes_prefix) continue;
            std::uint64_t image = 0;
            for_each_bit(tried, [&](int w) { image |= bit(sigma[static_cast<std::size_t>(w)]); });
            if (image & bit(v)) return true;
        }
        return false;
    }

    void process_leaf(const Partition& p) {
        char cert[1 + kMaxOrder * (kMaxOrder - 1) / 2 / 8 + 1];
        cert[0] = static_cast<char>(n_);
        int byte_at = 1, acc = 0, nbits = 0;
        for (int i = 0; i < n_; ++i) {
            std::uint64_t ri = rows_[p.order[static_cast<std::size_t>(i)]];
            for (int j = i + 1; j < n_; ++j) {
                acc = (acc << 1) | static_cast<int>((ri >> p.order[static_cast<std::size_t>(j)]) & 1);
                if (++nbits == 8) {
                    cert[byte_at++] = static_cast<char>(acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if (nbits) cert[byte_at++] = static_cast<char>(acc << (8 - nbits));

        if (best_perm_[0] == kMaxOrder) {  // first leaf
            std::memcpy(best_.data(), cert, static_cast<std::size_t>(cert_len_));
            std::memcpy(best_perm_.data(), p.order.data(), static_cast<std::size_t>(n_));
            return;
        }
        int cmp = std::memcmp(cert, best_.data(), static_cast<std::size_t>(cert_len_));
        if (cmp < 0) {
            std::memcpy(best_.data(), cert, static_cast<std::size_t>(cert_len_));
            std::memcpy(best_perm_.data(), p.order.data(), static_cast<std::size_t>(n_));
        } else if (cmp == 0 && automorphisms_.size() < kMaxAutomorphisms) {
            // two equal-certificate labelings compose to an automorphism
            std::array<std::uint8_t, kMaxOrder> sigma{};
            for (int i = 0; i < n_; ++i)
                sigma[best_perm_[static_cast<std::size_t>(i)]] = p.order[static_cast<std::size_t>(i)];
            automorphisms_.push_back(sigma);
        }
    }

    static constexpr std::size_t kMaxAutomorphisms = 256;

    int n_;
    const std::uint64_t* rows_;
    int cert_len_;
    std::array<char, 1 + kMaxOrder * (kMaxOrder - 1) / 2 / 8 + 1> best_{};
    std::array<std::uint8_t, kMaxOrder> best_perm_{kMaxOrder};  // sentinel: no leaf yet
    std::vector<int> prefix_;
    std::vector<std::array<std::uint8_t, kMaxOrder>> automorphisms_;
};

inline CanonicalForm canonical_form_rows(int n, const std::uint64_t* rows) {
    if (n == 0) return CanonicalForm{std::string(1, '\0'), {}};
    return CanonicalSearch(n, rows).run();
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
    std::uint64_t rows[kMaxOrder];
    for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v);
    return detail::canonical_form_rows(g.order(), rows);
}

inline std::string certificate(const Graph& g) { return canonical_form(g).certificate; }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    return certificate(a) == certificate(b);
}

/// The canonically relabeled copy; equal for isomorphic inputs.
inline Graph canonical_graph(const Graph& g) {
    return relabel(g, canonical_form(g).relabeling);
}

}  // namespace mismu
