#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mismu/graph.hpp"

namespace mismu {

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(std::size_t offset, const std::string& what)
        : std::runtime_error("graph6: " + what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Standard format: N(n) header, then the upper triangle column by column,
// 6 bits per character offset by 63. Edge bit order: (0,1),(0,2),(1,2),(0,3),...
inline Graph parse_graph6(std::string_view text) {
    constexpr std::string_view kHeader = ">>graph6<<";
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);

    auto at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw Graph6Error(base + text.size(), "unexpected end of input");
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw Graph6Error(base + i, "character outside printable range 63..126");
        return c - 63;
    };

    std::size_t pos = 0;
    long n;
    if (at(0) < 63) {
        n = at(0);
        pos = 1;
    } else {
        // 126 starts the long form; a second 126 would start the 8-byte form,
        // which can only encode n > 64 and is rejected outright.
        if (at(1) == 63) throw Graph6Error(base + 1, "order exceeds 64");
        n = (static_cast<long>(at(1)) << 12) | (at(2) << 6) | at(3);
        pos = 4;
    }
    if (n == 0) throw Graph6Error(base, "order 0 is not accepted");
    if (n > kMaxOrder) throw Graph6Error(base, "order exceeds 64");

    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    int buf = 0, have = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (have == 0) {
                buf = at(pos);
                ++pos;
                have = 6;
            }
            --have;
            if ((buf >> have) & 1) g.add_edge(row, col);
        }
    }
    // Padding bits of the final character must be zero.
    if (have > 0 && (buf & ((1 << have) - 1)))
        throw Graph6Error(base + pos - 1, "nonzero padding bits");
    if (pos < text.size()) throw Graph6Error(base + pos, "trailing garbage after encoding");
    (void)nbits;
    return g;
}

// Short form for n <= 62, long form for 63..64.
inline std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n < 1) throw std::invalid_argument("to_graph6: order must be >= 1");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 0x3f)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 0x3f)));
        out.push_back(static_cast<char>(63 + (n & 0x3f)));
    }
    int buf = 0, have = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            buf = (buf << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(63 + buf));
                buf = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>(63 + (buf << (6 - have))));
    return out;
}

}  // namespace mismu
