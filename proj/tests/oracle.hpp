#pragma once

// Small brute-force reference computations. They share no code with the
// library beyond the Quiver container and the Rational type.

#include "quiveralg/quiver.hpp"

#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using quiveralg::Quiver;
using quiveralg::Rational;

/// A path as (source, target, arrow indices).
struct RawPath {
    int source;
    int target;
    std::vector<int> arrows;
    bool operator<(const RawPath& o) const {
        return std::tie(source, target, arrows) < std::tie(o.source, o.target, o.arrows);
    }
    bool operator==(const RawPath& o) const = default;
};

/// Every arrow word of length <= max_len, kept when consecutive arrows match.
inline std::set<RawPath> all_words(const Quiver& q, std::size_t max_len) {
    std::set<RawPath> out;
    for (int v = 0; v < q.vertex_count(); ++v) out.insert({v, v, {}});
    const int m = q.arrow_count();
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<int> word(len, 0);
        if (m == 0) break;
        while (true) {
            bool ok = true;
            for (std::size_t i = 0; i + 1 < len && ok; ++i) {
                ok = q.arrow(word[i]).target == q.arrow(word[i + 1]).source;
            }
            if (ok) out.insert({q.arrow(word.front()).source, q.arrow(word.back()).target, word});
            std::size_t i = 0;
            while (i < len && ++word[i] == m) word[i++] = 0;
            if (i == len) break;
        }
    }
    return out;
}

/// Cycle detection by repeated removal of vertices without incoming arrows.
inline bool acyclic(const Quiver& q) {
    std::vector<int> indeg(q.vertex_count(), 0);
    for (const auto& a : q.arrows()) ++indeg[a.target];
    std::vector<bool> removed(q.vertex_count(), false);
    for (int round = 0; round < q.vertex_count(); ++round) {
        int pick = -1;
        for (int v = 0; v < q.vertex_count(); ++v) {
            if (!removed[v] && indeg[v] == 0) pick = v;
        }
        if (pick < 0) return false;
        removed[pick] = true;
        for (const auto& a : q.arrows()) {
            if (a.source == pick) --indeg[a.target];
        }
    }
    return true;
}

inline std::size_t rank(std::vector<std::vector<Rational>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline long long binomial(int n, int k) {
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

inline long long power_mod(long long b, long long e, long long p) {
    long long out = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) out = out * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return out;
}

}  // namespace oracle
