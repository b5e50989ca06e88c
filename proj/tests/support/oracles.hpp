#pragma once

// Reference computations used to check the library from independent
// directions. Everything here is deliberately naive: closures by worklist,
// minors by enumeration, quotients by explicit element bookkeeping. None of
// it calls into the construction paths it is used to validate.

#include <moncat/int_matrix.hpp>
#include <moncat/smith.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracles {

using moncat::Int;
using moncat::IntMatrix;

// ---------------------------------------------------------------------------
// integer matrices

inline Int determinant_by_cofactors(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("cofactor determinant: non-square");
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        const Int term = m.at(0, j) * determinant_by_cofactors(sub);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> pick(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            fn(pick);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= n; ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

/// gcd of all k x k minors (0 when every minor vanishes).
inline Int determinantal_divisor(const IntMatrix& m, std::size_t k) {
    Int g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
        for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
            g = gcd(g, determinant_by_cofactors(sub));
        });
    });
    return g < 0 ? Int(-g) : g;
}

/// Invariant factors as quotients of successive determinantal divisors.
inline std::vector<Int> invariant_factors_by_minors(const IntMatrix& m) {
    std::vector<Int> out;
    Int prev = 1;
    const std::size_t bound = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= bound; ++k) {
        const Int dk = determinantal_divisor(m, k);
        if (dk == 0) break;
        out.push_back(dk / prev);
        prev = dk;
    }
    return out;
}

// ---------------------------------------------------------------------------
// finite sets: smallest equivalence / congruence containing seed pairs

/// Partition of {0..n-1} generated by the seed pairs, as the canonical class
/// table (classes numbered in order of smallest member). Pure worklist
/// closure over an explicit relation matrix.
inline std::vector<int> equivalence_closure(int n, const std::vector<std::pair<int, int>>& seeds) {
    std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) rel[i][i] = true;
    for (auto [a, b] : seeds) rel[a][b] = rel[b][a] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (rel[a][b])
                    for (int c = 0; c < n; ++c)
                        if (rel[b][c] && !rel[a][c]) {
                            rel[a][c] = rel[c][a] = true;
                            changed = true;
                        }
    }
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int a = 0; a < n; ++a) {
        if (cls[a] >= 0) continue;
        cls[a] = next;
        for (int b = a + 1; b < n; ++b)
            if (rel[a][b]) cls[b] = next;
        ++next;
    }
    return cls;
}

/// Smallest monoid congruence on the multiplication table `mul` (size n x n,
/// row-major) containing the seed pairs: equivalence closure interleaved with
/// translation stability a~b => xa~xb and ax~bx.
inline std::vector<int> congruence_closure(int n, const std::vector<int>& mul,
                                           std::vector<std::pair<int, int>> pairs) {
    auto times = [&](int a, int b) { return mul[static_cast<std::size_t>(a * n + b)]; };
    std::vector<int> cls;
    for (;;) {
        cls = equivalence_closure(n, pairs);
        bool stable = true;
        for (int a = 0; a < n && stable; ++a)
            for (int b = a + 1; b < n && stable; ++b) {
                if (cls[a] != cls[b]) continue;
                for (int x = 0; x < n; ++x) {
                    if (cls[times(x, a)] != cls[times(x, b)]) {
                        pairs.emplace_back(times(x, a), times(x, b));
                        stable = false;
                    }
                    if (cls[times(a, x)] != cls[times(b, x)]) {
                        pairs.emplace_back(times(a, x), times(b, x));
                        stable = false;
                    }
                }
            }
        if (stable) return cls;
    }
}

/// Multiplication table of the quotient monoid by a congruence class table.
inline std::vector<int> quotient_table(int n, const std::vector<int>& mul,
                                       const std::vector<int>& cls) {
    const int q = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<int> rep(static_cast<std::size_t>(q), -1);
    for (int a = 0; a < n; ++a)
        if (rep[static_cast<std::size_t>(cls[a])] < 0) rep[static_cast<std::size_t>(cls[a])] = a;
    std::vector<int> out(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            out[static_cast<std::size_t>(i * q + j)] =
                cls[static_cast<std::size_t>(mul[static_cast<std::size_t>(rep[i] * n + rep[j])])];
    return out;
}

// ---------------------------------------------------------------------------
// rings presented on abelian groups

/// Relation lattice of the quotient of a ring by the two-sided ideal the seed
/// columns generate. `relations` presents the additive group on g generators,
/// `mult` (g x g^2) lists generator products in row-major pair order. The
/// ideal is saturated by translating every known column by every generator on
/// both sides until the lattice stops growing.
inline IntMatrix ideal_quotient_lattice(const IntMatrix& relations, const IntMatrix& mult,
                                        const IntMatrix& seeds) {
    const std::size_t g = relations.rows();
    auto translate_once = [&](const IntMatrix& s, std::size_t i, bool left) {
        IntMatrix pair(g * g, 1);
        for (std::size_t k = 0; k < g; ++k) {
            const std::size_t row = left ? i * g + k : k * g + i;
            pair.at(row, 0) = s.at(k, 0);
        }
        return mult * pair;
    };

    IntMatrix accumulated = relations.hstack(seeds);
    std::vector<IntMatrix> frontier;
    for (std::size_t j = 0; j < seeds.cols(); ++j) frontier.push_back(seeds.col(j));
    while (!frontier.empty()) {
        moncat::SnfSolver lattice(accumulated);
        std::vector<IntMatrix> next;
        for (const auto& s : frontier)
            for (std::size_t i = 0; i < g; ++i)
                for (bool left : {true, false}) {
                    IntMatrix t = translate_once(s, i, left);
                    if (!lattice.contains(t)) {
                        accumulated = accumulated.hstack(t);
                        lattice = moncat::SnfSolver(accumulated);
                        next.push_back(std::move(t));
                    }
                }
        frontier = std::move(next);
    }
    return moncat::hermite_column_form(accumulated);
}

// ---------------------------------------------------------------------------
// monoid catalogs

/// All associative unital multiplication tables on {0..n-1} with identity 0,
/// in lexicographic table order.
inline std::vector<std::vector<int>> monoid_tables(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        t[static_cast<std::size_t>(i)] = i;          // 0 * i = i
        t[static_cast<std::size_t>(i * n)] = i;      // i * 0 = i
    }
    auto at = [&](int a, int b) -> int& { return t[static_cast<std::size_t>(a * n + b)]; };
    std::vector<std::pair<int, int>> slots;
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) slots.emplace_back(a, b);
    std::function<void(std::size_t)> rec = [&](std::size_t s) {
        if (s == slots.size()) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        if (at(at(a, b), c) != at(a, at(b, c))) return;
            out.push_back(t);
            return;
        }
        for (int v = 0; v < n; ++v) {
            at(slots[s].first, slots[s].second) = v;
            rec(s + 1);
        }
        at(slots[s].first, slots[s].second) = 0;
    };
    rec(0);
    return out;
}

/// Representatives of the catalog up to isomorphism (relabelings fixing 0).
inline std::vector<std::vector<int>> monoid_tables_up_to_iso(int n) {
    auto all = monoid_tables(n);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> reps;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& t : all) {
        if (seen.count(t)) continue;
        reps.push_back(t);
        std::vector<int> p = perm;
        do {
            std::vector<int> image(t.size());
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    image[static_cast<std::size_t>(p[a] * n + p[b])] =
                        p[static_cast<std::size_t>(t[static_cast<std::size_t>(a * n + b)])];
            seen.insert(image);
        } while (std::next_permutation(p.begin() + 1, p.end()));  // identity stays at 0
    }
    return reps;
}

}  // namespace oracles
