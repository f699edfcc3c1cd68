#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "spinqw/errors.hpp"
#include "spinqw/qseries.hpp"
#include "spinqw/scalar.hpp"

namespace spinqw {

// Vertex labels follow (i,j;k,l) = (bottom, left; top, right).
enum class Conservation {
    SouthWestNorthEast, // i + j = k + l, paths travel up and right
    NorthWestSouthEast  // j + k = i + l, paths travel down and right
};

inline constexpr int kUnbounded = -1;

template <class T>
struct WeightFamily {
    std::function<T(int, int, int, int)> weight;
    Conservation law = Conservation::SouthWestNorthEast;
    int capacity = 1;

    bool admissible(int i, int j, int k, int l) const
    {
        if (i < 0 || j < 0 || k < 0 || l < 0) return false;
        if (capacity != kUnbounded && (j > capacity || l > capacity)) return false;
        return law == Conservation::SouthWestNorthEast ? i + j == k + l : j + k == i + l;
    }

    T operator()(int i, int j, int k, int l) const
    {
        return admissible(i, j, k, l) ? weight(i, j, k, l) : T(0);
    }
};

template <class T>
T weight_unfused(const T& q, const T& s, const T& u, int i, int j, int k, int l)
{
    require(i >= 0 && k >= 0, "weight_unfused: vertical occupations must be non-negative");
    require((j == 0 || j == 1) && (l == 0 || l == 1), "weight_unfused: horizontal edges must be 0 or 1");
    if (i + j != k + l) return T(0);
    T den = T(1) - s * u;
    if (is_zero(den)) throw DivisionByZero("weight_unfused: 1 - s u = 0");
    if (j == 0 && l == 0) return (T(1) - s * ipow(q, i) * u) / den;
    if (j == 0 && l == 1) return (T(1) - s * s * ipow(q, k)) * u / den;
    if (j == 1 && l == 0) return (T(1) - ipow(q, i + 1)) / den;
    return (u - s * ipow(q, i)) / den;
}

template <class T>
T weight_dual(const T& q, const T& s, const T& u, int i, int j, int k, int l)
{
    require(i >= 0 && k >= 0, "weight_dual: vertical occupations must be non-negative");
    require((j == 0 || j == 1) && (l == 0 || l == 1), "weight_dual: horizontal edges must be 0 or 1");
    if (j + k != i + l) return T(0);
    T den = T(1) - s * u;
    if (is_zero(den)) throw DivisionByZero("weight_dual: 1 - s u = 0");
    if (j == 1 && l == 1) return (u - s * ipow(q, i)) / den;
    if (j == 1 && l == 0) return (T(1) - s * s * ipow(q, k)) / den;
    if (j == 0 && l == 1) return (T(1) - ipow(q, i + 1)) * u / den;
    return (T(1) - s * ipow(q, i) * u) / den;
}

template <class T>
WeightFamily<T> unfused_family(const T& q, const T& s, const T& u)
{
    return {[=](int i, int j, int k, int l) { return weight_unfused(q, s, u, i, j, k, l); },
            Conservation::SouthWestNorthEast, 1};
}

template <class T>
WeightFamily<T> dual_family(const T& q, const T& s, const T& u)
{
    return {[=](int i, int j, int k, int l) { return weight_dual(q, s, u, i, j, k, l); },
            Conservation::NorthWestSouthEast, 1};
}

// Multiplies one vertex of a family by `factor`; used as a negative control.
template <class T>
WeightFamily<T> perturbed(WeightFamily<T> fam, std::array<int, 4> at, const T& factor)
{
    auto base = fam.weight;
    fam.weight = [=](int i, int j, int k, int l) {
        T w = base(i, j, k, l);
        if (std::array<int, 4>{i, j, k, l} == at) w *= factor;
        return w;
    };
    return fam;
}

// Vertical stack of unfused vertices; the bottom vertex carries spectral[0].
template <class T, class Weight>
T n_vertex_with(const Weight& w, const std::vector<T>& spectral, int i, const std::vector<int>& js, int k,
                const std::vector<int>& ls)
{
    require(js.size() == spectral.size() && ls.size() == spectral.size(), "n_vertex: edge lists must match spectral list");
    T result(1);
    int cur = i;
    for (std::size_t r = 0; r < spectral.size(); ++r) {
        int next = cur + js[r] - ls[r];
        if (next < 0) return T(0);
        result *= w(spectral[r], cur, js[r], next, ls[r]);
        if (is_zero(result)) return result;
        cur = next;
    }
    return cur == k ? result : T(0);
}

template <class T>
T n_vertex(const T& q, const T& s, const std::vector<T>& spectral, int i, const std::vector<int>& js, int k,
           const std::vector<int>& ls)
{
    for (int e : js) require(e == 0 || e == 1, "n_vertex: left edges must be 0 or 1");
    for (int e : ls) require(e == 0 || e == 1, "n_vertex: right edges must be 0 or 1");
    return n_vertex_with(
        [&](const T& u, int a, int b, int c, int d) { return weight_unfused(q, s, u, a, b, c, d); }, spectral, i, js,
        k, ls);
}

// Column occupations indexed by column; trailing zeros are trimmed.
using State = std::vector<int>;

inline void trim(State& st)
{
    while (!st.empty() && st.back() == 0) st.pop_back();
}

inline int state_at(const State& st, int c)
{
    return c < static_cast<int>(st.size()) ? st[c] : 0;
}

// Single-row partition function on columns first_col..L-1 with fixed boundary data.
template <class T>
T row_value(const WeightFamily<T>& fam, const State& bottom, const State& top, int left, int right, int first_col = 0)
{
    int L = static_cast<int>(std::max(bottom.size(), top.size()));
    int h = left;
    T value(1);
    for (int c = first_col; c < L; ++c) {
        int i = state_at(bottom, c), k = state_at(top, c);
        int out = fam.law == Conservation::SouthWestNorthEast ? i + h - k : h + k - i;
        if (!fam.admissible(i, h, k, out)) return T(0);
        value *= fam(i, h, k, out);
        if (is_zero(value)) return value;
        h = out;
    }
    return h == right ? value : T(0);
}

// A row acting on column states; left_terms lists (left edge value, coefficient).
template <class T>
struct RowOperator {
    WeightFamily<T> family;
    std::vector<std::pair<int, T>> left_terms;
    int right = 0;
    int first_col = 0;
};

namespace detail {

template <class T, class Emit>
void scan_columns(const WeightFamily<T>& fam, const State& source, int c, int max_col, int h, int right, T acc,
                  State& target, Emit& emit)
{
    int last = static_cast<int>(source.size()) - 1;
    if (c > max_col || (c > last && h == 0 && right == 0)) {
        if (h != right) return;
        State out(target.begin(), target.begin() + std::min<int>(c, static_cast<int>(target.size())));
        trim(out);
        emit(out, acc);
        return;
    }
    int a = state_at(source, c);
    int hi = a + h;
    if (fam.capacity != kUnbounded) hi = std::min(hi, fam.capacity);
    for (int out = 0; out <= hi; ++out) {
        int other = a + h - out;
        T w = fam.law == Conservation::SouthWestNorthEast ? fam(a, h, other, out) : fam(other, h, a, out);
        if (is_zero(w)) continue;
        target[c] = other;
        scan_columns(fam, source, c + 1, max_col, out, right, acc * w, target, emit);
    }
    target[c] = 0;
}

} // namespace detail

// Enumerates every state reachable from `source` through one row, with its weight.
// The source is the bottom boundary for up-right families and the top boundary for
// down-right families. Target states are confined to columns <= max_col.
template <class T, class Emit>
void row_transitions(const WeightFamily<T>& fam, const State& source, int left, int right, int first_col,
                     int max_col, Emit&& emit)
{
    if (static_cast<int>(source.size()) - 1 > max_col) return;
    State target(max_col + 1, 0);
    for (int c = 0; c < first_col && c < static_cast<int>(source.size()); ++c) target[c] = source[c];
    detail::scan_columns(fam, source, first_col, max_col, left, right, T(1), target, emit);
}

template <class T>
using Distribution = std::map<State, T>;

template <class T>
Distribution<T> propagate(const Distribution<T>& dist, const RowOperator<T>& op, int max_col)
{
    Distribution<T> next;
    for (const auto& [state, value] : dist) {
        for (const auto& [left, coeff] : op.left_terms) {
            if (is_zero(coeff)) continue;
            T base = value * coeff;
            row_transitions(op.family, state, left, op.right, op.first_col, max_col,
                            [&](const State& target, const T& w) {
                                auto it = next.find(target);
                                if (it == next.end())
                                    next.emplace(target, base * w);
                                else
                                    it->second += base * w;
                            });
        }
    }
    return next;
}

// <source| row_1 ... row_n |target> by dynamic programming over intermediate states.
template <class T>
T lattice_value(const std::vector<RowOperator<T>>& rows, const State& source, const State& target, int max_col)
{
    State src = source, dst = target;
    trim(src);
    trim(dst);
    Distribution<T> dist{{src, T(1)}};
    for (const auto& row : rows) {
        dist = propagate(dist, row, max_col);
        if (dist.empty()) return T(0);
    }
    auto it = dist.find(dst);
    return it == dist.end() ? T(0) : it->second;
}

// Two-row monodromy matrix indexed by (2 j1 + j2, 2 l1 + l2) for fixed outer edges i, k.
template <class T, class Weight>
std::array<std::array<T, 4>, 4> two_row_matrix(const Weight& w, const T& ua, const T& ub, int i, int k)
{
    std::array<std::array<T, 4>, 4> m{};
    for (auto& row : m) row.fill(T(0));
    for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2)
            for (int l1 = 0; l1 < 2; ++l1)
                for (int l2 = 0; l2 < 2; ++l2) {
                    int mid = i + j1 - l1;
                    if (mid < 0) continue;
                    m[2 * j1 + j2][2 * l1 + l2] = w(ua, i, j1, mid, l1) * w(ub, mid, j2, k, l2);
                }
    return m;
}

template <class T>
std::array<std::array<T, 4>, 4> r_matrix(const T& q, const T& u)
{
    T z(0);
    return {{{T(1) - q * u, z, z, z},
             {z, q * (T(1) - u), T(1) - q, z},
             {z, (T(1) - q) * u, T(1) - u, z},
             {z, z, z, T(1) - q * u}}};
}

template <class T>
std::array<std::array<T, 4>, 4> mat_mul(const std::array<std::array<T, 4>, 4>& a, const std::array<std::array<T, 4>, 4>& b)
{
    std::array<std::array<T, 4>, 4> c{};
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col) {
            T acc(0);
            for (int t = 0; t < 4; ++t) acc += a[r][t] * b[t][col];
            c[r][col] = acc;
        }
    return c;
}

// P R(u2/u1) W_{u1,u2}(i;k) == W_{u2,u1}(i;k) P R(u2/u1) for a vertex-weight callable w(u,i,j,k,l).
template <class T, class Weight>
bool ybe_check_with(const Weight& w, const T& q, const T& u1, const T& u2, int i, int k)
{
    auto pr = r_matrix(q, checked_div(u2, u1, "ybe_check: u1 = 0"));
    std::swap(pr[1], pr[2]);
    auto lhs = mat_mul(pr, two_row_matrix(w, u1, u2, i, k));
    auto rhs = mat_mul(two_row_matrix(w, u2, u1, i, k), pr);
    return lhs == rhs;
}

template <class T>
bool ybe_check(const T& q, const T& s, const T& u1, const T& u2, int i, int k)
{
    return ybe_check_with(
        [&](const T& u, int a, int b, int c, int d) { return weight_unfused(q, s, u, a, b, c, d); }, q, u1, u2, i, k);
}

// Both sides of the two-vertex relation at spectral pair (u, qu); they must agree.
template <class T>
std::pair<T, T> two_vertex_relation(const T& q, const T& s, const T& u, int i, int k)
{
    std::vector<T> spectral{u, q * u};
    T lhs(0), rhs(0);
    for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2) {
            lhs += ipow(q, a2) * n_vertex(q, s, spectral, i, {a1, a2}, k, {0, 1});
            rhs += ipow(q, a2 + 1) * n_vertex(q, s, spectral, i, {a1, a2}, k, {1, 0});
        }
    return {lhs, rhs};
}

} // namespace spinqw
