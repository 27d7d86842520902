#pragma once

#include <cstdlib>
#include <vector>

#include "ring.hpp"

namespace chevalley {

using IntMatrix = std::vector<std::vector<Int>>;

inline IntMatrix int_identity(std::size_t n) {
    IntMatrix I(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

inline IntMatrix int_mul(const IntMatrix& A, const IntMatrix& B) {
    std::size_t m = A.size(), k = B.size(), n = B.empty() ? 0 : B[0].size();
    IntMatrix C(m, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (A[i][t] != 0)
                for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][t] * B[t][j];
    return C;
}

// L*M*R = diagonal with d_1 | d_2 | ... ; L and R are unimodular and their
// inverses are tracked alongside (L*Linv = I certifies |det L| = 1).
struct SmithForm {
    std::vector<Int> diagonal;  // min(m,n) values, zeros at the end
    IntMatrix L, Linv, R, Rinv;

    std::vector<Int> invariant_factors() const {
        std::vector<Int> v;
        for (const Int& d : diagonal)
            if (d != 0) v.push_back(d);
        return v;
    }

    std::size_t rank() const { return invariant_factors().size(); }
};

inline SmithForm smith_normal_form(IntMatrix M) {
    const std::size_t m = M.size();
    const std::size_t n = m ? M[0].size() : 0;
    SmithForm S;
    S.L = int_identity(m); S.Linv = int_identity(m);
    S.R = int_identity(n); S.Rinv = int_identity(n);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(M[i], M[j]);
        std::swap(S.L[i], S.L[j]);
        for (auto& row : S.Linv) std::swap(row[i], row[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : M) std::swap(row[i], row[j]);
        for (auto& row : S.R) std::swap(row[i], row[j]);
        std::swap(S.Rinv[i], S.Rinv[j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        // row dst += f * row src; inverse transform: col src -= f * col dst
        for (std::size_t c = 0; c < n; ++c) M[dst][c] += f * M[src][c];
        for (std::size_t c = 0; c < m; ++c) S.L[dst][c] += f * S.L[src][c];
        for (std::size_t r = 0; r < m; ++r) S.Linv[r][src] -= f * S.Linv[r][dst];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t r = 0; r < m; ++r) M[r][dst] += f * M[r][src];
        for (std::size_t r = 0; r < n; ++r) S.R[r][dst] += f * S.R[r][src];
        for (std::size_t c = 0; c < n; ++c) S.Rinv[src][c] -= f * S.Rinv[dst][c];
    };
    auto negate_row = [&](std::size_t i) {
        for (auto& x : M[i]) x = -x;
        for (auto& x : S.L[i]) x = -x;
        for (auto& row : S.Linv) row[i] = -row[i];
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // pivot: entry of least absolute value in the remaining block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (M[i][j] != 0 &&
                    (!found || abs(M[i][j]) < abs(M[pi][pj]))) {
                    pi = i; pj = j; found = true;
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (M[i][t] != 0) {
                    Int q = M[i][t] / M[t][t];
                    add_row(i, t, -q);
                    if (M[i][t] != 0) { swap_rows(t, i); again = true; }
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (M[t][j] != 0) {
                    Int q = M[t][j] / M[t][t];
                    add_col(j, t, -q);
                    if (M[t][j] != 0) { swap_cols(t, j); again = true; }
                }
            }
        }
        if (M[t][t] < 0) negate_row(t);
        // the pivot must divide every remaining entry; if not, fold the
        // offending row in and redo this position
        bool redo = false;
        for (std::size_t i = t + 1; i < m && !redo; ++i)
            for (std::size_t j = t + 1; j < n && !redo; ++j)
                if (M[i][j] % M[t][t] != 0) {
                    add_row(t, i, 1);
                    redo = true;
                }
        if (redo) continue;
        ++t;
    }
    for (std::size_t k = 0; k < std::min(m, n); ++k) S.diagonal.push_back(M[k][k]);
    return S;
}

// Does v lie in the lattice generated by the rows of W?
inline bool in_row_lattice(const IntMatrix& W, const std::vector<Int>& v) {
    if (W.empty()) {
        for (const Int& x : v)
            if (x != 0) return false;
        return true;
    }
    SmithForm S = smith_normal_form(W);
    const std::size_t n = W[0].size();
    // y*W = v has an integer solution iff (v*R) is divisible entrywise by diag
    for (std::size_t k = 0; k < n; ++k) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i) s += v[i] * S.R[i][k];
        Int dk = (k < S.diagonal.size()) ? S.diagonal[k] : Int(0);
        if (dk == 0) {
            if (s != 0) return false;
        } else if (s % dk != 0) {
            return false;
        }
    }
    return true;
}

// Solve A*X = B exactly over the rationals; A must be square nonsingular.
inline std::vector<std::vector<Rational>> solve_rational(const IntMatrix& A,
                                                         const IntMatrix& B) {
    const std::size_t n = A.size();
    const std::size_t w = B.empty() ? 0 : B[0].size();
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + w));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = Rational(A[i][j]);
        for (std::size_t j = 0; j < w; ++j) M[i][n + j] = Rational(B[i][j]);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == Rational(0)) ++p;
        if (p == n) throw std::invalid_argument("solve_rational: singular matrix");
        std::swap(M[c], M[p]);
        Rational pivot = M[c][c];
        for (auto& x : M[c]) x /= pivot;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || M[r][c] == Rational(0)) continue;
            Rational f = M[r][c];
            for (std::size_t j = 0; j < n + w; ++j) M[r][j] -= f * M[c][j];
        }
    }
    std::vector<std::vector<Rational>> X(n, std::vector<Rational>(w));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < w; ++j) X[i][j] = M[i][n + j];
    return X;
}

} // namespace chevalley
