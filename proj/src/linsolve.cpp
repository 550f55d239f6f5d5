#include "edgecascade/linsolve.hpp"

#include <utility>

namespace edgecascade {

LinearSolution solve_exact(const PolyMatrix& matrix, const PolyVector& rhs) {
    const int m = static_cast<int>(matrix.size());
    const int n = m == 0 ? 0 : static_cast<int>(matrix[0].size());
    if (static_cast<int>(rhs.size()) != m) throw Error("solve_exact: rhs size mismatch");
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != n) throw Error("solve_exact: ragged matrix");

    // augmented working copy, original row indices tracked through swaps
    std::vector<std::vector<ParamPoly>> w(m, std::vector<ParamPoly>(n + 1));
    std::vector<int> orig(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = matrix[i][j];
        w[i][n] = rhs[i];
        orig[i] = i;
    }

    // Bareiss forward elimination, deterministic column-order pivoting
    std::vector<int> pivot_col; // pivot column of row k
    ParamPoly prev = ParamPoly::constant(1);
    int rank = 0;
    for (int c = 0; c < n && rank < m; ++c) {
        int prow = -1;
        for (int r = rank; r < m; ++r)
            if (!w[r][c].is_zero()) {
                prow = r;
                break;
            }
        if (prow < 0) continue;
        std::swap(w[rank], w[prow]);
        std::swap(orig[rank], orig[prow]);
        const ParamPoly pivot = w[rank][c];
        for (int r = rank + 1; r < m; ++r) {
            const ParamPoly factor = w[r][c];
            for (int j = c; j <= n; ++j) {
                ParamPoly t = w[r][j] * pivot - factor * w[rank][j];
                w[r][j] = param_divide_exact(t, prev); // exact by the minor identity
            }
        }
        prev = pivot;
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<int> free_cols;
    for (int c = 0, k = 0; c < n; ++c) {
        if (k < rank && pivot_col[k] == c)
            ++k;
        else
            free_cols.push_back(c);
    }

    LinearSolution sol;
    sol.free_columns = free_cols;

    // rows below the rank must have vanishing right-hand side
    for (int r = rank; r < m; ++r) {
        if (!w[r][n].is_zero()) {
            sol.consistent = false;
            sol.certificate_row = orig[r];
            return sol;
        }
    }

    auto back_substitute = [&](const std::vector<RationalFn>& fixed_free,
                               bool rhs_active) -> std::vector<RationalFn> {
        std::vector<RationalFn> x(n, RationalFn(Rational(0)));
        int fi = 0;
        for (int c : free_cols) x[c] = fixed_free[fi++];
        for (int k = rank - 1; k >= 0; --k) {
            int pc = pivot_col[k];
            RationalFn acc = rhs_active ? RationalFn::of(w[k][n]) : RationalFn(Rational(0));
            for (int j = pc + 1; j < n; ++j)
                if (!w[k][j].is_zero() && !x[j].is_zero())
                    acc = acc - RationalFn::of(w[k][j]) * x[j];
            x[pc] = acc / RationalFn::of(w[k][pc]);
        }
        return x;
    };

    std::vector<RationalFn> zeros(free_cols.size(), RationalFn(Rational(0)));
    sol.particular = back_substitute(zeros, true);

    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        auto basis = zeros;
        basis[i] = RationalFn(Rational(1));
        sol.nullspace.push_back(back_substitute(basis, false));
    }
    return sol;
}

LinearSolution solve_exact_rational(const std::vector<std::vector<Rational>>& matrix,
                                    const std::vector<Rational>& rhs) {
    PolyMatrix M(matrix.size());
    PolyVector b(rhs.size());
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        M[i].reserve(matrix[i].size());
        for (const auto& q : matrix[i]) M[i].push_back(ParamPoly::constant(q));
        b[i] = ParamPoly::constant(rhs[i]);
    }
    return solve_exact(M, b);
}

} // namespace edgecascade
