#include "core/linear_solver.hpp"

#include <gmpxx.h>

#include "core/errors.hpp"

namespace heckelab {

namespace {

// One integer row of the augmented system [A | b].
using Row = std::vector<mpz_class>;

Row clear_denominators(const std::vector<Rational>& coeffs, const Rational& rhs) {
    mpz_class l(1);
    for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs.den().get_mpz_t());
    Row row;
    row.reserve(coeffs.size() + 1);
    for (const auto& c : coeffs) row.push_back(c.num() * (l / c.den()));
    row.push_back(rhs.num() * (l / rhs.den()));
    return row;
}

}  // namespace

RationalVector solve_linear_exact(const RationalMatrix& a, const RationalVector& b) {
    const size_t rows = a.size();
    if (rows != b.size()) fail(errc::invalid_input, "matrix/vector size mismatch");
    const size_t cols = rows ? a[0].size() : 0;
    for (const auto& r : a)
        if (r.size() != cols) fail(errc::invalid_input, "ragged matrix");
    if (cols == 0) fail(errc::invalid_input, "empty system");

    std::vector<Row> m;
    m.reserve(rows);
    for (size_t i = 0; i < rows; ++i) m.push_back(clear_denominators(a[i], b[i]));

    // Bareiss elimination with row pivoting.
    mpz_class prev(1);
    size_t rank = 0;
    std::vector<size_t> pivot_rows;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = col + 1; j <= cols; ++j) {
                mpz_class t = m[i][j] * m[rank][col] - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        pivot_rows.push_back(col);
        ++rank;
    }

    // Rows beyond the rank have all coefficients eliminated; a surviving
    // right-hand side is a contradiction and takes priority over the rank
    // report.
    for (size_t i = rank; i < rows; ++i) {
        if (m[i][cols] != 0) fail(errc::inconsistent, "inconsistent system (residual row)");
    }
    if (rank < cols) fail(errc::underdetermined, "system has rank " + std::to_string(rank) +
                                                     " < " + std::to_string(cols) + " unknowns");

    // Back substitution over the rationals.
    RationalVector x(cols);
    for (size_t k = cols; k-- > 0;) {
        size_t col = pivot_rows[k];
        Rational acc{Rational(m[k][cols])};
        for (size_t j = col + 1; j < cols; ++j) acc -= Rational(m[k][j]) * x[j];
        x[col] = acc / Rational(m[k][col]);
    }

    // Verify every original row exactly.
    for (size_t i = 0; i < rows; ++i) {
        Rational acc(0);
        for (size_t j = 0; j < cols; ++j) acc += a[i][j] * x[j];
        if (acc != b[i]) fail(errc::inconsistent, "inconsistent system (verification)");
    }
    return x;
}

}  // namespace heckelab
