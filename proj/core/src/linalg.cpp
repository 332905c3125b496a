#include "aperiodic/linalg.hpp"

#include "aperiodic/error.hpp"

#include <numeric>
#include <stdexcept>

namespace aperiodic {

namespace {

IntMatrix clear_row_denominators(const RationalMatrix& a) {
    IntMatrix out;
    out.reserve(a.size());
    for (const auto& row : a) {
        const Integer den = common_denominator(row);
        std::vector<Integer> r;
        r.reserve(row.size());
        for (const auto& q : row) {
            const Rational s = q * Rational(den);
            r.push_back(s.get_num());
        }
        out.push_back(std::move(r));
    }
    return out;
}

struct Echelon {
    IntMatrix rows;
    std::vector<std::size_t> pivot_columns;
};

// Bareiss elimination in the requested column order. Row i of the result has
// its pivot in pivot_columns[i]; entries left of it (in column order) are zero.
Echelon bareiss(IntMatrix a, const std::vector<std::size_t>& order) {
    Echelon e;
    const std::size_t n_rows = a.size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t col : order) {
        if (r == n_rows) break;
        std::size_t p = r;
        while (p < n_rows && a[p][col] == 0) ++p;
        if (p == n_rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < n_rows; ++i) {
            for (std::size_t k : order) {
                if (k == col) continue;
                Integer num = a[r][col] * a[i][k] - a[i][col] * a[r][k];
                Integer q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[i][k] = q;
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        e.pivot_columns.push_back(col);
        ++r;
    }
    a.resize(r);
    e.rows = std::move(a);
    return e;
}

std::vector<std::size_t> natural_order(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

}  // namespace

std::vector<Integer> normalize_primitive(std::vector<Integer> v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) return v;
    for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0) {
            for (auto& y : v) y = -y;
        }
        break;
    }
    return v;
}

IntMatrix hermite_normal_form(IntMatrix rows) {
    if (rows.empty()) return rows;
    const std::size_t n = rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != n) throw ContractError("hermite_normal_form: ragged matrix");
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        // Euclid on column `col` among rows r.. until a single nonzero entry remains.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool reduced = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
                for (std::size_t k = col; k < n; ++k) rows[i][k] -= q * rows[r][k];
                if (rows[i][col] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0) {
            for (auto& x : rows[r]) x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t k = col; k < n; ++k) rows[i][k] -= q * rows[r][k];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::size_t matrix_rank(const IntMatrix& a) {
    if (a.empty()) return 0;
    return bareiss(a, natural_order(a.front().size())).rows.size();
}

std::size_t matrix_rank(const RationalMatrix& a) { return matrix_rank(clear_row_denominators(a)); }

std::optional<std::vector<Integer>> nullspace_vector(const RationalMatrix& a,
                                                     const std::vector<std::size_t>& column_order) {
    if (a.empty()) throw ContractError("nullspace_vector: empty matrix");
    const std::size_t n = a.front().size();
    for (const auto& row : a) {
        if (row.size() != n) throw ContractError("nullspace_vector: ragged matrix");
    }
    std::vector<std::size_t> order = column_order.empty() ? natural_order(n) : column_order;
    {
        std::vector<bool> seen(n, false);
        if (order.size() != n) throw ContractError("nullspace_vector: column order must list every column once");
        for (std::size_t c : order) {
            if (c >= n || seen[c]) throw ContractError("nullspace_vector: column order must list every column once");
            seen[c] = true;
        }
    }
    const Echelon e = bareiss(clear_row_denominators(a), order);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
    std::size_t free_col = n;
    for (std::size_t c : order) {
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    }
    if (free_col == n) return std::nullopt;

    std::vector<Rational> x(n, Rational(0));
    x[free_col] = 1;
    for (std::size_t i = e.rows.size(); i-- > 0;) {
        const std::size_t pc = e.pivot_columns[i];
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k != pc && x[k] != 0) s += Rational(e.rows[i][k]) * x[k];
        }
        x[pc] = -s / Rational(e.rows[i][pc]);
    }
    const Integer den = common_denominator(x);
    std::vector<Integer> out;
    out.reserve(n);
    for (const auto& q : x) {
        const Rational s = q * Rational(den);
        out.push_back(s.get_num());
    }
    return normalize_primitive(std::move(out));
}

}  // namespace aperiodic
