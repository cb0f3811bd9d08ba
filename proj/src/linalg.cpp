#include "negflow/linalg.hpp"

#include <stdexcept>

namespace negflow::linalg {

void Matrix::append_row(const std::vector<Rational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

namespace {

mpz_class row_scale(const Matrix& a, const std::vector<Rational>* b, std::size_t r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).raw().get_den_mpz_t());
    if (b) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*b)[r].raw().get_den_mpz_t());
    return l;
}

mpz_class scaled(const Rational& q, const mpz_class& scale) {
    mpz_class v = scale / q.raw().get_den();
    return v * q.raw().get_num();
}

/// In-place Bareiss elimination of a rows x cols integer matrix. Returns the
/// pivot column of each of the leading rows.
std::vector<std::size_t> bareiss(std::vector<mpz_class>& m, std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    mpz_class t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m[p * cols + c]) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m[p * cols + j], m[r * cols + j]);
        }
        const mpz_class& piv = m[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            mpz_class& lead = m[i * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class& x = m[i * cols + j];
                t = piv * x;
                t -= lead * m[r * cols + j];
                mpz_divexact(x.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            lead = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Back substitution on an echelon form whose first `n` columns are all pivots.
LinearSolution back_substitute(const std::vector<mpz_class>& m, std::size_t n, std::size_t cols) {
    LinearSolution sol;
    sol.kind = SolutionKind::Unique;
    sol.x.assign(n, Rational{});
    for (std::size_t k = n; k-- > 0;) {
        Rational acc(mpq_class(m[k * cols + n]));
        for (std::size_t j = k + 1; j < n; ++j) acc -= Rational(mpq_class(m[k * cols + j])) * sol.x[j];
        sol.x[k] = acc / Rational(mpq_class(m[k * cols + k]));
    }
    return sol;
}

LinearSolution classify(std::vector<mpz_class>& m, std::size_t rows, std::size_t n) {
    const std::size_t cols = n + 1;
    const auto pivots = bareiss(m, rows, cols);
    if (!pivots.empty() && pivots.back() == n) return {};  // 0 = nonzero row
    if (pivots.size() < n) return {SolutionKind::Infinite, {}};
    return back_substitute(m, n, cols);
}

}  // namespace

std::size_t rank(const Matrix& a) {
    std::vector<mpz_class> m(a.rows() * a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const mpz_class s = row_scale(a, nullptr, r);
        for (std::size_t c = 0; c < a.cols(); ++c) m[r * a.cols() + c] = scaled(a(r, c), s);
    }
    return bareiss(m, a.rows(), a.cols()).size();
}

LinearSolution solve(const Matrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
    IntegerSystem sys(a, b);
    std::vector<std::size_t> all(a.cols());
    for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
    return sys.solve_columns(all);
}

IntegerSystem::IntegerSystem(const Matrix& a, const std::vector<Rational>& b)
    : rows_(a.rows()), cols_(a.cols()), data_(a.rows() * (a.cols() + 1)) {
    if (b.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) {
        const mpz_class s = row_scale(a, &b, r);
        for (std::size_t c = 0; c < cols_; ++c) data_[r * (cols_ + 1) + c] = scaled(a(r, c), s);
        data_[r * (cols_ + 1) + cols_] = scaled(b[r], s);
    }
}

LinearSolution IntegerSystem::solve_columns(const std::vector<std::size_t>& columns) const {
    const std::size_t n = columns.size();
    const std::size_t cols = n + 1;
    std::vector<mpz_class> m(rows_ * cols);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < n; ++j) m[r * cols + j] = at(r, columns[j]);
        m[r * cols + n] = at(r, cols_);
    }
    return classify(m, rows_, n);
}

std::optional<std::vector<Rational>> find_nonnegative_solution(const Matrix& a,
                                                               const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t width = n + m + 1;  // originals, artificials, rhs
    std::vector<Rational> t(m * width);
    auto T = [&](std::size_t r, std::size_t c) -> Rational& { return t[r * width + c]; };
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        const bool flip = b[r].sign() < 0;
        for (std::size_t c = 0; c < n; ++c) T(r, c) = flip ? -a(r, c) : a(r, c);
        T(r, n + r) = 1;
        T(r, width - 1) = flip ? -b[r] : b[r];
        basis[r] = n + r;
    }
    // Reduced costs of the phase-one objective (sum of artificials).
    std::vector<Rational> reduced(width);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < m; ++r) reduced[c] -= T(r, c);
    }
    for (std::size_t r = 0; r < m; ++r) reduced[width - 1] -= T(r, width - 1);

    for (;;) {
        std::size_t enter = width;
        for (std::size_t c = 0; c + 1 < width; ++c) {
            if (reduced[c].sign() < 0) {
                enter = c;
                break;
            }
        }
        if (enter == width) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t r = 0; r < m; ++r) {
            if (T(r, enter).sign() <= 0) continue;
            Rational ratio = T(r, width - 1) / T(r, enter);
            if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = std::move(ratio);
            }
        }
        if (leave == m) break;  // unbounded direction; cannot happen for phase one
        const Rational piv = T(leave, enter);
        for (std::size_t c = 0; c < width; ++c) T(leave, c) /= piv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave || T(r, enter).is_zero()) continue;
            const Rational f = T(r, enter);
            for (std::size_t c = 0; c < width; ++c) T(r, c) -= f * T(leave, c);
        }
        if (!reduced[enter].is_zero()) {
            const Rational f = reduced[enter];
            for (std::size_t c = 0; c < width; ++c) reduced[c] -= f * T(leave, c);
        }
        basis[leave] = enter;
    }
    if (!reduced[width - 1].is_zero()) return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < m; ++r) {
        if (basis[r] < n) x[basis[r]] = T(r, width - 1);
    }
    return x;
}

}  // namespace negflow::linalg
