#include "kohn/linear.hpp"

#include "kohn/errors.hpp"

namespace kohn {

namespace {

// Gaussian elimination; returns the inverse or throws on a singular input.
std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(a[piv][col]) == 0) ++piv;
        if (piv == n) throw domain_error("singular matrix rejected");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            Rat f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

LinearChange::LinearChange(std::vector<std::vector<Rat>> matrix) : m_(std::move(matrix)) {
    const std::size_t n = m_.size();
    if (n == 0) throw domain_error("empty linear change");
    for (const auto& row : m_)
        if (row.size() != n) throw domain_error("non-square linear change");
    invert(m_);  // validates invertibility
}

LinearChange LinearChange::identity(unsigned n) {
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (unsigned i = 0; i < n; ++i) m[i][i] = 1;
    return LinearChange(std::move(m));
}

bool LinearChange::is_identity() const {
    for (std::size_t i = 0; i < m_.size(); ++i)
        for (std::size_t j = 0; j < m_.size(); ++j)
            if (m_[i][j] != Rat(i == j ? 1 : 0)) return false;
    return true;
}

LinearChange LinearChange::inverse() const { return LinearChange(invert(m_)); }

LinearChange LinearChange::then(const LinearChange& b) const {
    const std::size_t n = m_.size();
    if (b.m_.size() != n) throw domain_error("linear change dimension mismatch");
    std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (sgn(m_[i][k]) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += m_[i][k] * b.m_[k][j];
        }
    return LinearChange(std::move(r));
}

Poly apply_linear_change(const Poly& p, const LinearChange& L) {
    if (p.nvars() != L.dim()) throw domain_error("linear change dimension mismatch");
    const unsigned n = p.nvars();
    std::vector<Poly> images;
    images.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Term> terms;
        for (unsigned j = 0; j < n; ++j) {
            if (sgn(L.matrix()[i][j]) == 0) continue;
            Exponents e(n, 0);
            e[j] = 1;
            terms.push_back({std::move(e), L.matrix()[i][j]});
        }
        images.push_back(Poly(n, std::move(terms)));
    }
    return compose(p, images);
}

std::vector<Poly> random_linear_forms(unsigned n, unsigned d, RandomSource& rng, long bound) {
    for (;;) {
        std::vector<std::vector<Rat>> rows(d, std::vector<Rat>(n));
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < n; ++j) rows[i][j] = rng.coefficient(bound);
        // rank check by elimination
        auto a = rows;
        unsigned rank = 0;
        for (unsigned col = 0; col < n && rank < d; ++col) {
            unsigned piv = rank;
            while (piv < d && sgn(a[piv][col]) == 0) ++piv;
            if (piv == d) continue;
            std::swap(a[piv], a[rank]);
            for (unsigned r = 0; r < d; ++r) {
                if (r == rank || sgn(a[r][col]) == 0) continue;
                Rat f = a[r][col] / a[rank][col];
                for (unsigned j = col; j < n; ++j) a[r][j] -= f * a[rank][j];
            }
            ++rank;
        }
        if (rank < d) continue;
        std::vector<Poly> forms;
        forms.reserve(d);
        for (unsigned i = 0; i < d; ++i) {
            std::vector<Term> terms;
            for (unsigned j = 0; j < n; ++j) {
                if (sgn(rows[i][j]) == 0) continue;
                Exponents e(n, 0);
                e[j] = 1;
                terms.push_back({std::move(e), rows[i][j]});
            }
            forms.push_back(Poly(n, std::move(terms)));
        }
        return forms;
    }
}

}  // namespace kohn
