#pragma once

#include <vector>

#include "kohn/poly.hpp"
#include "kohn/rational.hpp"
#include "kohn/rng.hpp"

namespace kohn {

// Invertible linear change of coordinates z -> M z.  Construction rejects
// singular matrices, so every LinearChange in flight can be inverted.
class LinearChange {
public:
    explicit LinearChange(std::vector<std::vector<Rat>> matrix);

    static LinearChange identity(unsigned n);

    unsigned dim() const { return static_cast<unsigned>(m_.size()); }
    const std::vector<std::vector<Rat>>& matrix() const { return m_; }
    bool is_identity() const;

    LinearChange inverse() const;
    // Composition: (p o a) o b == p o (a.then(b))  [matrix product a*b]
    LinearChange then(const LinearChange& b) const;

    bool operator==(const LinearChange& o) const { return m_ == o.m_; }

private:
    std::vector<std::vector<Rat>> m_;
};

// p o L: substitute z_i <- sum_j M[i][j] z_j, computed exactly.
Poly apply_linear_change(const Poly& p, const LinearChange& L);

// d independent random linear forms in n variables with integer
// coefficients in [-bound, bound]; redraws until the forms have rank d.
std::vector<Poly> random_linear_forms(unsigned n, unsigned d, RandomSource& rng,
                                      long bound = 101);

}  // namespace kohn
