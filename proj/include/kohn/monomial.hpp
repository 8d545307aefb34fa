#pragma once

#include <cstdint>
#include <vector>

namespace kohn {

// Exponent vector of a monomial z^a; length is the ambient variable count.
using Exponents = std::vector<std::uint32_t>;

inline unsigned total_degree(const Exponents& a) {
    unsigned d = 0;
    for (auto e : a) d += e;
    return d;
}

inline bool divides(const Exponents& a, const Exponents& b) {
    // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponents exp_mul(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Exponents exp_div(const Exponents& a, const Exponents& b) {
    // a / b, assuming b | a
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline bool is_zero_exp(const Exponents& a) {
    for (auto e : a)
        if (e) return false;
    return true;
}

// Degrevlex comparison used as the canonical storage order of Poly terms.
// Returns +1 if a > b, 0 if equal, -1 otherwise.
inline int cmp_degrevlex(const Exponents& a, const Exponents& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

struct ExponentsHash {
    std::size_t operator()(const Exponents& a) const {
        std::size_t h = 1469598103934665603ULL;
        for (auto e : a) {
            h ^= e + 0x9e3779b9 + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace kohn
