#include "kohn/errors.hpp"
#include "kohn/localalg.hpp"

namespace kohn {

namespace {

// Attempt schedule: identity-like selections first, dense random draws
// later.  Every attempt is certified, so early cheap ones are sound.
std::vector<std::vector<Rat>> attempt_coefficients(unsigned attempt, std::size_t N, unsigned count,
                                                   RandomSource& rng) {
    std::vector<std::vector<Rat>> rows(count, std::vector<Rat>(N, Rat(0)));
    if (attempt == 0 && count <= N) {
        for (unsigned i = 0; i < count; ++i) rows[i][i] = 1;
        return rows;
    }
    if (attempt == 1 && count + 1 <= N) {
        // difference pattern F_{i+1} - F_1
        for (unsigned i = 0; i < count; ++i) {
            rows[i][0] = -1;
            rows[i][i + 1] = 1;
        }
        return rows;
    }
    long bound = attempt < 4 ? 3 : 101;
    for (unsigned i = 0; i < count; ++i)
        for (std::size_t j = 0; j < N; ++j) rows[i][j] = rng.coefficient(bound);
    return rows;
}

}  // namespace

SiuResult siu_select(const std::vector<Poly>& f, const std::vector<Poly>& F, unsigned count,
                     RandomSource& rng, const Caps& caps) {
    if (F.empty()) throw domain_error("siu_select: empty pre-multiplier list");
    const unsigned n = F[0].nvars();

    std::uint64_t mu = f.empty() ? 1 : finite_tuple_multiplicity(f, rng, caps);
    std::uint64_t nu = finite_tuple_multiplicity(F, rng, caps);
    Int bound = Int(static_cast<unsigned long>(mu)) *
                int_pow(Int(static_cast<unsigned long>(nu)), count);

    SiuResult res;
    res.bound = bound;
    if (count == 0) {
        res.certified = mu;
        return res;
    }

    for (unsigned attempt = 0; attempt < caps.max_retries; ++attempt) {
        auto rows = attempt_coefficients(attempt, F.size(), count, rng);
        std::vector<Poly> combos;
        combos.reserve(count);
        bool degen = false;
        for (const auto& r : rows) {
            Poly c = linear_combination(F, r);
            if (c.is_zero()) {
                degen = true;
                break;
            }
            combos.push_back(std::move(c));
        }
        if (degen) continue;

        std::vector<Poly> joint = f;
        for (const auto& c : combos) joint.push_back(c);
        MultValue mv = tuple_multiplicity(joint, rng, caps);
        if (!mv.value || !mv.stable) continue;
        if (Int(static_cast<unsigned long>(*mv.value)) > bound) continue;

        res.combos = std::move(combos);
        res.coefficients = std::move(rows);
        res.certified = *mv.value;
        res.attempts = attempt + 1;
        (void)n;
        return res;
    }
    throw resource_error("siu_select: no certified combination within the retry budget");
}

}  // namespace kohn
