#pragma once

#include <optional>
#include <vector>

#include "kohn/caps.hpp"
#include "kohn/linear.hpp"
#include "kohn/order.hpp"
#include "kohn/poly.hpp"
#include "kohn/rng.hpp"

namespace kohn {

// Exact witness for an ideal membership in the local ring:
//     unit * target = sum_i cofactors[i] * generators[i]
// with unit(0) != 0, re-verifiable by plain multiplication.
struct MembershipCertificate {
    Poly unit;
    std::vector<Poly> cofactors;
    Poly target;
    std::vector<Poly> generators;
};

bool certificate_verifies(const MembershipCertificate& cert);

// Result of a (weak) normal form computation:
//     unit * p = sum_i cofactors[i] * basis[i] + remainder
// For global orders the unit is 1; for local orders it is a Mora unit.
// Cofactors are populated only when tracking was requested.
struct NFResult {
    Poly remainder;
    Poly unit;
    std::vector<Poly> cofactors;
};

NFResult normal_form(const Poly& p, const std::vector<Poly>& basis, const MonomialOrder& ord,
                     const Caps& caps, bool track);

// An ideal basis tagged with its monomial order.  After completion every
// s-polynomial reduces to zero (Mora for local orders, Buchberger for
// global ones).  When tracked, each basis element carries its expression
// as a polynomial combination of the original generators, so membership
// certificates can be folded back onto the input.
struct StandardBasis {
    std::vector<Poly> generators;  // original input
    MonomialOrder order;
    bool completed = false;
    bool tracked = false;
    std::vector<Poly> basis;                 // completed, leading coefficient 1
    std::vector<std::vector<Poly>> rows;     // basis[i] = sum_j rows[i][j] * generators[j]
};

StandardBasis complete_basis(const std::vector<Poly>& gens, const MonomialOrder& ord,
                             const Caps& caps = {}, bool track = false);

// Adds one generator to an already completed basis and re-closes it.
StandardBasis extend_basis(const StandardBasis& base, const Poly& extra, const Caps& caps = {});

// Mora normal form against a completed local basis; remainder zero iff the
// polynomial lies in the ideal in the local ring.
NFResult mora_normal_form(const Poly& p, const StandardBasis& sb, const Caps& caps = {},
                          bool track = false);

// Membership with certificate against the basis' original generators.
// Requires a tracked completed basis; nullopt when not a member.
std::optional<MembershipCertificate> membership(const Poly& target, const StandardBasis& sb,
                                                const Caps& caps = {});

// Number of standard monomials of a completed local basis; nullopt = infinite.
std::optional<std::uint64_t> local_multiplicity(const std::vector<Poly>& gens,
                                                const Caps& caps = {});

// Independent oracle: dimension of O/(I + m^D) stabilized over increasing D,
// computed by exact rational row reduction of the Macaulay matrix.
struct MacaulayResult {
    bool stabilized = false;
    std::uint64_t value = 0;   // valid when stabilized
    unsigned degree = 0;       // truncation degree reached
};

MacaulayResult macaulay_multiplicity(const std::vector<Poly>& gens, unsigned degree_cap,
                                     const Caps& caps = {});

// Multiplicity after adjoining d random linear forms; min over `trials`
// independent draws.  `stable` is false when the draws disagreed.
struct MultValue {
    std::optional<std::uint64_t> value;  // nullopt = infinite
    bool stable = true;
};

MultValue d_multiplicity(const std::vector<Poly>& gens, unsigned d, RandomSource& rng,
                         unsigned trials, const Caps& caps = {});

// The (n-k)-multiplicity convention for a k-tuple in n variables.
MultValue tuple_multiplicity(const std::vector<Poly>& fs, RandomSource& rng,
                             const Caps& caps = {});

// Convenience: tuple multiplicity that must be finite, else domain_error.
std::uint64_t finite_tuple_multiplicity(const std::vector<Poly>& fs, RandomSource& rng,
                                        const Caps& caps = {});

// Generators of the ideal intersected with the subring of the variables
// with index >= keep_from, via a Buchberger basis under the block
// elimination order.  Outputs remain in the full ring.
std::vector<Poly> elimination_ideal(const std::vector<Poly>& gens, unsigned keep_from,
                                    const Caps& caps = {});

// Bounded-exponent radical membership: smallest r <= cap with g^r in the
// local ideal, plus a certificate.  The default cap is nvars * mu.
struct RadicalResult {
    bool member = false;
    unsigned r = 0;
    unsigned cap = 0;
    MembershipCertificate cert;
};

RadicalResult radical_membership_power(const Poly& g, const std::vector<Poly>& gens,
                                       std::uint64_t mu, const Caps& caps = {});
RadicalResult radical_membership_capped(const Poly& g, const StandardBasis& sb, unsigned cap,
                                        const Caps& caps = {});

// Generic-combination selection with certified joint multiplicity
//     mult(f, G_1..G_count) <= mult(f) * mult(F)^count.
// Attempts run from identity-like selections to dense random draws.
struct SiuResult {
    std::vector<Poly> combos;
    std::vector<std::vector<Rat>> coefficients;  // combos[i] = sum_j c[i][j] F[j]
    std::uint64_t certified = 0;                 // mult(f, combos)
    Int bound;                                   // mu * nu^count
    unsigned attempts = 0;
};

SiuResult siu_select(const std::vector<Poly>& f, const std::vector<Poly>& F, unsigned count,
                     RandomSource& rng, const Caps& caps = {});

// Nested generator lists I_1 <= ... <= I_k; each stage extends the previous
// by appended generators.
struct Filtration {
    std::vector<std::vector<Poly>> stages;

    void validate() const;
};

}  // namespace kohn
