#include "kohn/errors.hpp"
#include "kohn/localalg.hpp"

namespace kohn {

RadicalResult radical_membership_capped(const Poly& g, const StandardBasis& sb, unsigned cap,
                                        const Caps& caps) {
    if (!sb.completed || !sb.tracked)
        throw domain_error("radical membership requires a tracked completed basis");
    RadicalResult res;
    res.cap = cap;
    Poly power = Poly::constant(g.nvars(), make_rat(1));
    for (unsigned r = 1; r <= cap; ++r) {
        power = power * g;
        NFResult nf = normal_form(power, sb.basis, sb.order, caps, false);
        if (nf.remainder.is_zero()) {
            auto cert = membership(power, sb, caps);
            if (!cert) throw verification_error("membership vanished on re-run");
            res.member = true;
            res.r = r;
            res.cert = std::move(*cert);
            return res;
        }
    }
    res.member = false;
    return res;
}

RadicalResult radical_membership_power(const Poly& g, const std::vector<Poly>& gens,
                                       std::uint64_t mu, const Caps& caps) {
    const unsigned n = g.nvars();
    std::uint64_t cap64 = static_cast<std::uint64_t>(n) * mu;
    if (cap64 == 0 || cap64 > 1000000)
        throw resource_error("radical membership exponent cap out of range");
    StandardBasis sb = complete_basis(gens, MonomialOrder::local_ds(), caps, true);
    return radical_membership_capped(g, sb, static_cast<unsigned>(cap64), caps);
}

}  // namespace kohn
