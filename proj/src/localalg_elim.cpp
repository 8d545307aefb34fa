#include "kohn/errors.hpp"
#include "kohn/localalg.hpp"

namespace kohn {

std::vector<Poly> elimination_ideal(const std::vector<Poly>& gens, unsigned keep_from,
                                    const Caps& caps) {
    if (gens.empty()) throw domain_error("elimination_ideal: empty generator list");
    const unsigned n = gens[0].nvars();
    if (keep_from > n) throw domain_error("elimination_ideal: bad split index");
    if (keep_from == 0) return gens;

    StandardBasis sb = complete_basis(gens, MonomialOrder::block_elim(keep_from), caps, false);
    std::vector<Poly> out;
    for (const auto& b : sb.basis)
        if (b.uses_only_vars_from(keep_from)) out.push_back(b);
    return out;
}

}  // namespace kohn
