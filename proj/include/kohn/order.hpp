#pragma once

#include <string>

#include "kohn/errors.hpp"
#include "kohn/monomial.hpp"

namespace kohn {

// Monomial orders actually used by the algebra engine:
//   LocalDs  - negative degree reverse lexicographic; 1 > z_i, so leading
//              terms live in lowest degree and Mora division applies.
//   GlobalDp - degree reverse lexicographic (a well-order).
//   Block    - eliminates the first `split` variables: degrevlex on that
//              block first, degrevlex on the rest as tie-break.  With
//              split == 1 it doubles as the "w_j first" order that exposes
//              monic generators.
struct MonomialOrder {
    enum class Kind { LocalDs, GlobalDp, Block };

    Kind kind = Kind::GlobalDp;
    unsigned split = 0;

    static MonomialOrder local_ds() { return {Kind::LocalDs, 0}; }
    static MonomialOrder global_dp() { return {Kind::GlobalDp, 0}; }
    static MonomialOrder block_elim(unsigned split) { return {Kind::Block, split}; }

    bool is_local() const { return kind == Kind::LocalDs; }

    // +1 if a > b under this order.
    int cmp(const Exponents& a, const Exponents& b) const {
        switch (kind) {
            case Kind::GlobalDp:
                return cmp_degrevlex(a, b);
            case Kind::LocalDs: {
                unsigned da = total_degree(a), db = total_degree(b);
                if (da != db) return da < db ? 1 : -1;
                for (std::size_t i = a.size(); i-- > 0;)
                    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
                return 0;
            }
            case Kind::Block: {
                unsigned da = 0, db = 0;
                for (unsigned i = 0; i < split; ++i) {
                    da += a[i];
                    db += b[i];
                }
                if (da != db) return da > db ? 1 : -1;
                for (std::size_t i = split; i-- > 0;)
                    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
                unsigned ta = 0, tb = 0;
                for (std::size_t i = split; i < a.size(); ++i) {
                    ta += a[i];
                    tb += b[i];
                }
                if (ta != tb) return ta > tb ? 1 : -1;
                for (std::size_t i = a.size(); i-- > split;)
                    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
                return 0;
            }
        }
        return 0;
    }

    std::string name() const {
        switch (kind) {
            case Kind::LocalDs: return "local-ds";
            case Kind::GlobalDp: return "global-dp";
            case Kind::Block: return "block-elim:" + std::to_string(split);
        }
        return "?";
    }

    static MonomialOrder from_name(const std::string& s) {
        if (s == "local-ds") return local_ds();
        if (s == "global-dp") return global_dp();
        if (s.rfind("block-elim:", 0) == 0)
            return block_elim(static_cast<unsigned>(std::stoul(s.substr(11))));
        throw domain_error("unknown monomial order: " + s);
    }
};

}  // namespace kohn
