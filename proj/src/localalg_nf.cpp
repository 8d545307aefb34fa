#include <algorithm>

#include "kohn/errors.hpp"
#include "kohn/localalg.hpp"

namespace kohn {

namespace {

// Terms sorted descending under the active order.
struct OP {
    std::vector<Term> t;

    bool empty() const { return t.empty(); }
    const Term& lead() const { return t.front(); }
    unsigned max_deg() const {
        unsigned d = 0;
        for (const auto& x : t) d = std::max(d, total_degree(x.exp));
        return d;
    }
    unsigned ecart() const { return max_deg() - total_degree(t.front().exp); }
};

OP to_op(const Poly& p, const MonomialOrder& ord) {
    OP o;
    o.t = p.terms();
    std::sort(o.t.begin(), o.t.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.exp, b.exp) > 0; });
    return o;
}

Poly to_poly(const OP& o, unsigned nvars) {
    return Poly(nvars, o.t);
}

// h -= c * x^e * g, both sorted under ord.
OP axpy(const OP& h, const Rat& c, const Exponents& e, const OP& g, const MonomialOrder& ord) {
    OP r;
    r.t.reserve(h.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    while (i < h.t.size() || j < g.t.size()) {
        int cmp;
        Exponents ge;
        if (j < g.t.size()) ge = exp_mul(g.t[j].exp, e);
        if (i >= h.t.size()) cmp = -1;
        else if (j >= g.t.size()) cmp = 1;
        else cmp = ord.cmp(h.t[i].exp, ge);
        if (cmp > 0) {
            r.t.push_back(h.t[i++]);
        } else if (cmp < 0) {
            r.t.push_back({std::move(ge), -c * g.t[j].coef});
            ++j;
        } else {
            Rat coef = h.t[i].coef - c * g.t[j].coef;
            if (sgn(coef) != 0) r.t.push_back({h.t[i].exp, std::move(coef)});
            ++i;
            ++j;
        }
    }
    return r;
}

struct Tracked {
    Poly U;                   // coefficient on the dividend p
    std::vector<Poly> A;      // coefficients on the basis elements
};

}  // namespace

// Weak normal form.  For global orders this is ordinary multivariate
// division with tail reduction; for local orders it is Mora's algorithm
// with the ecart strategy, which may reduce against earlier partial
// remainders and thereby accumulates a unit in front of p.
NFResult normal_form(const Poly& p, const std::vector<Poly>& basis, const MonomialOrder& ord,
                     const Caps& caps, bool track) {
    const unsigned n = p.nvars();
    NFResult res;
    res.unit = Poly::constant(n, make_rat(1));
    if (track) res.cofactors.assign(basis.size(), Poly(n));
    if (p.is_zero()) {
        res.remainder = p;
        return res;
    }

    struct Reducer {
        OP poly;
        unsigned ecart;
        bool original;
        std::size_t index;   // basis index when original
        Tracked trk;         // expression as U*p + sum A_j basis_j (stored reducers)
    };

    std::vector<Reducer> red;
    red.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) continue;
        OP o = to_op(basis[i], ord);
        unsigned ec = o.ecart();
        red.push_back({std::move(o), ec, true, i, {}});
    }

    const bool local = ord.is_local();
    OP h = to_op(p, ord);
    Tracked cur;
    if (track) {
        cur.U = Poly::constant(n, make_rat(1));
        cur.A.assign(basis.size(), Poly(n));
    }

    OP tail;  // reduced tail for global orders
    Exponents unit_exp(n, 0);
    std::uint64_t steps = 0;

    while (!h.empty()) {
        if (++steps > caps.pair_cap)
            throw resource_error("normal form exceeded the reduction step cap");
        if (total_degree(h.lead().exp) > caps.degree_cap || h.max_deg() > caps.degree_cap)
            throw resource_error("normal form exceeded the degree cap");

        // divisors of LM(h)
        std::size_t pick = red.size();
        unsigned pick_ecart = 0;
        for (std::size_t i = 0; i < red.size(); ++i) {
            if (!divides(red[i].poly.lead().exp, h.lead().exp)) continue;
            if (pick == red.size() || red[i].ecart < pick_ecart) {
                pick = i;
                pick_ecart = red[i].ecart;
            }
        }

        if (pick == red.size()) {
            if (!local) {
                // move the leading term to the finished tail and continue
                tail.t.push_back(h.lead());
                h.t.erase(h.t.begin());
                continue;
            }
            // local weak NF stops at the first irreducible leading term
            break;
        }

        const Reducer& t = red[pick];
        unsigned h_ecart = h.max_deg() - total_degree(h.lead().exp);
        if (local && t.ecart > h_ecart) {
            // store the current partial remainder as a new reducer
            Reducer stored{h, h_ecart, false, 0, {}};
            if (track) stored.trk = cur;
            red.push_back(std::move(stored));
        }

        Rat c = h.lead().coef / t.poly.lead().coef;
        Exponents e = exp_div(h.lead().exp, t.poly.lead().exp);
        OP h2 = axpy(h, c, e, t.poly, ord);
        if (track) {
            if (t.original) {
                cur.A[t.index] += Poly::monomial(n, e, c);
            } else {
                Poly m = Poly::monomial(n, e, c);
                cur.U -= m * t.trk.U;
                for (std::size_t j = 0; j < cur.A.size(); ++j)
                    if (!t.trk.A[j].is_zero()) cur.A[j] -= m * t.trk.A[j];
            }
        }
        h = std::move(h2);
    }

    if (!local) {
        for (auto& term : h.t) tail.t.push_back(std::move(term));
        res.remainder = to_poly(tail, n);
    } else {
        res.remainder = to_poly(h, n);
    }

    if (track) {
        res.unit = cur.U;
        res.cofactors = std::move(cur.A);
        if (local && sgn(res.unit.constant_term()) == 0)
            throw verification_error("Mora unit lost its constant term");
    }
    return res;
}

bool certificate_verifies(const MembershipCertificate& cert) {
    if (sgn(cert.unit.constant_term()) == 0) return false;
    if (cert.cofactors.size() != cert.generators.size()) return false;
    Poly lhs = cert.unit * cert.target;
    for (std::size_t i = 0; i < cert.generators.size(); ++i)
        lhs -= cert.cofactors[i] * cert.generators[i];
    return lhs.is_zero();
}

}  // namespace kohn
