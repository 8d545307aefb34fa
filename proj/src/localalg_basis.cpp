#include <algorithm>
#include <set>
#include <tuple>

#include "kohn/errors.hpp"
#include "kohn/localalg.hpp"

namespace kohn {

namespace {

Exponents lead_exp(const Poly& p, const MonomialOrder& ord) {
    const auto& ts = p.terms();
    std::size_t best = 0;
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (ord.cmp(ts[i].exp, ts[best].exp) > 0) best = i;
    return ts[best].exp;
}

Rat lead_coef(const Poly& p, const MonomialOrder& ord) {
    const auto& ts = p.terms();
    std::size_t best = 0;
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (ord.cmp(ts[i].exp, ts[best].exp) > 0) best = i;
    return ts[best].coef;
}

struct PairKey {
    unsigned lcm_deg;
    Exponents lcm;
    std::size_t i, j;
};

struct PairCmp {
    const MonomialOrder* ord;
    bool operator()(const PairKey& a, const PairKey& b) const {
        if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
        int c = ord->cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }
};

// Buchberger/Mora completion.  `done_prefix` marks how many leading
// elements already form a completed basis among themselves, so extending
// an existing basis only schedules the new pairs.
void complete_worker(StandardBasis& sb, std::size_t done_prefix, const Caps& caps) {
    const MonomialOrder& ord = sb.order;
    const unsigned n = sb.generators.empty() ? 0 : sb.generators[0].nvars();

    std::vector<Exponents> lm;
    lm.reserve(sb.basis.size());
    for (const auto& b : sb.basis) lm.push_back(lead_exp(b, ord));

    PairCmp cmp{&ord};
    std::set<PairKey, PairCmp> queue(cmp);
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Exponents l = exp_lcm(lm[i], lm[j]);
        // product criterion: coprime leading monomials reduce to zero
        if (l == exp_mul(lm[i], lm[j])) return;
        queue.insert({total_degree(l), std::move(l), i, j});
    };
    for (std::size_t j = done_prefix; j < sb.basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    std::uint64_t processed = 0;
    while (!queue.empty()) {
        if (++processed > caps.pair_cap)
            throw resource_error("basis completion exceeded the pair cap");
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());

        Exponents mi = exp_div(pk.lcm, lm[pk.i]);
        Exponents mj = exp_div(pk.lcm, lm[pk.j]);
        Poly s = sb.basis[pk.i].mul_term(make_rat(1), mi) - sb.basis[pk.j].mul_term(make_rat(1), mj);
        if (s.is_zero()) continue;

        NFResult nf = normal_form(s, sb.basis, ord, caps, sb.tracked);
        if (nf.remainder.is_zero()) continue;
        if (nf.remainder.degree() > caps.degree_cap)
            throw resource_error("basis completion exceeded the degree cap");

        Rat lc = lead_coef(nf.remainder, ord);
        Poly fresh = nf.remainder.scaled(1 / lc);
        std::vector<Poly> row;
        if (sb.tracked) {
            // remainder = unit*s - sum cof*basis; fold to the original generators
            row.assign(sb.generators.size(), Poly(n));
            auto add_scaled_row = [&](const std::vector<Poly>& r, const Poly& factor, int sign) {
                for (std::size_t g = 0; g < row.size(); ++g) {
                    if (r[g].is_zero()) continue;
                    Poly contrib = factor * r[g];
                    row[g] = sign > 0 ? row[g] + contrib : row[g] - contrib;
                }
            };
            Poly ui = nf.unit.mul_term(make_rat(1), mi);
            Poly uj = nf.unit.mul_term(make_rat(1), mj);
            add_scaled_row(sb.rows[pk.i], ui, 1);
            add_scaled_row(sb.rows[pk.j], uj, -1);
            for (std::size_t t = 0; t < sb.basis.size(); ++t)
                if (!nf.cofactors[t].is_zero()) add_scaled_row(sb.rows[t], nf.cofactors[t], -1);
            for (auto& r : row) r = r.scaled(1 / lc);
        }

        std::size_t idx = sb.basis.size();
        sb.basis.push_back(std::move(fresh));
        if (sb.tracked) sb.rows.push_back(std::move(row));
        lm.push_back(lead_exp(sb.basis[idx], ord));
        for (std::size_t i = 0; i < idx; ++i) push_pair(i, idx);
    }
    sb.completed = true;
}

}  // namespace

StandardBasis complete_basis(const std::vector<Poly>& gens, const MonomialOrder& ord,
                             const Caps& caps, bool track) {
    if (gens.empty()) throw domain_error("complete_basis: empty generator list");
    const unsigned n = gens[0].nvars();
    for (const auto& g : gens)
        if (g.nvars() != n) throw domain_error("complete_basis: mixed variable counts");

    StandardBasis sb;
    sb.generators = gens;
    sb.order = ord;
    sb.tracked = track;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        Rat lc = lead_coef(gens[i], ord);
        sb.basis.push_back(gens[i].scaled(1 / lc));
        if (track) {
            std::vector<Poly> row(gens.size(), Poly(n));
            row[i] = Poly::constant(n, 1 / lc);
            sb.rows.push_back(std::move(row));
        }
    }
    if (sb.basis.empty()) throw domain_error("complete_basis: all generators are zero");
    complete_worker(sb, 0, caps);
    return sb;
}

StandardBasis extend_basis(const StandardBasis& base, const Poly& extra, const Caps& caps) {
    if (!base.completed) throw domain_error("extend_basis: base not completed");
    if (extra.is_zero()) return base;
    const unsigned n = extra.nvars();

    StandardBasis sb;
    sb.generators = base.generators;
    sb.generators.push_back(extra);
    sb.order = base.order;
    sb.tracked = base.tracked;
    sb.basis = base.basis;
    if (sb.tracked) {
        sb.rows.reserve(base.rows.size() + 1);
        for (const auto& r : base.rows) {
            auto row = r;
            row.push_back(Poly(n));
            sb.rows.push_back(std::move(row));
        }
    }
    std::size_t prefix = sb.basis.size();
    Rat lc = lead_coef(extra, sb.order);
    sb.basis.push_back(extra.scaled(1 / lc));
    if (sb.tracked) {
        std::vector<Poly> row(sb.generators.size(), Poly(n));
        row.back() = Poly::constant(n, 1 / lc);
        sb.rows.push_back(std::move(row));
    }
    complete_worker(sb, prefix, caps);
    return sb;
}

NFResult mora_normal_form(const Poly& p, const StandardBasis& sb, const Caps& caps, bool track) {
    if (!sb.completed) throw domain_error("mora_normal_form: basis not completed");
    return normal_form(p, sb.basis, sb.order, caps, track);
}

std::optional<MembershipCertificate> membership(const Poly& target, const StandardBasis& sb,
                                                const Caps& caps) {
    if (!sb.completed || !sb.tracked)
        throw domain_error("membership requires a tracked completed basis");
    NFResult nf = normal_form(target, sb.basis, sb.order, caps, true);
    if (!nf.remainder.is_zero()) return std::nullopt;

    const unsigned n = target.nvars();
    MembershipCertificate cert;
    cert.unit = nf.unit;
    cert.target = target;
    cert.generators = sb.generators;
    cert.cofactors.assign(sb.generators.size(), Poly(n));
    for (std::size_t i = 0; i < sb.basis.size(); ++i) {
        if (nf.cofactors[i].is_zero()) continue;
        for (std::size_t j = 0; j < sb.generators.size(); ++j)
            if (!sb.rows[i][j].is_zero()) cert.cofactors[j] += nf.cofactors[i] * sb.rows[i][j];
    }
    return cert;
}

void Filtration::validate() const {
    for (std::size_t s = 1; s < stages.size(); ++s) {
        if (stages[s].size() < stages[s - 1].size())
            throw domain_error("filtration stages must be nested");
        for (std::size_t i = 0; i < stages[s - 1].size(); ++i)
            if (!(stages[s][i] == stages[s - 1][i]))
                throw domain_error("filtration stage must extend the previous one as a prefix");
    }
}

}  // namespace kohn
