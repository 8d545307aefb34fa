#include <algorithm>
#include <map>

#include "kohn/errors.hpp"
#include "kohn/localalg.hpp"

namespace kohn {

namespace {

Exponents lead_exp_local(const Poly& p) {
    const MonomialOrder ord = MonomialOrder::local_ds();
    const auto& ts = p.terms();
    std::size_t best = 0;
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (ord.cmp(ts[i].exp, ts[best].exp) > 0) best = i;
    return ts[best].exp;
}

}  // namespace

std::optional<std::uint64_t> local_multiplicity(const std::vector<Poly>& gens, const Caps& caps) {
    StandardBasis sb = complete_basis(gens, MonomialOrder::local_ds(), caps, false);
    const unsigned n = gens[0].nvars();

    // minimal generators of the leading ideal
    std::vector<Exponents> lead;
    for (const auto& b : sb.basis) lead.push_back(lead_exp_local(b));
    std::vector<Exponents> min_lead;
    for (std::size_t i = 0; i < lead.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < lead.size(); ++j)
            if (i != j && divides(lead[j], lead[i]) && !(lead[i] == lead[j] && j > i)) {
                dominated = true;
                break;
            }
        if (!dominated) min_lead.push_back(lead[i]);
    }

    // finite iff every axis carries a pure power
    std::vector<std::uint64_t> box(n, 0);
    for (unsigned v = 0; v < n; ++v) {
        std::uint64_t best = 0;
        for (const auto& e : min_lead) {
            bool pure = e[v] > 0;
            for (unsigned u = 0; pure && u < n; ++u)
                if (u != v && e[u]) pure = false;
            if (pure && (best == 0 || e[v] < best)) best = e[v];
        }
        if (best == 0) return std::nullopt;
        box[v] = best;
    }

    std::uint64_t volume = 1;
    for (auto b : box) {
        volume *= b;
        if (volume > 50000000ULL) throw resource_error("staircase volume exceeds the counting cap");
    }

    // count monomials under the staircase
    std::uint64_t count = 0;
    Exponents cur(n, 0);
    std::uint64_t idx = 0;
    for (;;) {
        bool in_ideal = false;
        for (const auto& e : min_lead)
            if (divides(e, cur)) {
                in_ideal = true;
                break;
            }
        if (!in_ideal) ++count;
        unsigned v = 0;
        while (v < n) {
            if (++cur[v] < box[v]) break;
            cur[v] = 0;
            ++v;
        }
        if (v == n) break;
        ++idx;
        if (idx > volume) break;
    }
    return count;
}

MacaulayResult macaulay_multiplicity(const std::vector<Poly>& gens, unsigned degree_cap,
                                     const Caps& caps) {
    if (degree_cap < 1) throw domain_error("macaulay: degree cap must be >= 1");
    if (gens.empty()) throw domain_error("macaulay: empty generator list");
    const unsigned n = gens[0].nvars();
    (void)caps;

    auto value_at = [&](unsigned D) -> std::uint64_t {
        // columns: monomials of total degree < D
        std::vector<Exponents> cols;
        Exponents cur(n, 0);
        for (;;) {
            if (total_degree(cur) < D) cols.push_back(cur);
            unsigned v = 0;
            while (v < n) {
                if (++cur[v] < D) break;
                cur[v] = 0;
                ++v;
            }
            if (v == n) break;
        }
        std::sort(cols.begin(), cols.end(),
                  [](const Exponents& a, const Exponents& b) { return cmp_degrevlex(a, b) < 0; });
        std::map<Exponents, std::size_t> col_index;
        for (std::size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = i;

        // rows: m * g truncated below degree D
        using Row = std::vector<std::pair<std::size_t, Rat>>;  // sorted by column
        std::vector<Row> rows;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            unsigned low = g.low_degree();
            if (low >= D) continue;
            unsigned mdeg_max = D - 1 - low;
            Exponents m(n, 0);
            for (;;) {
                if (total_degree(m) <= mdeg_max) {
                    Row row;
                    for (const auto& t : g.terms()) {
                        Exponents e = exp_mul(t.exp, m);
                        if (total_degree(e) < D) row.push_back({col_index[e], t.coef});
                    }
                    if (!row.empty()) {
                        std::sort(row.begin(), row.end(),
                                  [](const auto& a, const auto& b) { return a.first < b.first; });
                        rows.push_back(std::move(row));
                    }
                }
                unsigned v = 0;
                while (v < n) {
                    if (++m[v] <= mdeg_max) break;
                    m[v] = 0;
                    ++v;
                }
                if (v == n) break;
            }
        }

        // sparse Gaussian elimination; pivots keyed by leading column
        std::map<std::size_t, Row> pivots;
        auto axpy_row = [](const Row& a, const Rat& c, const Row& b) {
            // a - c*b
            Row r;
            r.reserve(a.size() + b.size());
            std::size_t i = 0, j = 0;
            while (i < a.size() || j < b.size()) {
                if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
                    r.push_back(a[i++]);
                } else if (i >= a.size() || b[j].first < a[i].first) {
                    r.push_back({b[j].first, -c * b[j].second});
                    ++j;
                } else {
                    Rat coef = a[i].second - c * b[j].second;
                    if (sgn(coef) != 0) r.push_back({a[i].first, std::move(coef)});
                    ++i;
                    ++j;
                }
            }
            return r;
        };
        std::uint64_t rank = 0;
        for (auto& row : rows) {
            Row cur_row = std::move(row);
            while (!cur_row.empty()) {
                auto it = pivots.find(cur_row.front().first);
                if (it == pivots.end()) break;
                Rat c = cur_row.front().second / it->second.front().second;
                cur_row = axpy_row(cur_row, c, it->second);
            }
            if (!cur_row.empty()) {
                ++rank;
                pivots.emplace(cur_row.front().first, std::move(cur_row));
            }
        }
        return cols.size() - rank;
    };

    MacaulayResult res;
    std::uint64_t prev = value_at(1);
    for (unsigned D = 2; D <= degree_cap; ++D) {
        std::uint64_t v = value_at(D);
        if (v == prev) {
            res.stabilized = true;
            res.value = v;
            res.degree = D;
            return res;
        }
        prev = v;
    }
    res.stabilized = false;
    res.value = prev;
    res.degree = degree_cap;
    return res;
}

MultValue d_multiplicity(const std::vector<Poly>& gens, unsigned d, RandomSource& rng,
                         unsigned trials, const Caps& caps) {
    if (gens.empty()) throw domain_error("d_multiplicity: empty generator list");
    const unsigned n = gens[0].nvars();
    if (d > n) throw domain_error("d_multiplicity: d out of range");

    if (d == 0) {
        auto v = local_multiplicity(gens, caps);
        return {v, true};
    }

    MultValue out;
    bool first = true;
    for (unsigned t = 0; t < std::max(1u, trials); ++t) {
        std::vector<Poly> extended = gens;
        auto forms = random_linear_forms(n, d, rng);
        for (auto& f : forms) extended.push_back(std::move(f));
        auto v = local_multiplicity(extended, caps);
        if (first) {
            out.value = v;
            first = false;
        } else {
            if (v != out.value) out.stable = false;
            // minimum: infinity counts as larger than any finite value
            if (v && (!out.value || *v < *out.value)) out.value = v;
        }
    }
    return out;
}

MultValue tuple_multiplicity(const std::vector<Poly>& fs, RandomSource& rng, const Caps& caps) {
    if (fs.empty()) throw domain_error("tuple_multiplicity: empty tuple");
    const unsigned n = fs[0].nvars();
    unsigned d = fs.size() < n ? n - static_cast<unsigned>(fs.size()) : 0;
    return d_multiplicity(fs, d, rng, caps.mult_trials, caps);
}

std::uint64_t finite_tuple_multiplicity(const std::vector<Poly>& fs, RandomSource& rng,
                                        const Caps& caps) {
    MultValue mv = tuple_multiplicity(fs, rng, caps);
    if (!mv.value) throw domain_error("tuple multiplicity is not finite");
    return *mv.value;
}

}  // namespace kohn
