#include "kohn/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "kohn/errors.hpp"

namespace kohn {

Poly::Poly(unsigned nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (t.exp.size() != nvars_) throw domain_error("term exponent length != nvars");
    normalize();
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return cmp_degrevlex(a.exp, b.exp) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exp == t.exp) {
            out.back().coef += t.coef;
            if (sgn(out.back().coef) == 0) out.pop_back();
        } else if (sgn(t.coef) != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

Poly Poly::constant(unsigned nvars, const Rat& c) {
    Poly p(nvars);
    if (sgn(c) != 0) p.terms_.push_back({Exponents(nvars, 0), c});
    return p;
}

Poly Poly::variable(unsigned nvars, unsigned i) {
    if (i >= nvars) throw domain_error("variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    Poly p(nvars);
    p.terms_.push_back({std::move(e), make_rat(1)});
    return p;
}

Poly Poly::monomial(unsigned nvars, Exponents e, const Rat& c) {
    if (e.size() != nvars) throw domain_error("exponent length != nvars");
    Poly p(nvars);
    if (sgn(c) != 0) p.terms_.push_back({std::move(e), c});
    return p;
}

Rat Poly::constant_term() const {
    if (!terms_.empty() && is_zero_exp(terms_.back().exp)) return terms_.back().coef;
    return Rat(0);
}

unsigned Poly::degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.front().exp);
}

unsigned Poly::low_degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.back().exp);
}

Rat Poly::coefficient(const Exponents& e) const {
    for (const auto& t : terms_)
        if (t.exp == e) return t.coef;
    return Rat(0);
}

Poly add_impl(const Poly& p, const Poly& q, int sign) {
    if (p.nvars_ != q.nvars_) throw domain_error("polynomial dimension mismatch in add");
    Poly r(p.nvars_);
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms_.size() || j < q.terms_.size()) {
        int c;
        if (i >= p.terms_.size()) c = -1;
        else if (j >= q.terms_.size()) c = 1;
        else c = cmp_degrevlex(p.terms_[i].exp, q.terms_[j].exp);
        if (c > 0) {
            r.terms_.push_back(p.terms_[i++]);
        } else if (c < 0) {
            Term t = q.terms_[j++];
            if (sign < 0) t.coef = -t.coef;
            r.terms_.push_back(std::move(t));
        } else {
            Rat coef = sign < 0 ? Rat(p.terms_[i].coef - q.terms_[j].coef)
                                : Rat(p.terms_[i].coef + q.terms_[j].coef);
            if (sgn(coef) != 0) r.terms_.push_back({p.terms_[i].exp, std::move(coef)});
            ++i;
            ++j;
        }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Poly Poly::operator+(const Poly& q) const { return add_impl(*this, q, 1); }
Poly Poly::operator-(const Poly& q) const { return add_impl(*this, q, -1); }

Poly Poly::operator*(const Poly& q) const {
    if (nvars_ != q.nvars_) throw domain_error("polynomial dimension mismatch in mul");
    Poly r(nvars_);
    if (terms_.empty() || q.terms_.empty()) return r;
    std::unordered_map<Exponents, Rat, ExponentsHash> acc;
    acc.reserve(terms_.size() * q.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : q.terms_) {
            Exponents e = exp_mul(a.exp, b.exp);
            auto it = acc.find(e);
            if (it == acc.end()) acc.emplace(std::move(e), a.coef * b.coef);
            else it->second += a.coef * b.coef;
        }
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (sgn(c) != 0) r.terms_.push_back({e, std::move(c)});
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return cmp_degrevlex(a.exp, b.exp) > 0; });
    return r;
}

bool Poly::operator==(const Poly& q) const {
    if (nvars_ != q.nvars_ || terms_.size() != q.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != q.terms_[i].exp || terms_[i].coef != q.terms_[i].coef) return false;
    return true;
}

Poly Poly::scaled(const Rat& c) const {
    if (sgn(c) == 0) return Poly(nvars_);
    Poly r(*this);
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

Poly Poly::mul_term(const Rat& c, const Exponents& e) const {
    if (sgn(c) == 0) return Poly(nvars_);
    Poly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({exp_mul(t.exp, e), t.coef * c});
    // multiplying by a fixed monomial preserves degrevlex ranking
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(nvars_, make_rat(1));
    Poly base(*this);
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool Poly::uses_only_vars_from(unsigned from) const {
    for (const auto& t : terms_)
        for (unsigned i = 0; i < from && i < nvars_; ++i)
            if (t.exp[i]) return false;
    return true;
}

std::size_t Poly::hash() const {
    std::size_t h = nvars_;
    ExponentsHash eh;
    std::hash<std::string> sh;
    for (const auto& t : terms_) {
        h = h * 1000003 + eh(t.exp);
        h = h * 1000003 + sh(t.coef.get_num().get_str()) + sh(t.coef.get_den().get_str());
    }
    return h;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly partial_derivative(const Poly& p, unsigned i) {
    if (i >= p.nvars()) throw domain_error("derivative index out of range");
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        if (t.exp[i] == 0) continue;
        Term d{t.exp, t.coef * make_rat(static_cast<long>(t.exp[i]))};
        d.exp[i] -= 1;
        out.push_back(std::move(d));
    }
    return Poly(p.nvars(), std::move(out));
}

Poly jacobian_det(const std::vector<Poly>& fs, const std::vector<unsigned>& vars) {
    if (fs.size() != vars.size())
        throw domain_error("jacobian: function count != selected variable count");
    const std::size_t d = fs.size();
    if (d == 0) throw domain_error("jacobian of empty system");
    const unsigned n = fs[0].nvars();
    for (const auto& f : fs)
        if (f.nvars() != n) throw domain_error("jacobian: mixed variable counts");
    std::vector<std::vector<Poly>> m(d, std::vector<Poly>());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m[i].push_back(partial_derivative(fs[i], vars[j]));

    // Laplace expansion over column subsets; rows are consumed in order.
    std::vector<std::unordered_map<std::uint64_t, Poly>> memo(d + 1);
    std::uint64_t full = (d >= 64) ? ~0ULL : ((1ULL << d) - 1);
    struct Rec {
        std::vector<std::vector<Poly>>& m;
        std::size_t d;
        std::vector<std::unordered_map<std::uint64_t, Poly>>& memo;
        unsigned n;
        Poly det(std::size_t row, std::uint64_t cols) {
            if (row == d) return Poly::constant(n, make_rat(1));
            auto& level = memo[row];
            auto it = level.find(cols);
            if (it != level.end()) return it->second;
            Poly acc(n);
            int sign = 1;
            for (std::size_t j = 0; j < d; ++j) {
                if (!(cols & (1ULL << j))) continue;
                if (!m[row][j].is_zero()) {
                    Poly sub = det(row + 1, cols & ~(1ULL << j));
                    Poly contrib = m[row][j] * sub;
                    acc = sign > 0 ? acc + contrib : acc - contrib;
                }
                sign = -sign;
            }
            level.emplace(cols, acc);
            return acc;
        }
    } rec{m, d, memo, n};
    return rec.det(0, full);
}

Poly compose(const Poly& p, const std::vector<Poly>& gs) {
    if (p.nvars() != gs.size()) throw domain_error("compose: substitution length mismatch");
    if (gs.empty()) throw domain_error("compose: empty substitution");
    const unsigned n = gs[0].nvars();
    for (const auto& g : gs)
        if (g.nvars() != n) throw domain_error("compose: mixed variable counts");

    // power cache per substituted variable
    std::vector<std::vector<Poly>> pows(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) pows[i].push_back(Poly::constant(n, make_rat(1)));
    auto power = [&](std::size_t i, unsigned e) -> const Poly& {
        auto& v = pows[i];
        while (v.size() <= e) v.push_back(v.back() * gs[i]);
        return v[e];
    };

    Poly acc(n);
    for (const auto& t : p.terms()) {
        Poly term = Poly::constant(n, t.coef);
        for (std::size_t i = 0; i < gs.size(); ++i)
            if (t.exp[i]) term = term * power(i, t.exp[i]);
        acc += term;
    }
    return acc;
}

Poly linear_combination(const std::vector<Poly>& fs, const std::vector<Rat>& coeffs) {
    if (fs.empty()) throw domain_error("linear combination of empty list");
    if (fs.size() != coeffs.size()) throw domain_error("combination length mismatch");
    Poly acc(fs[0].nvars());
    for (std::size_t i = 0; i < fs.size(); ++i) acc += fs[i].scaled(coeffs[i]);
    return acc;
}

std::vector<Poly> random_linear_combinations(const std::vector<Poly>& fs, unsigned count,
                                             RandomSource& rng, long bound) {
    if (fs.empty()) throw domain_error("random combinations of empty list");
    std::vector<Poly> out;
    out.reserve(count);
    for (unsigned c = 0; c < count; ++c) {
        for (;;) {
            std::vector<Rat> coeffs;
            coeffs.reserve(fs.size());
            for (std::size_t i = 0; i < fs.size(); ++i) coeffs.push_back(rng.coefficient(bound));
            Poly p = linear_combination(fs, coeffs);
            if (!p.is_zero()) {
                out.push_back(std::move(p));
                break;
            }
        }
    }
    return out;
}

std::optional<unsigned> ord_in_variable(const Poly& p, unsigned i) {
    if (i >= p.nvars()) throw domain_error("ord_in_variable: index out of range");
    std::optional<unsigned> best;
    for (const auto& t : p.terms()) {
        bool pure = true;
        for (unsigned j = 0; j < p.nvars(); ++j)
            if (j != i && t.exp[j]) {
                pure = false;
                break;
            }
        if (pure && (!best || t.exp[i] < *best)) best = t.exp[i];
    }
    return best;
}

unsigned degree_in_variable(const Poly& p, unsigned i) {
    unsigned d = 0;
    for (const auto& t : p.terms()) d = std::max(d, t.exp[i]);
    return d;
}

Poly coefficient_in_variable(const Poly& p, unsigned i, unsigned d) {
    std::vector<Term> out;
    for (const auto& t : p.terms())
        if (t.exp[i] == d) {
            Term c = t;
            c.exp[i] = 0;
            out.push_back(std::move(c));
        }
    return Poly(p.nvars(), std::move(out));
}

}  // namespace kohn
