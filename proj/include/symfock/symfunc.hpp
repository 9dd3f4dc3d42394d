#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symfock/partition.hpp"
#include "symfock/rational.hpp"

namespace symfock {

enum class BasisTag { schur, elementary, complete, power };

inline char basis_symbol(BasisTag b) {
    switch (b) {
        case BasisTag::schur: return 's';
        case BasisTag::elementary: return 'e';
        case BasisTag::complete: return 'h';
        case BasisTag::power: return 'p';
    }
    throw std::logic_error("bad basis tag");
}

inline BasisTag basis_from_symbol(char c) {
    switch (c) {
        case 's': return BasisTag::schur;
        case 'e': return BasisTag::elementary;
        case 'h': return BasisTag::complete;
        case 'p': return BasisTag::power;
    }
    throw std::invalid_argument(std::string("unknown basis symbol '") + c + "'");
}

/// Exact sparse element of the ring of symmetric functions, tagged with the
/// basis its index partitions refer to. Zero coefficients are never stored.
class SymElt {
public:
    SymElt() = default;
    explicit SymElt(BasisTag b) : basis_(b) {}

    static SymElt zero(BasisTag b = BasisTag::schur) { return SymElt(b); }

    static SymElt unit(BasisTag b = BasisTag::schur) { return single(b, Partition(), 1); }

    static SymElt single(BasisTag b, Partition lambda, Rational c = 1) {
        SymElt x(b);
        x.add_term(std::move(lambda), std::move(c));
        return x;
    }

    // one-part generators
    static SymElt schur_fn(Partition lambda) { return single(BasisTag::schur, std::move(lambda)); }
    static SymElt elementary_fn(int r) { return single(BasisTag::elementary, row(r)); }
    static SymElt complete_fn(int r) { return single(BasisTag::complete, row(r)); }
    static SymElt power_fn(int r) { return single(BasisTag::power, row(r)); }

    BasisTag basis() const { return basis_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(Partition lambda, Rational c) {
        if (c == 0) return;
        auto it = terms_.find(lambda);
        if (it == terms_.end()) {
            terms_.emplace(std::move(lambda), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    long max_degree() const { // degree of a term = size of its index partition
        long d = 0;
        for (auto& [lambda, c] : terms_) d = std::max(d, lambda.size());
        return d;
    }

    bool all_integer() const {
        for (auto& [lambda, c] : terms_)
            if (!is_integer(c)) return false;
        return true;
    }

    SymElt& operator+=(const SymElt& o) {
        require_same_basis(o);
        for (auto& [lambda, c] : o.terms_) add_term(lambda, c);
        return *this;
    }
    SymElt& operator-=(const SymElt& o) {
        require_same_basis(o);
        for (auto& [lambda, c] : o.terms_) add_term(lambda, -c);
        return *this;
    }
    SymElt& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [lambda, v] : terms_) v *= c;
        return *this;
    }

    friend SymElt operator+(SymElt a, const SymElt& b) { return a += b; }
    friend SymElt operator-(SymElt a, const SymElt& b) { return a -= b; }
    friend SymElt operator*(const Rational& c, SymElt x) { return x *= c; }

    /// Structural equality; zero equals zero regardless of basis tag.
    bool operator==(const SymElt& o) const {
        if (terms_.empty() && o.terms_.empty()) return true;
        return basis_ == o.basis_ && terms_ == o.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        char sym = basis_symbol(basis_);
        bool first = true;
        for (auto& [lambda, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            if (a != 1) out += rational_string(a) + "*";
            out += sym + lambda.to_string();
            first = false;
        }
        return out;
    }

private:
    static Partition row(int r) {
        if (r < 1) throw std::invalid_argument("generator subscript must be >= 1");
        return Partition(std::vector<int>{r});
    }
    void require_same_basis(const SymElt& o) {
        if (terms_.empty()) basis_ = o.basis_; // adopting a basis costs nothing for zero
        else if (!o.terms_.empty() && basis_ != o.basis_)
            throw std::invalid_argument("mixed-basis arithmetic; convert first");
    }

    BasisTag basis_ = BasisTag::schur;
    std::map<Partition, Rational> terms_;
};

/// z_lambda = prod_i i^{m_i} m_i! over part multiplicities.
inline Integer z_value(const Partition& lambda) {
    Integer z = 1;
    int run = 0;
    const auto& parts = lambda.parts();
    for (std::size_t k = 0; k < parts.size(); ++k) {
        ++run;
        z *= parts[k] * run; // accumulates i^{m_i} * m_i! one factor at a time
        if (k + 1 == parts.size() || parts[k + 1] != parts[k]) run = 0;
    }
    return z;
}

// ---------------------------------------------------------------------------
// Single-generator actions on Schur expansions.

namespace detail {

inline void require_schur(const SymElt& x, const char* who) {
    if (!x.is_zero() && x.basis() != BasisTag::schur)
        throw std::invalid_argument(std::string(who) + " expects a Schur-basis element");
}

inline const std::vector<RimHookRemoval>& cached_hook_removals(const Partition& lambda, int r) {
    static std::map<std::pair<std::vector<int>, int>, std::vector<RimHookRemoval>> cache;
    static std::mutex m;
    std::pair<std::vector<int>, int> key{lambda.parts(), r};
    {
        std::lock_guard lk(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto val = rim_hook_removals(lambda, r);
    std::lock_guard lk(m);
    return cache.emplace(std::move(key), std::move(val)).first->second;
}

inline const std::vector<RimHookAddition>& cached_hook_additions(const Partition& lambda, int r) {
    static std::map<std::pair<std::vector<int>, int>, std::vector<RimHookAddition>> cache;
    static std::mutex m;
    std::pair<std::vector<int>, int> key{lambda.parts(), r};
    {
        std::lock_guard lk(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto val = rim_hook_additions(lambda, r);
    std::lock_guard lk(m);
    return cache.emplace(std::move(key), std::move(val)).first->second;
}

} // namespace detail

/// Multiplication by h_r on a Schur expansion (adds horizontal strips).
inline SymElt mul_h(int r, const SymElt& x) {
    detail::require_schur(x, "mul_h");
    SymElt out(BasisTag::schur);
    for (auto& [lambda, c] : x.terms())
        for (auto& mu : horizontal_strip_additions(lambda, r)) out.add_term(mu, c);
    return out;
}

/// Multiplication by e_r (adds vertical strips).
inline SymElt mul_e(int r, const SymElt& x) {
    detail::require_schur(x, "mul_e");
    SymElt out(BasisTag::schur);
    for (auto& [lambda, c] : x.terms())
        for (auto& mu : vertical_strip_additions(lambda, r)) out.add_term(mu, c);
    return out;
}

/// Multiplication by p_r: glue r-rim hooks, sign (-1)^height.
inline SymElt mul_p(int r, const SymElt& x) {
    detail::require_schur(x, "mul_p");
    SymElt out(BasisTag::schur);
    for (auto& [lambda, c] : x.terms())
        for (auto& add : detail::cached_hook_additions(lambda, r))
            out.add_term(add.result, add.height % 2 ? -c : c);
    return out;
}

/// Adjoint of h_r: strip horizontal strips.
inline SymElt skew_h(int r, const SymElt& x) {
    detail::require_schur(x, "skew_h");
    SymElt out(BasisTag::schur);
    for (auto& [lambda, c] : x.terms())
        for (auto& mu : horizontal_strip_removals(lambda, r)) out.add_term(mu, c);
    return out;
}

inline SymElt skew_e(int r, const SymElt& x) {
    detail::require_schur(x, "skew_e");
    SymElt out(BasisTag::schur);
    for (auto& [lambda, c] : x.terms())
        for (auto& mu : vertical_strip_removals(lambda, r)) out.add_term(mu, c);
    return out;
}

inline SymElt skew_p(int r, const SymElt& x) {
    detail::require_schur(x, "skew_p");
    SymElt out(BasisTag::schur);
    for (auto& [lambda, c] : x.terms())
        for (auto& rem : detail::cached_hook_removals(lambda, r))
            out.add_term(rem.result, rem.height % 2 ? -c : c);
    return out;
}

// ---------------------------------------------------------------------------
// Characters and basis conversions.

/// Symmetric group character chi^lambda at cycle type mu, by recursive
/// Murnaghan-Nakayama on the largest cycle.
inline long long mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character requires |lambda| == |mu|");
    if (lambda.empty()) return 1;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> cache;
    static std::mutex m;
    std::pair<std::vector<int>, std::vector<int>> key{lambda.parts(), mu.parts()};
    {
        std::lock_guard lk(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    int r = mu.parts().front();
    Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
    long long total = 0;
    for (auto& rem : detail::cached_hook_removals(lambda, r)) {
        long long term = mn_character(rem.result, rest);
        total += rem.height % 2 ? -term : term;
    }
    std::lock_guard lk(m);
    cache.emplace(std::move(key), total);
    return total;
}

namespace detail {

// Jacobi-Trudi determinant det(g_{lambda_i - i + j}) expanded over
// permutations, pruning vanishing subscripts. Returns signed multiplicities
// of generator monomials (as partitions of the subscripts).
inline std::map<Partition, long long> jt_expand(const Partition& lambda) {
    int ell = lambda.length();
    std::map<Partition, long long> out;
    std::vector<bool> used(ell, false);
    std::vector<int> subs;
    auto rec = [&](auto&& self, int row, int sign) -> void {
        if (row == ell) {
            std::vector<int> sorted = subs;
            std::sort(sorted.rbegin(), sorted.rend());
            out[Partition(std::move(sorted))] += sign;
            return;
        }
        for (int col = 0; col < ell; ++col) {
            if (used[col]) continue;
            int sub = lambda.part(row + 1) - (row + 1) + (col + 1);
            if (sub < 0) continue;
            int flips = 0;
            for (int c = col + 1; c < ell; ++c)
                if (used[c]) ++flips;
            used[col] = true;
            if (sub > 0) subs.push_back(sub);
            self(self, row + 1, flips % 2 ? -sign : sign);
            if (sub > 0) subs.pop_back();
            used[col] = false;
        }
    };
    if (ell == 0)
        out[Partition()] = 1;
    else
        rec(rec, 0, 1);
    return out;
}

inline const std::map<Partition, long long>& jt_complete_expansion(const Partition& lambda) {
    static std::map<std::vector<int>, std::map<Partition, long long>> cache;
    static std::mutex m;
    {
        std::lock_guard lk(m);
        auto it = cache.find(lambda.parts());
        if (it != cache.end()) return it->second;
    }
    auto val = jt_expand(lambda);
    std::lock_guard lk(m);
    return cache.emplace(lambda.parts(), std::move(val)).first->second;
}

inline const std::map<Partition, long long>& jt_elementary_expansion(const Partition& lambda) {
    static std::map<std::vector<int>, std::map<Partition, long long>> cache;
    static std::mutex m;
    {
        std::lock_guard lk(m);
        auto it = cache.find(lambda.parts());
        if (it != cache.end()) return it->second;
    }
    auto val = jt_expand(lambda.conjugate()); // dual determinant
    std::lock_guard lk(m);
    return cache.emplace(lambda.parts(), std::move(val)).first->second;
}

/// s_lambda = sum_mu (chi^lambda_mu / z_mu) p_mu.
inline const std::map<Partition, Rational>& schur_power_expansion(const Partition& lambda) {
    static std::map<std::vector<int>, std::map<Partition, Rational>> cache;
    static std::mutex m;
    {
        std::lock_guard lk(m);
        auto it = cache.find(lambda.parts());
        if (it != cache.end()) return it->second;
    }
    std::map<Partition, Rational> val;
    for (auto& mu : partitions_of(static_cast<int>(lambda.size()))) {
        long long chi = mn_character(lambda, mu);
        if (chi != 0) val[mu] = Rational(Integer(chi), z_value(mu));
    }
    std::lock_guard lk(m);
    return cache.emplace(lambda.parts(), std::move(val)).first->second;
}

/// Expansion of a generator monomial (e/h/p to the parts of nu) in Schur basis.
inline const SymElt& monomial_schur_expansion(char gen, const Partition& nu) {
    static std::map<std::pair<char, std::vector<int>>, SymElt> cache;
    static std::mutex m;
    std::pair<char, std::vector<int>> key{gen, nu.parts()};
    {
        std::lock_guard lk(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SymElt val = SymElt::unit(BasisTag::schur);
    for (auto it = nu.parts().rbegin(); it != nu.parts().rend(); ++it) {
        switch (gen) {
            case 'e': val = mul_e(*it, val); break;
            case 'h': val = mul_h(*it, val); break;
            case 'p': val = mul_p(*it, val); break;
            default: throw std::logic_error("bad generator");
        }
    }
    std::lock_guard lk(m);
    return cache.emplace(std::move(key), std::move(val)).first->second;
}

} // namespace detail

/// Rewrites x in the Schur basis. Exact and linear.
inline SymElt to_schur(const SymElt& x) {
    if (x.basis() == BasisTag::schur) return x;
    char gen = basis_symbol(x.basis());
    SymElt out(BasisTag::schur);
    for (auto& [nu, c] : x.terms()) {
        const SymElt& exp = detail::monomial_schur_expansion(gen, nu);
        for (auto& [lambda, a] : exp.terms()) out.add_term(lambda, c * a);
    }
    return out;
}

/// Rewrites a Schur-basis element in the target basis. Inverse of to_schur.
inline SymElt from_schur(const SymElt& x, BasisTag target) {
    detail::require_schur(x, "from_schur");
    if (target == BasisTag::schur) {
        SymElt out(BasisTag::schur);
        for (auto& [lambda, c] : x.terms()) out.add_term(lambda, c);
        return out;
    }
    SymElt out(target);
    for (auto& [lambda, c] : x.terms()) {
        if (target == BasisTag::power) {
            for (auto& [mu, a] : detail::schur_power_expansion(lambda)) out.add_term(mu, c * a);
        } else {
            const auto& jt = target == BasisTag::complete ? detail::jt_complete_expansion(lambda)
                                                          : detail::jt_elementary_expansion(lambda);
            for (auto& [nu, a] : jt) out.add_term(nu, c * a);
        }
    }
    return out;
}

inline SymElt convert(const SymElt& x, BasisTag target) { return from_schur(to_schur(x), target); }

// ---------------------------------------------------------------------------
// Ring structure.

namespace detail {

/// s_lambda * s_mu, memoized. One factor is rewritten as a signed sum of
/// h-monomials (Jacobi-Trudi) and applied to the other by iterated Pieri.
inline const SymElt& schur_product(const Partition& lambda, const Partition& mu) {
    auto cheaper = [](const Partition& a, const Partition& b) {
        return std::tuple(a.length(), a.size(), a.parts()) < std::tuple(b.length(), b.size(), b.parts());
    };
    const Partition& expand = cheaper(mu, lambda) ? mu : lambda;
    const Partition& keep = cheaper(mu, lambda) ? lambda : mu;

    static std::map<std::pair<std::vector<int>, std::vector<int>>, SymElt> cache;
    static std::mutex m;
    std::pair<std::vector<int>, std::vector<int>> key{keep.parts(), expand.parts()};
    {
        std::lock_guard lk(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SymElt val(BasisTag::schur);
    for (auto& [nu, sign] : jt_complete_expansion(expand)) {
        SymElt cur = SymElt::schur_fn(keep);
        for (int r : nu.parts()) cur = mul_h(r, cur);
        val += Rational(sign) * cur;
    }
    std::lock_guard lk(m);
    return cache.emplace(std::move(key), std::move(val)).first->second;
}

} // namespace detail

/// Product in the ring of symmetric functions, returned in the Schur basis.
inline SymElt mul(const SymElt& a, const SymElt& b) {
    SymElt as = to_schur(a), bs = to_schur(b);
    SymElt out(BasisTag::schur);
    for (auto& [lambda, ca] : as.terms())
        for (auto& [mu, cb] : bs.terms()) {
            const SymElt& prod = detail::schur_product(lambda, mu);
            Rational c = ca * cb;
            for (auto& [nu, a2] : prod.terms()) out.add_term(nu, c * a2);
        }
    return out;
}

/// Hall inner product: Schur functions are orthonormal.
inline Rational hall_inner(const SymElt& a, const SymElt& b) {
    SymElt as = to_schur(a), bs = to_schur(b);
    const auto& small = as.term_count() <= bs.term_count() ? as : bs;
    const auto& big = as.term_count() <= bs.term_count() ? bs : as;
    Rational out = 0;
    for (auto& [lambda, c] : small.terms()) out += c * big.coeff(lambda);
    return out;
}

/// Adjoint of multiplication by b under the Hall pairing:
/// <skew(b,x), y> = <x, mul(b,y)> for all y. b is factored through the
/// power-sum basis, where each p_r acts adjointly by signed rim-hook removal.
inline SymElt skew(const SymElt& b, const SymElt& x) {
    SymElt xs = to_schur(x);
    SymElt bp = from_schur(to_schur(b), BasisTag::power);
    SymElt out(BasisTag::schur);
    for (auto& [nu, c] : bp.terms()) {
        SymElt cur = xs;
        for (int r : nu.parts()) {
            cur = skew_p(r, cur);
            if (cur.is_zero()) break;
        }
        out += c * cur;
    }
    return out;
}

/// The twist b(x_1,x_2,...) -> b(x_1^p, x_2^p, ...): on power sums,
/// p_r -> p_{pr} on every part. Result is returned in the input's basis.
/// (This is the p-power special case of plethysm; general plethysm is
/// deliberately not provided.)
inline SymElt twist(const SymElt& x, int p) {
    if (p < 2) throw std::invalid_argument("twist requires p >= 2, got " + std::to_string(p));
    BasisTag home = x.basis();
    SymElt xp = from_schur(to_schur(x), BasisTag::power);
    SymElt scaled(BasisTag::power);
    for (auto& [nu, c] : xp.terms()) {
        std::vector<int> parts = nu.parts();
        for (int& v : parts) v *= p;
        scaled.add_term(Partition(std::move(parts)), c);
    }
    return convert(scaled, home);
}

} // namespace symfock
