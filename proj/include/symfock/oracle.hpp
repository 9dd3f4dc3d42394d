#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "symfock/partition.hpp"
#include "symfock/rational.hpp"
#include "symfock/symfunc.hpp"

// Brute-force expansion of symmetric functions as explicit polynomials in a
// finite set of variables. Everything here works from the classical monomial
// definitions of e_r, h_r, p_r and s_lambda and never touches the basis
// conversion or multiplication code, so it can sit on the other side of an
// equality check.

namespace symfock {

/// Exponent vector -> coefficient, keys of fixed length nvars.
using MonomialPoly = std::map<std::vector<int>, Rational>;

inline MonomialPoly poly_mul(const MonomialPoly& a, const MonomialPoly& b) {
    MonomialPoly out;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            std::vector<int> e = ea;
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            auto [it, inserted] = out.emplace(std::move(e), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

inline void poly_add(MonomialPoly& a, const MonomialPoly& b, const Rational& scale = 1) {
    for (auto& [e, c] : b) {
        auto it = a.find(e);
        if (it == a.end()) {
            if (scale * c != 0) a.emplace(e, scale * c);
        } else {
            it->second += scale * c;
            if (it->second == 0) a.erase(it);
        }
    }
}

inline MonomialPoly poly_one(int nvars) {
    return {{std::vector<int>(nvars, 0), Rational(1)}};
}

/// Substitute x_i -> x_i^p.
inline MonomialPoly poly_power_substitution(const MonomialPoly& a, int p) {
    MonomialPoly out;
    for (auto& [e, c] : a) {
        std::vector<int> s = e;
        for (int& v : s) v *= p;
        out.emplace(std::move(s), c);
    }
    return out;
}

namespace oracle_detail {

inline MonomialPoly expand_e(int r, int nvars) {
    MonomialPoly out;
    std::vector<int> idx;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(idx.size()) == r) {
            std::vector<int> e(nvars, 0);
            for (int i : idx) e[i] = 1;
            out[std::move(e)] = 1;
            return;
        }
        for (int i = start; i < nvars; ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline MonomialPoly expand_h(int r, int nvars) {
    MonomialPoly out;
    std::vector<int> idx;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(idx.size()) == r) {
            std::vector<int> e(nvars, 0);
            for (int i : idx) ++e[i];
            auto [it, inserted] = out.emplace(std::move(e), Rational(1));
            if (!inserted) it->second += 1;
            return;
        }
        for (int i = start; i < nvars; ++i) {
            idx.push_back(i);
            self(self, i);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline MonomialPoly expand_p(int r, int nvars) {
    MonomialPoly out;
    for (int i = 0; i < nvars; ++i) {
        std::vector<int> e(nvars, 0);
        e[i] = r;
        out[std::move(e)] = 1;
    }
    return out;
}

/// Sum over semistandard tableaux of shape lambda with entries in 1..nvars.
inline MonomialPoly expand_schur_ssyt(const Partition& lambda, int nvars) {
    MonomialPoly out;
    int ell = lambda.length();
    std::vector<std::vector<int>> tab(ell);
    for (int i = 0; i < ell; ++i) tab[i].assign(lambda.parts()[i], 0);
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == ell) {
            std::vector<int> e(nvars, 0);
            for (auto& row : tab)
                for (int v : row) ++e[v - 1];
            auto [it, inserted] = out.emplace(std::move(e), Rational(1));
            if (!inserted) it->second += 1;
            return;
        }
        int ni = i, nj = j + 1;
        if (nj == static_cast<int>(tab[i].size())) { ni = i + 1; nj = 0; }
        int lo = 1;
        if (j > 0) lo = std::max(lo, tab[i][j - 1]);          // rows weakly increase
        if (i > 0 && j < lambda.parts()[i - 1]) lo = std::max(lo, tab[i - 1][j] + 1); // columns strictly
        for (int v = lo; v <= nvars; ++v) {
            tab[i][j] = v;
            self(self, ni, nj);
        }
        tab[i][j] = 0;
    };
    if (ell == 0)
        out = poly_one(nvars);
    else
        rec(rec, 0, 0);
    return out;
}

} // namespace oracle_detail

/// Expands x as an explicit polynomial in nvars variables from the classical
/// monomial definitions. Two elements of equal degree <= nvars are equal iff
/// their expansions agree.
inline MonomialPoly monomial_oracle(const SymElt& x, int nvars) {
    if (nvars < 1) throw std::invalid_argument("monomial_oracle needs nvars >= 1");
    if (x.max_degree() > nvars)
        throw std::invalid_argument("monomial_oracle needs nvars >= degree of the element");
    using namespace oracle_detail;
    MonomialPoly out;
    for (auto& [nu, c] : x.terms()) {
        MonomialPoly term;
        if (x.basis() == BasisTag::schur) {
            term = expand_schur_ssyt(nu, nvars);
        } else {
            term = poly_one(nvars);
            for (int r : nu.parts()) {
                switch (x.basis()) {
                    case BasisTag::elementary: term = poly_mul(term, expand_e(r, nvars)); break;
                    case BasisTag::complete: term = poly_mul(term, expand_h(r, nvars)); break;
                    case BasisTag::power: term = poly_mul(term, expand_p(r, nvars)); break;
                    default: break;
                }
            }
        }
        poly_add(out, term, c);
    }
    return out;
}

/// Antisymmetrized monomial det(x_i^{a_j}) expanded over permutations.
/// With a = lambda + delta this is the bialternant numerator of s_lambda;
/// tests pair it against the tableau expansion via
///   alternant(lambda + delta) == ssyt(lambda) * alternant(delta),
/// which avoids polynomial division.
inline MonomialPoly alternant(const std::vector<int>& exponents, int nvars) {
    if (static_cast<int>(exponents.size()) != nvars)
        throw std::invalid_argument("alternant needs one exponent per variable");
    MonomialPoly out;
    std::vector<int> perm(nvars);
    for (int i = 0; i < nvars; ++i) perm[i] = i;
    std::vector<bool> used(nvars, false);
    std::vector<int> e(nvars, 0);
    auto rec = [&](auto&& self, int row, int sign) -> void {
        if (row == nvars) {
            auto [it, inserted] = out.emplace(e, Rational(sign));
            if (!inserted) {
                it->second += sign;
                if (it->second == 0) out.erase(it);
            }
            return;
        }
        for (int col = 0; col < nvars; ++col) {
            if (used[col]) continue;
            int flips = 0;
            for (int c2 = col + 1; c2 < nvars; ++c2)
                if (used[c2]) ++flips;
            used[col] = true;
            e[col] = exponents[row];
            self(self, row + 1, flips % 2 ? -sign : sign);
            e[col] = 0;
            used[col] = false;
        }
    };
    rec(rec, 0, 1);
    return out;
}

} // namespace symfock
