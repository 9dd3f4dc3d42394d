#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "symfock/partition.hpp"
#include "symfock/rational.hpp"
#include "symfock/symfunc.hpp"

namespace symfock {

/// A Fock-space state: a Schur-basis SymElt. The operator layer normalizes
/// inputs to the Schur basis on entry.
using FockElt = SymElt;

namespace detail {
inline FockElt as_fock(const SymElt& v) {
    return v.basis() == BasisTag::schur ? v : to_schur(v);
}
} // namespace detail

/// f_i: add one box of residue i to every Schur term.
inline FockElt apply_f(long i, const FockElt& v, int p) {
    validate_residue_modulus(p);
    FockElt vs = detail::as_fock(v);
    FockElt out(BasisTag::schur);
    for (auto& [lambda, c] : vs.terms())
        for (auto& mu : addable_i_boxes(lambda, i, p)) out.add_term(mu, c);
    return out;
}

/// e_i: remove one box of residue i from every Schur term.
inline FockElt apply_e(long i, const FockElt& v, int p) {
    validate_residue_modulus(p);
    FockElt vs = detail::as_fock(v);
    FockElt out(BasisTag::schur);
    for (auto& [lambda, c] : vs.terms())
        for (auto& mu : removable_i_boxes(lambda, i, p)) out.add_term(mu, c);
    return out;
}

/// h_i = [e_i, f_i], realized diagonally: the eigenvalue on s_lambda is
/// (#addable i-boxes) - (#removable i-boxes). The verification suites check
/// this against the commutator.
inline FockElt apply_h(long i, const FockElt& v, int p) {
    validate_residue_modulus(p);
    FockElt vs = detail::as_fock(v);
    FockElt out(BasisTag::schur);
    for (auto& [lambda, c] : vs.terms()) {
        long eigen = static_cast<long>(addable_i_boxes(lambda, i, p).size()) -
                     static_cast<long>(removable_i_boxes(lambda, i, p).size());
        out.add_term(lambda, Rational(eigen) * c);
    }
    return out;
}

/// d: diagonal with eigenvalue m_0(lambda), the number of residue-0 boxes.
inline FockElt apply_d(const FockElt& v, int p) {
    validate_residue_modulus(p);
    FockElt vs = detail::as_fock(v);
    FockElt out(BasisTag::schur);
    for (auto& [lambda, c] : vs.terms()) {
        auto counts = residue_counts(lambda, p).counts;
        auto it = counts.find(0);
        long m0 = it == counts.end() ? 0 : it->second;
        out.add_term(lambda, Rational(m0) * c);
    }
    return out;
}

namespace detail {

inline const SymElt& twisted_generator(char gen, int n, int p) {
    static std::map<std::tuple<char, int, int>, SymElt> cache;
    static std::mutex m;
    std::tuple<char, int, int> key{gen, n, p};
    {
        std::lock_guard lk(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SymElt base = gen == 'e'   ? SymElt::elementary_fn(n)
                  : gen == 'h' ? SymElt::complete_fn(n)
                               : SymElt::power_fn(n);
    SymElt val = to_schur(twist(base, p));
    std::lock_guard lk(m);
    return cache.emplace(std::move(key), std::move(val)).first->second;
}

inline void require_twist_p(int p, const char* who) {
    if (p < 2)
        throw std::domain_error(std::string(who) + " requires p >= 2, got " + std::to_string(p));
}

} // namespace detail

/// Multiplication by the twisted elementary function e_n^(1); n = 0 is the
/// identity. Raises degree by n*p.
inline FockElt twisted_mul(int n, const FockElt& v, int p) {
    detail::require_twist_p(p, "twisted_mul");
    if (n < 0) throw std::invalid_argument("twisted_mul index must be >= 0");
    if (n == 0) return detail::as_fock(v);
    return mul(detail::twisted_generator('e', n, p), v);
}

/// Adjoint of multiplication by the twisted complete function h_n^(1);
/// n = 0 is the identity. Lowers degree by n*p.
inline FockElt twisted_adj(int n, const FockElt& v, int p) {
    detail::require_twist_p(p, "twisted_adj");
    if (n < 0) throw std::invalid_argument("twisted_adj index must be >= 0");
    if (n == 0) return detail::as_fock(v);
    return skew(detail::twisted_generator('h', n, p), v);
}

/// Block label of a partition: its residue-count vector together with p.
/// Two partitions lie in the same block iff their labels agree.
inline WeightLabel weight_label(const Partition& lambda, int p) {
    return residue_counts(lambda, p);
}

// ---------------------------------------------------------------------------
// Operator expressions.

class OperatorExpr {
public:
    struct ChevE { long i; bool operator==(const ChevE&) const = default; };
    struct ChevF { long i; bool operator==(const ChevF&) const = default; };
    struct CartanH { long i; bool operator==(const CartanH&) const = default; };
    struct Degree { bool operator==(const Degree&) const = default; };
    struct Id { bool operator==(const Id&) const = default; };
    struct MulBy { SymElt b; bool operator==(const MulBy&) const = default; };
    struct AdjBy { SymElt b; bool operator==(const AdjBy&) const = default; };
    struct TwistMulBy { SymElt b; bool operator==(const TwistMulBy&) const = default; };
    struct TwistAdjBy { SymElt b; bool operator==(const TwistAdjBy&) const = default; };
    struct Compose { // after ∘ first: first acts on the state, then after
        std::shared_ptr<const OperatorExpr> after, first;
        bool operator==(const Compose& o) const { return *after == *o.after && *first == *o.first; }
    };
    struct Sum {
        std::vector<std::shared_ptr<const OperatorExpr>> terms;
        bool operator==(const Sum& o) const {
            if (terms.size() != o.terms.size()) return false;
            for (std::size_t k = 0; k < terms.size(); ++k)
                if (!(*terms[k] == *o.terms[k])) return false;
            return true;
        }
    };
    struct Scale {
        Rational c;
        std::shared_ptr<const OperatorExpr> child;
        bool operator==(const Scale& o) const { return c == o.c && *child == *o.child; }
    };

    using Node = std::variant<ChevE, ChevF, CartanH, Degree, Id, MulBy, AdjBy, TwistMulBy,
                              TwistAdjBy, Compose, Sum, Scale>;

    Node node{Id{}};

    OperatorExpr() = default;
    explicit OperatorExpr(Node n) : node(std::move(n)) {}

    bool operator==(const OperatorExpr& o) const { return node == o.node; }

    static OperatorExpr e(long i) { return OperatorExpr(ChevE{i}); }
    static OperatorExpr f(long i) { return OperatorExpr(ChevF{i}); }
    static OperatorExpr h(long i) { return OperatorExpr(CartanH{i}); }
    static OperatorExpr d() { return OperatorExpr(Degree{}); }
    static OperatorExpr identity() { return OperatorExpr(Id{}); }
    static OperatorExpr mul_by(SymElt b) { return OperatorExpr(MulBy{std::move(b)}); }
    static OperatorExpr adj_by(SymElt b) { return OperatorExpr(AdjBy{std::move(b)}); }
    static OperatorExpr tmul_by(SymElt b) { return OperatorExpr(TwistMulBy{std::move(b)}); }
    static OperatorExpr tadj_by(SymElt b) { return OperatorExpr(TwistAdjBy{std::move(b)}); }

    static OperatorExpr compose(OperatorExpr after, OperatorExpr first) {
        return OperatorExpr(Compose{std::make_shared<OperatorExpr>(std::move(after)),
                                    std::make_shared<OperatorExpr>(std::move(first))});
    }
    static OperatorExpr sum(std::vector<OperatorExpr> terms) {
        Sum s;
        for (auto& t : terms) s.terms.push_back(std::make_shared<OperatorExpr>(std::move(t)));
        return OperatorExpr(std::move(s));
    }
    static OperatorExpr scale(Rational c, OperatorExpr child) {
        return OperatorExpr(Scale{std::move(c), std::make_shared<OperatorExpr>(std::move(child))});
    }
};

/// Structural evaluation of an operator expression on a state. Compose applies
/// the right child first. Twisted leaves demand p >= 2 and name themselves on
/// failure.
inline FockElt eval(const OperatorExpr& expr, const FockElt& v, int p) {
    validate_residue_modulus(p);
    struct Visitor {
        const FockElt& v;
        int p;
        FockElt operator()(const OperatorExpr::ChevE& n) const { return apply_e(n.i, v, p); }
        FockElt operator()(const OperatorExpr::ChevF& n) const { return apply_f(n.i, v, p); }
        FockElt operator()(const OperatorExpr::CartanH& n) const { return apply_h(n.i, v, p); }
        FockElt operator()(const OperatorExpr::Degree&) const { return apply_d(v, p); }
        FockElt operator()(const OperatorExpr::Id&) const { return detail::as_fock(v); }
        FockElt operator()(const OperatorExpr::MulBy& n) const { return mul(n.b, v); }
        FockElt operator()(const OperatorExpr::AdjBy& n) const { return skew(n.b, v); }
        FockElt operator()(const OperatorExpr::TwistMulBy& n) const {
            if (p < 2)
                throw std::domain_error("tmul(" + n.b.to_string() + ") requires p >= 2, got " +
                                        std::to_string(p));
            return mul(twist(n.b, p), v);
        }
        FockElt operator()(const OperatorExpr::TwistAdjBy& n) const {
            if (p < 2)
                throw std::domain_error("tadj(" + n.b.to_string() + ") requires p >= 2, got " +
                                        std::to_string(p));
            return skew(twist(n.b, p), v);
        }
        FockElt operator()(const OperatorExpr::Compose& n) const {
            return eval(*n.after, eval(*n.first, v, p), p);
        }
        FockElt operator()(const OperatorExpr::Sum& n) const {
            FockElt out(BasisTag::schur);
            for (auto& t : n.terms) out += eval(*t, v, p);
            return out;
        }
        FockElt operator()(const OperatorExpr::Scale& n) const {
            FockElt out = eval(*n.child, v, p);
            return out *= n.c;
        }
    };
    return std::visit(Visitor{v, p}, expr.node);
}

// ---------------------------------------------------------------------------
// Basic representation.

/// Reduced row echelon form of a list of degree-homogeneous states, over the
/// canonically ordered partitions of that degree. Zero rows are dropped; the
/// result is a canonical basis of the span.
inline std::vector<FockElt> echelonize(int degree, const std::vector<FockElt>& vecs) {
    auto parts = partitions_of(degree);
    std::map<Partition, int> index;
    for (std::size_t k = 0; k < parts.size(); ++k) index[parts[k]] = static_cast<int>(k);
    int dim = static_cast<int>(parts.size());

    std::vector<std::vector<Rational>> rows;
    for (auto& v : vecs) {
        std::vector<Rational> row(dim, Rational(0));
        for (auto& [lambda, c] : v.terms()) {
            auto it = index.find(lambda);
            if (it == index.end())
                throw std::invalid_argument("echelonize: inhomogeneous state of wrong degree");
            row[it->second] = c;
        }
        rows.push_back(std::move(row));
    }

    int pivot_row = 0;
    std::vector<int> pivot_cols;
    for (int col = 0; col < dim && pivot_row < static_cast<int>(rows.size()); ++col) {
        int sel = -1;
        for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(rows[pivot_row], rows[sel]);
        Rational inv = rows[pivot_row][col];
        for (int c = col; c < dim; ++c) rows[pivot_row][c] /= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == pivot_row || rows[r][col] == 0) continue;
            Rational f = rows[r][col];
            for (int c = col; c < dim; ++c) rows[r][c] -= f * rows[pivot_row][c];
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }

    std::vector<FockElt> out;
    for (int r = 0; r < pivot_row; ++r) {
        FockElt v(BasisTag::schur);
        for (int c = 0; c < dim; ++c)
            if (rows[r][c] != 0) v.add_term(parts[c], rows[r][c]);
        out.push_back(std::move(v));
    }
    return out;
}

/// Exact membership test against an echelonized homogeneous basis.
inline bool in_span(const std::vector<FockElt>& basis, const FockElt& v) {
    FockElt rem = detail::as_fock(v);
    for (auto& b : basis) {
        if (rem.is_zero()) return true;
        const Partition& lead = b.terms().begin()->first;
        Rational c = rem.coeff(lead);
        if (c != 0) rem -= c * b;
    }
    return rem.is_zero();
}

/// Graded exact basis of U(g).1, built degree by degree: apply every f_i to
/// the previous degree's basis and echelonize. Demands p >= 2 (at p = 0 the
/// submodule is all of Fock space).
inline std::vector<std::vector<FockElt>> basic_rep_span(int p, int max_degree) {
    if (p < 2) throw std::invalid_argument("basic_rep_span requires p >= 2");
    if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
    std::vector<std::vector<FockElt>> graded;
    graded.push_back({SymElt::unit(BasisTag::schur)});
    for (int n = 1; n <= max_degree; ++n) {
        std::vector<FockElt> candidates;
        for (auto& b : graded[n - 1])
            for (int i = 0; i < p; ++i) {
                FockElt w = apply_f(i, b, p);
                if (!w.is_zero()) candidates.push_back(std::move(w));
            }
        graded.push_back(echelonize(n, candidates));
    }
    return graded;
}

} // namespace symfock
