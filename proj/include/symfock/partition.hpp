#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symfock {

/// Validates the modulus used for box residues: 0 (contents stay in Z) or >= 2.
inline void validate_residue_modulus(int p) {
    if (p != 0 && p < 2)
        throw std::invalid_argument("residue modulus must be 0 or >= 2, got " + std::to_string(p));
}

/// A partition: weakly decreasing positive parts, no trailing zeros.
/// Canonical order used throughout: ascending total size, then
/// lexicographically descending parts (so [3] < [2,1] < [1,1,1] holds as
/// [3] first within size 3).
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0L);
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long size() const { return size_; }
    bool empty() const { return parts_.empty(); }

    /// 1-based row access; rows past the last are 0.
    int part(int row) const {
        if (row < 1) throw std::out_of_range("row index is 1-based");
        return row <= length() ? parts_[row - 1] : 0;
    }

    Partition conjugate() const {
        if (empty()) return {};
        std::vector<int> t(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++t[j];
        return Partition(std::move(t));
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    bool operator<(const Partition& o) const {
        if (size_ != o.size_) return size_ < o.size_;
        return parts_ > o.parts_; // lex descending within a degree
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(parts_[k]);
        }
        return s + "]";
    }

    /// Parses the bracket format, e.g. "[4,4,2,1]" or "[]".
    static Partition parse(const std::string& text) {
        std::string t;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.size() < 2 || t.front() != '[' || t.back() != ']')
            throw std::invalid_argument("partition literal must look like [a,b,...]: " + text);
        std::vector<int> parts;
        std::string body = t.substr(1, t.size() - 2);
        if (!body.empty()) {
            std::size_t pos = 0;
            while (pos <= body.size()) {
                auto comma = body.find(',', pos);
                std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                    throw std::invalid_argument("bad partition part '" + tok + "' in " + text);
                parts.push_back(std::stoi(tok));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
        return Partition(std::move(parts)); // constructor rejects increasing parts
    }

private:
    std::vector<int> parts_;
    long size_ = 0;
};

/// A box of a Young diagram in English notation, 1-based.
struct Cell {
    int row;
    int col;
};

inline long content(Cell c) { return static_cast<long>(c.col) - c.row; }

inline long residue_of_content(long content, int p) {
    validate_residue_modulus(p);
    if (p == 0) return content;
    long r = content % p;
    return r < 0 ? r + p : r;
}

inline long residue(Cell c, int p) { return residue_of_content(content(c), p); }

/// Residue-count vector of a partition; equality of labels is block equality.
struct WeightLabel {
    int p = 0;
    std::map<long, long> counts; // residue -> #boxes, zero entries not stored

    bool operator==(const WeightLabel&) const = default;

    WeightLabel& add_unit(long i, long delta = 1) {
        long key = residue_of_content(i, p);
        auto it = counts.find(key);
        long v = (it == counts.end() ? 0 : it->second) + delta;
        if (v == 0)
            counts.erase(key);
        else
            counts[key] = v;
        return *this;
    }

    long total() const {
        long t = 0;
        for (auto& [k, v] : counts) t += v;
        return t;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (auto& [k, v] : counts) {
            if (!first) s += ',';
            first = false;
            s += std::to_string(k) + ":" + std::to_string(v);
        }
        return s + "}";
    }
};

inline WeightLabel residue_counts(const Partition& lambda, int p) {
    validate_residue_modulus(p);
    WeightLabel w;
    w.p = p;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            w.add_unit(residue(Cell{i, j}, p));
    return w;
}

/// All corners where a box may be added, as (row, col) cells, top row first.
inline std::vector<Cell> addable_corners(const Partition& lambda) {
    std::vector<Cell> out;
    out.push_back({1, lambda.part(1) + 1});
    for (int i = 2; i <= lambda.length() + 1; ++i)
        if (lambda.part(i) < lambda.part(i - 1)) out.push_back({i, lambda.part(i) + 1});
    return out;
}

inline std::vector<Cell> removable_corners(const Partition& lambda) {
    std::vector<Cell> out;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.part(i) > lambda.part(i + 1)) out.push_back({i, lambda.part(i)});
    return out;
}

inline Partition with_box_added(const Partition& lambda, Cell c) {
    std::vector<int> parts = lambda.parts();
    if (c.row == lambda.length() + 1)
        parts.push_back(1);
    else
        ++parts[c.row - 1];
    return Partition(std::move(parts));
}

inline Partition with_box_removed(const Partition& lambda, Cell c) {
    std::vector<int> parts = lambda.parts();
    --parts[c.row - 1];
    return Partition(std::move(parts));
}

/// Partitions obtained by adding one box of residue i, lex descending.
inline std::vector<Partition> addable_i_boxes(const Partition& lambda, long i, int p) {
    validate_residue_modulus(p);
    long target = residue_of_content(i, p);
    std::vector<Partition> out;
    for (Cell c : addable_corners(lambda))
        if (residue(c, p) == target) out.push_back(with_box_added(lambda, c));
    return out; // top-row-first corner order is lex descending
}

/// Partitions obtained by removing one box of residue i, lex descending.
inline std::vector<Partition> removable_i_boxes(const Partition& lambda, long i, int p) {
    validate_residue_modulus(p);
    long target = residue_of_content(i, p);
    std::vector<Partition> out;
    auto corners = removable_corners(lambda);
    for (auto it = corners.rbegin(); it != corners.rend(); ++it)
        if (residue(*it, p) == target) out.push_back(with_box_removed(lambda, *it));
    return out;
}

struct RimHookRemoval {
    Partition result;
    int height = 0; // rows spanned minus one
};

struct RimHookAddition {
    Partition result;
    int height = 0;
};

/// The rim of the diagram, one cell per diagonal, listed SW to NE.
inline std::vector<Cell> rim_cells(const Partition& lambda) {
    std::vector<Cell> rim;
    if (lambda.empty()) return rim;
    int ell = lambda.length();
    for (long c = 1 - ell; c <= lambda.part(1) - 1; ++c) {
        // last cell of the diagonal j - i == c
        for (int i = ell; i >= 1; --i) {
            long j = c + i;
            if (j >= 1 && j <= lambda.part(i)) {
                rim.push_back({i, static_cast<int>(j)});
                break;
            }
        }
    }
    return rim;
}

/// Every removable border strip of r cells, found by walking the rim.
inline std::vector<RimHookRemoval> rim_hook_removals(const Partition& lambda, int r) {
    if (r < 1) throw std::invalid_argument("rim hook length must be >= 1");
    std::vector<RimHookRemoval> out;
    auto rim = rim_cells(lambda);
    if (static_cast<int>(rim.size()) < r) return out;
    for (std::size_t t = 0; t + r <= rim.size(); ++t) {
        // removed columns per row; contiguous rim cells share rows consecutively
        std::map<int, std::pair<int, int>> span; // row -> [min col, max col]
        for (int k = 0; k < r; ++k) {
            Cell c = rim[t + k];
            auto it = span.find(c.row);
            if (it == span.end())
                span[c.row] = {c.col, c.col};
            else {
                it->second.first = std::min(it->second.first, c.col);
                it->second.second = std::max(it->second.second, c.col);
            }
        }
        std::vector<int> parts = lambda.parts();
        bool ok = true;
        for (auto& [row, cols] : span) {
            if (cols.second != lambda.part(row)) { ok = false; break; } // must end the row
            parts[row - 1] = cols.first - 1;
        }
        if (!ok) continue;
        for (std::size_t k = 0; k + 1 < parts.size(); ++k)
            if (parts[k] < parts[k + 1]) { ok = false; break; }
        if (!ok) continue;
        out.push_back({Partition(std::move(parts)), static_cast<int>(span.size()) - 1});
    }
    std::sort(out.begin(), out.end(),
              [](const RimHookRemoval& a, const RimHookRemoval& b) { return a.result < b.result; });
    return out;
}

/// Every way of gluing a border strip of r cells onto the diagram.
/// Runs on first-column hook coordinates: one bead moves up by r.
inline std::vector<RimHookAddition> rim_hook_additions(const Partition& lambda, int r) {
    if (r < 1) throw std::invalid_argument("rim hook length must be >= 1");
    int n = lambda.length() + r;
    std::vector<long> beta(n);
    for (int i = 1; i <= n; ++i) beta[i - 1] = lambda.part(i) + n - i;
    std::vector<RimHookAddition> out;
    for (int j = 0; j < n; ++j) {
        long v = beta[j] + r;
        if (std::find(beta.begin(), beta.end(), v) != beta.end()) continue;
        int height = 0;
        for (long b : beta)
            if (b > beta[j] && b < v) ++height;
        std::vector<long> nb = beta;
        nb[j] = v;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> parts(n);
        for (int i = 1; i <= n; ++i) parts[i - 1] = static_cast<int>(nb[i - 1] - (n - i));
        out.push_back({Partition(std::move(parts)), height});
    }
    std::sort(out.begin(), out.end(),
              [](const RimHookAddition& a, const RimHookAddition& b) { return a.result < b.result; });
    return out;
}

/// Abacus computation of the p-core and p-quotient. The bead count is padded
/// to a multiple of p, which pins the labeling of quotient components by
/// runner index. size(lambda) == size(core) + p * (total quotient size).
inline std::pair<Partition, std::vector<Partition>> p_core_and_quotient(const Partition& lambda, int p) {
    if (p < 2) throw std::invalid_argument("p-core requires p >= 2");
    int n = ((std::max(lambda.length(), 1) + p - 1) / p) * p;
    std::vector<long> beta(n);
    for (int i = 1; i <= n; ++i) beta[i - 1] = lambda.part(i) + n - i;

    std::vector<std::vector<long>> runner(p);
    for (long b : beta) runner[b % p].push_back(b / p);

    std::vector<Partition> quotient(p);
    std::vector<long> slid;
    for (int j = 0; j < p; ++j) {
        auto& pos = runner[j];
        std::sort(pos.rbegin(), pos.rend());
        std::vector<int> qparts;
        long c = static_cast<long>(pos.size());
        for (std::size_t k = 0; k < pos.size(); ++k) {
            long part = pos[k] - (c - 1 - static_cast<long>(k));
            if (part > 0) qparts.push_back(static_cast<int>(part));
        }
        quotient[j] = Partition(std::move(qparts));
        for (long t = 0; t < c; ++t) slid.push_back(t * p + j);
    }
    std::sort(slid.rbegin(), slid.rend());
    std::vector<int> core_parts(n);
    for (int i = 1; i <= n; ++i) core_parts[i - 1] = static_cast<int>(slid[i - 1] - (n - i));
    return {Partition(std::move(core_parts)), std::move(quotient)};
}

inline Partition p_core(const Partition& lambda, int p) {
    return p_core_and_quotient(lambda, p).first;
}

namespace detail {

inline void horizontal_additions_rec(const Partition& lambda, int row, int remaining,
                                     std::vector<int>& acc, std::vector<Partition>& out) {
    int ell = lambda.length();
    if (row > ell + 1 || remaining == 0) {
        if (remaining == 0) {
            std::vector<int> parts = acc;
            for (int i = row; i <= ell; ++i) parts.push_back(lambda.part(i));
            out.push_back(Partition(std::move(parts)));
        }
        return;
    }
    int lo = lambda.part(row);
    int hi = row == 1 ? lambda.part(1) + remaining
                      : std::min(lambda.part(row - 1), lambda.part(row) + remaining);
    for (int v = hi; v >= lo; --v) { // big first rows first: lex descending output
        acc.push_back(v);
        horizontal_additions_rec(lambda, row + 1, remaining - (v - lo), acc, out);
        acc.pop_back();
    }
}

inline void horizontal_removals_rec(const Partition& lambda, int row, int remaining,
                                    std::vector<int>& acc, std::vector<Partition>& out) {
    int ell = lambda.length();
    if (row > ell) {
        if (remaining == 0) out.push_back(Partition(acc));
        return;
    }
    int hi = lambda.part(row);
    int lo = std::max(lambda.part(row + 1), hi - remaining);
    for (int v = hi; v >= lo; --v) {
        acc.push_back(v);
        horizontal_removals_rec(lambda, row + 1, remaining - (hi - v), acc, out);
        acc.pop_back();
    }
}

} // namespace detail

/// mu >= lambda with mu/lambda a horizontal strip of r boxes.
inline std::vector<Partition> horizontal_strip_additions(const Partition& lambda, int r) {
    if (r < 0) throw std::invalid_argument("strip size must be >= 0");
    if (r == 0) return {lambda};
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::horizontal_additions_rec(lambda, 1, r, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// mu <= lambda with lambda/mu a horizontal strip of r boxes.
inline std::vector<Partition> horizontal_strip_removals(const Partition& lambda, int r) {
    if (r < 0) throw std::invalid_argument("strip size must be >= 0");
    if (r == 0) return {lambda};
    if (r > lambda.size()) return {};
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::horizontal_removals_rec(lambda, 1, r, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Partition> vertical_strip_additions(const Partition& lambda, int r) {
    auto hs = horizontal_strip_additions(lambda.conjugate(), r);
    std::vector<Partition> out;
    out.reserve(hs.size());
    for (auto& m : hs) out.push_back(m.conjugate());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Partition> vertical_strip_removals(const Partition& lambda, int r) {
    auto hs = horizontal_strip_removals(lambda.conjugate(), r);
    std::vector<Partition> out;
    out.reserve(hs.size());
    for (auto& m : hs) out.push_back(m.conjugate());
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {
inline void partitions_rec(int n, int maxpart, std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        acc.push_back(k);
        partitions_rec(n - k, k, acc, out);
        acc.pop_back();
    }
}
} // namespace detail

/// All partitions of n in lex descending order: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::partitions_rec(n, n, acc, out);
    return out;
}

/// All partitions of size 0..max_size, ordered by size then lex descending.
inline std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto pn = partitions_of(n);
        out.insert(out.end(), pn.begin(), pn.end());
    }
    return out;
}

} // namespace symfock
