#include "gq/enumeration.hpp"

#include "gq/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace gq {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& f, const Perm& g) { // f after g
    Perm h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[static_cast<std::size_t>(g[i])];
    return h;
}

Perm inverse(const Perm& f) {
    Perm h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[static_cast<std::size_t>(f[i])] = static_cast<int>(i);
    return h;
}

void partitions(int m, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(m, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions(m - part, part, cur, out);
        cur.pop_back();
    }
}

// Column search for one cycle type. columns[b] is R_b or empty.
class ColumnSearch {
public:
    ColumnSearch(int n, std::vector<int> type, std::function<void(const std::vector<Perm>&)> leaf)
        : n_(n), type_(std::move(type)), leaf_(std::move(leaf)), columns_(static_cast<std::size_t>(n)) {
        std::vector<int> rest(static_cast<std::size_t>(n - 1));
        for (int b = 0; b < n; ++b) {
            std::iota(rest.begin(), rest.end(), 0);
            for (auto& r : rest)
                if (r >= b) ++r;
            auto& list = candidates_.emplace_back();
            auto arrangement = rest;
            do {
                Perm p(static_cast<std::size_t>(n));
                p[static_cast<std::size_t>(b)] = b;
                for (std::size_t i = 0; i < rest.size(); ++i) p[static_cast<std::size_t>(rest[i])] = arrangement[i];
                if (cycle_type(p) == type_) list.push_back(std::move(p));
            } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        }
    }

    void run(const Perm& first) {
        if (set(0, first) && propagate()) search();
        undo(0);
    }

private:
    bool set(int b, const Perm& p) {
        auto& slot = columns_[static_cast<std::size_t>(b)];
        if (!slot.empty()) return slot == p;
        slot = p;
        trail_.push_back(b);
        return true;
    }

    bool propagate() {
        for (; head_ < trail_.size(); ++head_) {
            const int c = trail_[head_];
            for (std::size_t k = 0; k <= head_; ++k) {
                const int b = trail_[k];
                for (auto [u, v] : {std::pair{c, b}, std::pair{b, c}}) {
                    const Perm& ru = columns_[static_cast<std::size_t>(u)];
                    const Perm& rv = columns_[static_cast<std::size_t>(v)];
                    const Perm ru_inv = inverse(ru);
                    // R_{R_u(v)} = R_u R_v R_u^{-1} and R_{R_u^{-1}(v)} = R_u^{-1} R_v R_u
                    if (!set(ru[static_cast<std::size_t>(v)], compose(ru, compose(rv, ru_inv)))) return false;
                    if (!set(ru_inv[static_cast<std::size_t>(v)], compose(ru_inv, compose(rv, ru)))) return false;
                }
            }
        }
        return true;
    }

    void undo(std::size_t size) {
        while (trail_.size() > size) {
            columns_[static_cast<std::size_t>(trail_.back())].clear();
            trail_.pop_back();
        }
        head_ = std::min(head_, size);
    }

    void search() {
        int b = 0;
        while (b < n_ && !columns_[static_cast<std::size_t>(b)].empty()) ++b;
        if (b == n_) {
            leaf_(columns_);
            return;
        }
        const std::size_t mark = trail_.size();
        for (const auto& p : candidates_[static_cast<std::size_t>(b)]) {
            if (set(b, p) && propagate()) search();
            undo(mark);
        }
    }

    int n_;
    std::vector<int> type_;
    std::function<void(const std::vector<Perm>&)> leaf_;
    std::vector<Perm> columns_;
    std::vector<std::vector<Perm>> candidates_;
    std::vector<int> trail_;
    std::size_t head_ = 0;
};

Quandle from_columns(int n, const std::vector<Perm>& columns) {
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            flat[static_cast<std::size_t>(a) * n + b] = columns[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
    return Quandle::trusted(n, std::move(flat));
}

} // namespace

std::vector<std::uint8_t> canonical_key(const Quandle& q) {
    const int n = q.order();
    if (n > 10) throw ResourceLimitError("canonical keys are computed by brute force up to order 10");
    // sigma[i] = old element placed at new position i; pi = sigma^{-1}
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<std::uint8_t> best(static_cast<std::size_t>(n) * n, 255);
    std::vector<int> pi(static_cast<std::size_t>(n));
    do {
        for (int i = 0; i < n; ++i) pi[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
        bool smaller = false;
        std::vector<std::uint8_t> cand;
        cand.reserve(best.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto v = static_cast<std::uint8_t>(
                    pi[static_cast<std::size_t>(q.op(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]))]);
                const std::size_t pos = cand.size();
                if (!smaller) {
                    if (v > best[pos]) goto next;
                    if (v < best[pos]) smaller = true;
                }
                cand.push_back(v);
            }
        if (smaller) best = std::move(cand);
    next:;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

std::vector<CensusEntry> enumerate_connected(int n, int max_order) {
    if (n < 1) throw DomainError("quandle order must be positive");
    if (n > max_order)
        throw ResourceLimitError("connected enumeration is bounded to order " + std::to_string(max_order) +
                                 ", got " + std::to_string(n));
    std::vector<Quandle> found;
    if (n == 1) {
        found.push_back(trivial_quandle(1));
    } else {
        // Fingerprint buckets; full isomorphism checks only within a bucket.
        std::map<std::vector<std::vector<int>>, std::vector<std::size_t>> buckets;
        std::vector<std::vector<int>> types;
        std::vector<int> cur;
        partitions(n - 1, n - 1, cur, types);
        for (auto& type : types) {
            if (type.front() == 1) continue; // identity column: cannot be connected
            type.push_back(1);
            std::sort(type.begin(), type.end());
            // R_0 in canonical form: consecutive cycles on 1..n-1.
            Perm first(static_cast<std::size_t>(n));
            first[0] = 0;
            int next = 1;
            std::vector<int> parts(type.begin() + 1, type.end());
            std::sort(parts.rbegin(), parts.rend());
            for (int len : parts) {
                for (int i = 0; i < len; ++i) first[static_cast<std::size_t>(next + i)] = next + (i + 1) % len;
                next += len;
            }
            ColumnSearch search(n, type, [&](const std::vector<Perm>& columns) {
                Quandle q = from_columns(n, columns);
                if (!is_connected(q)) return;
                auto& bucket = buckets[cycle_profile(q)];
                for (std::size_t idx : bucket)
                    if (isomorphic(found[idx], q)) return;
                bucket.push_back(found.size());
                found.push_back(std::move(q));
            });
            search.run(first);
        }
    }
    std::vector<CensusEntry> census;
    for (auto& q : found) census.push_back({n, q, canonical_key(q)});
    std::sort(census.begin(), census.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.canonical_key < b.canonical_key; });
    return census;
}

std::optional<std::size_t> identify(const Quandle& q, const std::vector<CensusEntry>& census) {
    if (!is_connected(q)) return std::nullopt;
    for (std::size_t i = 0; i < census.size(); ++i)
        if (census[i].order == q.order() && isomorphic(census[i].table, q)) return i;
    return std::nullopt;
}

} // namespace gq
