#include "gq/error.hpp"
#include "gq/quandle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gq {

namespace {

// Per-element invariant: cycle type of the element's right translation, then the
// sorted value multiplicities of its row.
std::vector<std::vector<int>> element_signatures(const Quandle& q) {
    const int n = q.order();
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    std::vector<int> count(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        auto sig = cycle_type(q.column(a));
        sig.push_back(-1);
        std::fill(count.begin(), count.end(), 0);
        for (int b = 0; b < n; ++b) ++count[static_cast<std::size_t>(q.op(a, b))];
        std::vector<int> mult;
        for (int c : count)
            if (c) mult.push_back(c);
        std::sort(mult.begin(), mult.end());
        sig.insert(sig.end(), mult.begin(), mult.end());
        out[static_cast<std::size_t>(a)] = std::move(sig);
    }
    return out;
}

// Partial bijection with closure under * and its inverse, undone through a trail.
class IsoSearch {
public:
    IsoSearch(const Quandle& p, const Quandle& q, std::vector<int> class_p, std::vector<int> class_q)
        : p_(p), q_(q), n_(p.order()), class_p_(std::move(class_p)), class_q_(std::move(class_q)),
          f_(static_cast<std::size_t>(n_), -1), g_(static_cast<std::size_t>(n_), -1) {}

    std::optional<std::vector<int>> run() {
        if (search()) return f_;
        return std::nullopt;
    }

private:
    bool assign(int x, int y) {
        const int fx = f_[static_cast<std::size_t>(x)];
        if (fx >= 0) return fx == y;
        if (g_[static_cast<std::size_t>(y)] >= 0) return false;
        if (class_p_[static_cast<std::size_t>(x)] != class_q_[static_cast<std::size_t>(y)]) return false;
        f_[static_cast<std::size_t>(x)] = y;
        g_[static_cast<std::size_t>(y)] = x;
        trail_.push_back(x);
        return true;
    }

    bool propagate() {
        for (; head_ < trail_.size(); ++head_) {
            const int x = trail_[head_];
            const int fx = f_[static_cast<std::size_t>(x)];
            for (std::size_t k = 0; k <= head_; ++k) {
                const int z = trail_[k];
                const int fz = f_[static_cast<std::size_t>(z)];
                if (!assign(p_.op(x, z), q_.op(fx, fz)) || !assign(p_.op(z, x), q_.op(fz, fx)) ||
                    !assign(p_.rdiv(x, z), q_.rdiv(fx, fz)) || !assign(p_.rdiv(z, x), q_.rdiv(fz, fx)))
                    return false;
            }
        }
        return true;
    }

    void undo(std::size_t size) {
        while (trail_.size() > size) {
            const int x = trail_.back();
            trail_.pop_back();
            g_[static_cast<std::size_t>(f_[static_cast<std::size_t>(x)])] = -1;
            f_[static_cast<std::size_t>(x)] = -1;
        }
        head_ = std::min(head_, size);
    }

    bool search() {
        int x = 0;
        while (x < n_ && f_[static_cast<std::size_t>(x)] >= 0) ++x;
        if (x == n_) return true;
        const std::size_t mark = trail_.size();
        for (int y = 0; y < n_; ++y) {
            if (g_[static_cast<std::size_t>(y)] >= 0) continue;
            if (assign(x, y) && propagate() && search()) return true;
            undo(mark);
        }
        return false;
    }

    const Quandle& p_;
    const Quandle& q_;
    int n_;
    std::vector<int> class_p_, class_q_;
    std::vector<int> f_, g_;
    std::vector<int> trail_;
    std::size_t head_ = 0;
};

} // namespace

std::optional<std::vector<int>> isomorphism(const Quandle& p, const Quandle& q) {
    if (p.order() != q.order()) return std::nullopt;
    const auto sp = element_signatures(p);
    const auto sq = element_signatures(q);
    auto sorted_p = sp, sorted_q = sq;
    std::sort(sorted_p.begin(), sorted_p.end());
    std::sort(sorted_q.begin(), sorted_q.end());
    if (sorted_p != sorted_q) return std::nullopt;

    std::map<std::vector<int>, int> ids;
    for (const auto& s : sorted_p) ids.emplace(s, static_cast<int>(ids.size()));
    std::vector<int> cp, cq;
    for (const auto& s : sp) cp.push_back(ids.at(s));
    for (const auto& s : sq) cq.push_back(ids.at(s));
    return IsoSearch(p, q, std::move(cp), std::move(cq)).run();
}

bool is_good_involution(const Quandle& q, const std::vector<int>& rho) {
    const int n = q.order();
    if (rho.size() != static_cast<std::size_t>(n)) return false;
    for (int x = 0; x < n; ++x) {
        const int r = rho[static_cast<std::size_t>(x)];
        if (r < 0 || r >= n || rho[static_cast<std::size_t>(r)] != x) return false;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (q.op(x, rho[static_cast<std::size_t>(y)]) != q.rdiv(x, y)) return false;
            if (rho[static_cast<std::size_t>(q.op(x, y))] != q.op(rho[static_cast<std::size_t>(x)], y)) return false;
        }
    return true;
}

std::vector<std::vector<int>> good_involutions(const Quandle& q, int max_order) {
    const int n = q.order();
    if (n > max_order)
        throw ResourceLimitError("good involution search is bounded to order " + std::to_string(max_order) +
                                 ", got " + std::to_string(n));

    // rho(y) must be some z with R_z = R_y^{-1}.
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
            bool ok = true;
            for (int x = 0; x < n && ok; ++x) ok = q.op(x, z) == q.rdiv(x, y);
            if (ok) candidates[static_cast<std::size_t>(y)].push_back(z);
        }

    std::vector<int> rho(static_cast<std::size_t>(n), -1);
    std::vector<int> trail;
    std::size_t head = 0;
    std::vector<std::vector<int>> out;

    auto allowed = [&](int y, int z) {
        const auto& c = candidates[static_cast<std::size_t>(y)];
        return std::binary_search(c.begin(), c.end(), z);
    };
    auto assign = [&](int y, int z) {
        const int cur = rho[static_cast<std::size_t>(y)];
        if (cur >= 0) return cur == z;
        if (!allowed(y, z)) return false;
        const int back = rho[static_cast<std::size_t>(z)];
        if (back >= 0 && back != y) return false;
        rho[static_cast<std::size_t>(y)] = z;
        trail.push_back(y);
        if (back < 0 && z != y) {
            rho[static_cast<std::size_t>(z)] = y;
            trail.push_back(z);
        }
        return true;
    };
    auto propagate = [&]() {
        for (; head < trail.size(); ++head) {
            const int x = trail[head];
            const int rx = rho[static_cast<std::size_t>(x)];
            for (int w = 0; w < n; ++w)
                if (!assign(q.op(x, w), q.op(rx, w)) || !assign(q.rdiv(x, w), q.rdiv(rx, w))) return false;
        }
        return true;
    };
    auto undo = [&](std::size_t size) {
        while (trail.size() > size) {
            rho[static_cast<std::size_t>(trail.back())] = -1;
            trail.pop_back();
        }
        head = std::min(head, size);
    };

    std::function<void()> search = [&]() {
        int y = 0;
        while (y < n && rho[static_cast<std::size_t>(y)] >= 0) ++y;
        if (y == n) {
            if (is_good_involution(q, rho)) out.push_back(rho);
            return;
        }
        const std::size_t mark = trail.size();
        for (int z : candidates[static_cast<std::size_t>(y)]) {
            if (assign(y, z) && propagate()) search();
            undo(mark);
        }
    };
    search();
    return out;
}

} // namespace gq
