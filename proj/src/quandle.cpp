#include "gq/quandle.hpp"

#include "gq/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gq {

namespace {

std::vector<int> flatten(const std::vector<std::vector<int>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw MalformedError("empty quandle table");
    std::vector<int> flat;
    flat.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (rows[a].size() != n)
            throw MalformedError("table is not square: row " + std::to_string(a) + " has " +
                                 std::to_string(rows[a].size()) + " entries, expected " + std::to_string(n));
        for (int v : rows[a]) {
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw MalformedError("entry " + std::to_string(v) + " in row " + std::to_string(a) +
                                     " is out of range 0.." + std::to_string(n - 1));
            flat.push_back(v);
        }
    }
    return flat;
}

// First violation of idempotency or column bijectivity, if any.
std::optional<AxiomViolation> shape_violation(int n, const std::vector<int>& t) {
    for (int a = 0; a < n; ++a)
        if (t[static_cast<std::size_t>(a) * n + a] != a)
            return AxiomViolation{AxiomViolation::Axiom::Idempotency, a, -1, -1};
    std::vector<int> seen(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), -1);
        for (int a = 0; a < n; ++a) {
            int v = t[static_cast<std::size_t>(a) * n + b];
            if (seen[static_cast<std::size_t>(v)] >= 0)
                return AxiomViolation{AxiomViolation::Axiom::RightInvertibility, seen[static_cast<std::size_t>(v)], b, a};
            seen[static_cast<std::size_t>(v)] = a;
        }
    }
    return std::nullopt;
}

std::optional<AxiomViolation> distributivity_violation(int n, const std::vector<int>& t) {
    auto op = [&](int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (op(op(a, b), c) != op(op(a, c), op(b, c)))
                    return AxiomViolation{AxiomViolation::Axiom::SelfDistributivity, a, b, c};
    return std::nullopt;
}

} // namespace

Quandle::Quandle(int n, std::vector<int> flat) : n_(n), table_(std::move(flat)) {
    inverse_.assign(table_.size(), 0);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) inverse_[static_cast<std::size_t>(op(a, b)) * n_ + b] = a;
}

Quandle Quandle::from_rows(const std::vector<std::vector<int>>& rows) {
    auto check = check_axioms(rows);
    if (!check.ok()) throw DomainError("not a quandle: " + check.violation->describe());
    return std::move(*check.quandle);
}

Quandle Quandle::trusted(int n, std::vector<int> flat) {
    if (n < 1 || flat.size() != static_cast<std::size_t>(n) * n)
        throw MalformedError("table size does not match order " + std::to_string(n));
    for (int v : flat)
        if (v < 0 || v >= n) throw MalformedError("table entry " + std::to_string(v) + " out of range");
    if (auto v = shape_violation(n, flat)) throw DomainError("not a quandle: " + v->describe());
    return Quandle(n, std::move(flat));
}

std::vector<std::vector<int>> Quandle::rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
    for (int a = 0; a < n_; ++a)
        out[static_cast<std::size_t>(a)].assign(table_.begin() + static_cast<std::ptrdiff_t>(a) * n_,
                                                table_.begin() + static_cast<std::ptrdiff_t>(a + 1) * n_);
    return out;
}

std::vector<int> Quandle::column(int b) const {
    std::vector<int> col(static_cast<std::size_t>(n_));
    for (int a = 0; a < n_; ++a) col[static_cast<std::size_t>(a)] = op(a, b);
    return col;
}

std::string AxiomViolation::describe() const {
    std::ostringstream os;
    switch (axiom) {
    case Axiom::Idempotency:
        os << "idempotency fails: " << a << "*" << a << " != " << a;
        break;
    case Axiom::RightInvertibility:
        os << "right invertibility fails: column " << b << " is not a permutation (" << a << "*" << b << " = " << c
           << "*" << b << ")";
        break;
    case Axiom::SelfDistributivity:
        os << "right self-distributivity fails at (a,b,c) = (" << a << "," << b << "," << c << ")";
        break;
    }
    return os.str();
}

AxiomCheck check_axioms(const std::vector<std::vector<int>>& rows) {
    std::vector<int> flat = flatten(rows);
    const int n = static_cast<int>(rows.size());
    AxiomCheck out;
    if (auto v = shape_violation(n, flat)) {
        out.violation = v;
        return out;
    }
    if (auto v = distributivity_violation(n, flat)) {
        out.violation = v;
        return out;
    }
    out.quandle = Quandle::trusted(n, std::move(flat));
    return out;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
    std::vector<int> lengths;
    std::vector<char> seen(perm.size(), 0);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

std::vector<std::vector<int>> column_cycle_types(const Quandle& q) {
    std::vector<std::vector<int>> out;
    for (int b = 0; b < q.order(); ++b) out.push_back(cycle_type(q.column(b)));
    return out;
}

std::vector<std::vector<int>> cycle_profile(const Quandle& q) {
    auto out = column_cycle_types(q);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> orbit_labels(const Quandle& q) {
    const int n = q.order();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (label[static_cast<std::size_t>(start)] >= 0) continue;
        std::vector<int> queue{start};
        label[static_cast<std::size_t>(start)] = start;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int b = 0; b < n; ++b)
                for (int y : {q.op(x, b), q.rdiv(x, b)})
                    if (label[static_cast<std::size_t>(y)] < 0) {
                        label[static_cast<std::size_t>(y)] = start;
                        queue.push_back(y);
                    }
        }
    }
    return label;
}

bool is_connected(const Quandle& q) {
    const auto labels = orbit_labels(q);
    return std::all_of(labels.begin(), labels.end(), [](int l) { return l == 0; });
}

bool is_latin(const Quandle& q) {
    const int n = q.order();
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            auto& s = seen[static_cast<std::size_t>(q.op(a, b))];
            if (s) return false;
            s = 1;
        }
    }
    return true;
}

bool is_faithful(const Quandle& q) {
    auto columns = std::vector<std::vector<int>>();
    for (int b = 0; b < q.order(); ++b) columns.push_back(q.column(b));
    std::sort(columns.begin(), columns.end());
    return std::adjacent_find(columns.begin(), columns.end()) == columns.end();
}

bool is_medial(const Quandle& q) {
    const int n = q.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int ab = q.op(a, b), ac = q.op(a, c);
                for (int d = 0; d < n; ++d)
                    if (q.op(ab, q.op(c, d)) != q.op(ac, q.op(b, d))) return false;
            }
    return true;
}

bool is_left_distributive(const Quandle& q) {
    const int n = q.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (q.op(a, q.op(b, c)) != q.op(q.op(a, b), q.op(a, c))) return false;
    return true;
}

bool is_kei(const Quandle& q) {
    for (int a = 0; a < q.order(); ++a)
        for (int b = 0; b < q.order(); ++b)
            if (q.op(q.op(a, b), b) != a) return false;
    return true;
}

bool is_self_dual(const Quandle& q) { return isomorphic(q, dual(q)); }

bool has_r3_subquandle(const Quandle& q) {
    const int n = q.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const int c = q.op(a, b);
            if (c == a || c == b || q.op(b, a) != c) continue;
            if (q.op(a, c) == b && q.op(c, a) == b && q.op(b, c) == a && q.op(c, b) == a) return true;
        }
    return false;
}

PropertyReport property_report(const Quandle& q) {
    PropertyReport r;
    r.connected = is_connected(q);
    r.latin = is_latin(q);
    r.faithful = is_faithful(q);
    r.medial = is_medial(q);
    r.left_distributive = is_left_distributive(q);
    r.kei = is_kei(q);
    r.self_dual = is_self_dual(q);
    r.r3_subquandle = has_r3_subquandle(q);
    r.cycle_profile = cycle_profile(q);
    return r;
}

Quandle dual(const Quandle& q) {
    const int n = q.order();
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = q.rdiv(a, b);
    return Quandle::trusted(n, std::move(flat));
}

std::vector<int> subquandle_generated(const Quandle& q, const std::vector<int>& generators) {
    const int n = q.order();
    if (generators.empty()) throw DomainError("subquandle generation needs a non-empty set");
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<int> members;
    auto insert = [&](int x) {
        if (x < 0 || x >= n) throw MalformedError("element " + std::to_string(x) + " out of range");
        if (!in[static_cast<std::size_t>(x)]) {
            in[static_cast<std::size_t>(x)] = 1;
            members.push_back(x);
        }
    };
    for (int g : generators) insert(g);
    // Each new member is combined with every earlier one in both orders.
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const int x = members[i], y = members[j];
            insert(q.op(x, y));
            insert(q.op(y, x));
            insert(q.rdiv(x, y));
            insert(q.rdiv(y, x));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool is_homomorphism(const Quandle& p, const Quandle& q, const std::vector<int>& f) {
    if (f.size() != static_cast<std::size_t>(p.order())) return false;
    for (int v : f)
        if (v < 0 || v >= q.order()) return false;
    for (int a = 0; a < p.order(); ++a)
        for (int b = 0; b < p.order(); ++b)
            if (f[static_cast<std::size_t>(p.op(a, b))] !=
                q.op(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
                return false;
    return true;
}

Quandle trivial_quandle(int n) {
    if (n < 1) throw DomainError("quandle order must be positive");
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = a;
    return Quandle::trusted(n, std::move(flat));
}

Quandle dihedral(int n) {
    if (n < 1) throw DomainError("dihedral quandle order must be positive");
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = ((2 * b - a) % n + n) % n;
    return Quandle::trusted(n, std::move(flat));
}

Quandle alexander(const AbelianGroup& a, const Homomorphism& t) {
    if (!(t.domain() == a) || !(t.codomain() == a) || !t.is_bijective())
        throw DomainError("Alexander quandle needs an automorphism of " + a.to_string());
    const int n = a.order();
    const auto add = a.addition_table();
    const auto neg = a.negation_table();
    const auto tv = t.value_table();
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            // T(x) + y - T(y)
            int v = add[static_cast<std::size_t>(tv[static_cast<std::size_t>(x)]) * n + y];
            v = add[static_cast<std::size_t>(v) * n + neg[static_cast<std::size_t>(tv[static_cast<std::size_t>(y)])]];
            flat[static_cast<std::size_t>(x) * n + y] = v;
        }
    return Quandle::trusted(n, std::move(flat));
}

Quandle product(const Quandle& p, const Quandle& q) {
    const int m = q.order();
    const int n = p.order() * m;
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            flat[static_cast<std::size_t>(x) * n + y] = p.op(x / m, y / m) * m + q.op(x % m, y % m);
    return Quandle::trusted(n, std::move(flat));
}

std::optional<AlexanderWitness> is_alexander_small(const Quandle& q, int max_order) {
    const int n = q.order();
    if (n > max_order)
        throw ResourceLimitError("Alexander search is bounded to order " + std::to_string(max_order) + ", got " +
                                 std::to_string(n));
    const auto target_profile = cycle_profile(q);
    BruteForceLimits limits;
    limits.max_group_order = std::max(limits.max_group_order, max_order);
    for (const auto& group : abelian_groups_of_order(n)) {
        std::optional<AlexanderWitness> found;
        std::vector<int> generator_index;
        for (int i = 0; i < group.rank(); ++i) generator_index.push_back(group.index_of(group.generator(i)));
        for_each_automorphism(group, limits, [&](const std::vector<int>& table) {
            std::vector<GroupElement> images;
            for (int g : generator_index) images.push_back(group.element_at(table[static_cast<std::size_t>(g)]));
            Homomorphism t(group, group, std::move(images));
            Quandle candidate = alexander(group, t);
            if (cycle_profile(candidate) != target_profile) return true;
            if (auto iso = isomorphism(candidate, q)) {
                found = AlexanderWitness{group, t, std::move(*iso)};
                return false;
            }
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

} // namespace gq
