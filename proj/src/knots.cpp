#include "gq/knots.hpp"

#include "gq/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace gq {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int to_int(std::string_view s, const std::string& what) {
    s = trim(s);
    if (s.empty()) throw ParseError("missing " + what);
    std::string buf(s);
    char* end = nullptr;
    const long v = std::strtol(buf.c_str(), &end, 10);
    if (*end != '\0') throw ParseError("bad " + what + " '" + buf + "'");
    return static_cast<int>(v);
}

std::vector<int> to_letters(std::string_view s) {
    std::vector<int> out;
    std::istringstream is{std::string(s)};
    std::string tok;
    while (is >> tok) out.push_back(to_int(tok, "braid letter"));
    return out;
}

// Bareiss elimination; exact for integer matrices.
long long abs_det(std::vector<std::vector<__int128>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    __int128 d = m[n - 1][n - 1] * sign;
    if (d < 0) d = -d;
    return static_cast<long long>(d);
}

std::uint64_t count_by_braid_action(const BraidWord& b, const Quandle& q) {
    const int n = q.order();
    const int s = b.strands;
    std::vector<int> start(static_cast<std::size_t>(s), 0);
    std::vector<int> cur(static_cast<std::size_t>(s));
    std::uint64_t count = 0;
    while (true) {
        cur = start;
        for (int w : b.letters) {
            const std::size_t i = static_cast<std::size_t>(std::abs(w) - 1);
            const int x = cur[i], y = cur[i + 1];
            if (w > 0) {
                cur[i] = y;
                cur[i + 1] = q.op(x, y);
            } else {
                cur[i] = q.rdiv(y, x);
                cur[i + 1] = x;
            }
        }
        if (cur == start) ++count;
        std::size_t k = 0;
        for (; k < start.size(); ++k) {
            if (++start[k] < n) break;
            start[k] = 0;
        }
        if (k == start.size()) break;
    }
    return count;
}

class ArcCounter {
public:
    ArcCounter(const KnotDiagram& d, const Quandle& q)
        : d_(d), q_(q), color_(static_cast<std::size_t>(d.arcs), -1), touching_(static_cast<std::size_t>(d.arcs)) {
        for (std::size_t c = 0; c < d.crossings.size(); ++c) {
            const auto& x = d.crossings[c];
            for (int arc : {x.over, x.under_in, x.under_out}) touching_[static_cast<std::size_t>(arc)].push_back(c);
        }
    }

    std::uint64_t run() {
        search();
        return count_;
    }

private:
    bool set(int arc, int value) {
        int& slot = color_[static_cast<std::size_t>(arc)];
        if (slot >= 0) return slot == value;
        slot = value;
        trail_.push_back(arc);
        return true;
    }

    bool propagate(std::size_t from) {
        for (std::size_t h = from; h < trail_.size(); ++h)
            for (std::size_t c : touching_[static_cast<std::size_t>(trail_[h])]) {
                const auto& x = d_.crossings[c];
                const int over = color_[static_cast<std::size_t>(x.over)];
                if (over < 0) continue;
                const int in = color_[static_cast<std::size_t>(x.under_in)];
                const int out = color_[static_cast<std::size_t>(x.under_out)];
                if (in >= 0) {
                    if (!set(x.under_out, x.sign > 0 ? q_.op(in, over) : q_.rdiv(in, over))) return false;
                } else if (out >= 0) {
                    if (!set(x.under_in, x.sign > 0 ? q_.rdiv(out, over) : q_.op(out, over))) return false;
                }
            }
        return true;
    }

    void search() {
        auto it = std::find(color_.begin(), color_.end(), -1);
        if (it == color_.end()) {
            ++count_;
            return;
        }
        const int arc = static_cast<int>(it - color_.begin());
        const std::size_t mark = trail_.size();
        for (int v = 0; v < q_.order(); ++v) {
            if (set(arc, v) && propagate(mark)) search();
            while (trail_.size() > mark) {
                color_[static_cast<std::size_t>(trail_.back())] = -1;
                trail_.pop_back();
            }
        }
    }

    const KnotDiagram& d_;
    const Quandle& q_;
    std::vector<int> color_;
    std::vector<std::vector<std::size_t>> touching_;
    std::vector<int> trail_;
    std::uint64_t count_ = 0;
};

std::uint64_t tuple_count(int n, int s, std::uint64_t cap) {
    std::uint64_t t = 1;
    for (int i = 0; i < s; ++i) {
        if (t > cap / static_cast<std::uint64_t>(n)) return cap + 1;
        t *= static_cast<std::uint64_t>(n);
    }
    return t;
}

} // namespace

std::string BraidWord::to_string() const {
    std::string out = std::to_string(strands) + ":";
    for (int w : letters) out += " " + std::to_string(w);
    return out;
}

int closure_components(const BraidWord& b) {
    std::vector<int> perm(static_cast<std::size_t>(b.strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (int w : b.letters) std::swap(perm[static_cast<std::size_t>(std::abs(w) - 1)], perm[static_cast<std::size_t>(std::abs(w))]);
    return static_cast<int>(cycle_type(perm).size());
}

BraidWord make_braid(int strands, std::vector<int> letters) {
    if (strands < 1) throw ParseError("braid needs at least one strand, got " + std::to_string(strands));
    for (int w : letters)
        if (w == 0 || std::abs(w) >= strands)
            throw ParseError("braid letter " + std::to_string(w) + " is out of range for " + std::to_string(strands) +
                             " strands");
    BraidWord b{strands, std::move(letters)};
    if (int c = closure_components(b); c != 1) throw LinkNotKnotError(c);
    return b;
}

BraidWord parse_braid(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("braid '" + std::string(text) + "' must look like 's: w1 w2 ...'");
    return make_braid(to_int(text.substr(0, colon), "strand count"), to_letters(text.substr(colon + 1)));
}

BraidWord rotate(const BraidWord& b, int k) {
    BraidWord out = b;
    if (!out.letters.empty()) {
        const auto shift = static_cast<std::ptrdiff_t>(((k % static_cast<int>(out.letters.size())) +
                                                         static_cast<int>(out.letters.size())) %
                                                        static_cast<int>(out.letters.size()));
        std::rotate(out.letters.begin(), out.letters.begin() + shift, out.letters.end());
    }
    return out;
}

BraidWord stabilize(const BraidWord& b, bool positive) {
    BraidWord out = b;
    out.letters.push_back(positive ? b.strands : -b.strands);
    out.strands = b.strands + 1;
    return out;
}

KnotDiagram diagram(const BraidWord& b) {
    std::vector<int> pos(static_cast<std::size_t>(b.strands));
    std::iota(pos.begin(), pos.end(), 0);
    int next = b.strands;
    std::vector<Crossing> raw;
    for (int w : b.letters) {
        const std::size_t i = static_cast<std::size_t>(std::abs(w) - 1);
        const int x = pos[i], y = pos[i + 1];
        if (w > 0) {
            raw.push_back({y, x, next, +1});
            pos[i] = y;
            pos[i + 1] = next;
        } else {
            raw.push_back({x, y, next, -1});
            pos[i] = next;
            pos[i + 1] = x;
        }
        ++next;
    }
    std::vector<int> parent(static_cast<std::size_t>(next));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] =
                                                             parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (int j = 0; j < b.strands; ++j) {
        const int u = find(pos[static_cast<std::size_t>(j)]), v = find(j);
        if (u != v) parent[static_cast<std::size_t>(std::max(u, v))] = std::min(u, v);
    }
    std::map<int, int> label;
    for (int a = 0; a < next; ++a) label.emplace(find(a), static_cast<int>(label.size()));
    KnotDiagram d;
    d.arcs = static_cast<int>(label.size());
    for (const auto& c : raw)
        d.crossings.push_back({label.at(find(c.over)), label.at(find(c.under_in)), label.at(find(c.under_out)), c.sign});
    return d;
}

std::uint64_t count_colorings(const BraidWord& b, const Quandle& q, ColoringMethod method, const ColoringBudget& budget) {
    const std::uint64_t tuples = tuple_count(q.order(), b.strands, budget.max_tuples);
    if (method == ColoringMethod::Auto)
        method = tuples > budget.max_tuples ? ColoringMethod::Arc : ColoringMethod::BraidAction;
    if (method == ColoringMethod::BraidAction) {
        if (tuples > budget.max_tuples)
            throw ResourceLimitError("braid action over " + std::to_string(q.order()) + "^" +
                                     std::to_string(b.strands) + " tuples exceeds the budget of " +
                                     std::to_string(budget.max_tuples) + "; use a word with fewer strands");
        return count_by_braid_action(b, q);
    }
    return ArcCounter(diagram(b), q).run();
}

bool has_nontrivial_coloring(const BraidWord& b, const Quandle& q) {
    return count_colorings(b, q) > static_cast<std::uint64_t>(q.order());
}

long long determinant(const BraidWord& b) {
    if (int c = closure_components(b); c != 1) throw LinkNotKnotError(c);
    const KnotDiagram d = diagram(b);
    if (d.crossings.empty()) return 1;
    const std::size_t n = d.crossings.size();
    if (static_cast<std::size_t>(d.arcs) != n)
        throw DomainError("diagram of " + b.to_string() + " has " + std::to_string(d.arcs) + " arcs and " +
                          std::to_string(n) + " crossings");
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n, 0));
    for (std::size_t r = 0; r < n; ++r) {
        const auto& c = d.crossings[r];
        m[r][static_cast<std::size_t>(c.over)] += 2;
        m[r][static_cast<std::size_t>(c.under_in)] -= 1;
        m[r][static_cast<std::size_t>(c.under_out)] -= 1;
    }
    std::vector<std::vector<__int128>> minor;
    for (std::size_t r = 1; r < n; ++r) minor.emplace_back(m[r].begin() + 1, m[r].end());
    return abs_det(std::move(minor));
}

std::vector<KnotRecord> parse_knot_table(std::istream& in, const std::string& source) {
    std::vector<KnotRecord> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view = trim(line);
        if (view.empty() || view.front() == '#') continue;
        const std::string where = source + ":" + std::to_string(number);
        std::vector<std::string_view> fields;
        while (true) {
            const auto cut = view.find(';');
            fields.push_back(trim(view.substr(0, cut)));
            if (cut == std::string_view::npos) break;
            view = view.substr(cut + 1);
        }
        if (fields.size() != 3 && fields.size() != 4)
            throw ParseError(where + ": expected 'name; strands; letters[; determinant]'");
        if (fields[0].empty()) throw ParseError(where + ": empty knot name");
        KnotRecord rec;
        rec.name = std::string(fields[0]);
        try {
            rec.braid = make_braid(to_int(fields[1], "strand count"), to_letters(fields[2]));
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
        rec.determinant = determinant(rec.braid);
        if (fields.size() == 4) {
            long long stored = 0;
            try {
                stored = to_int(fields[3], "determinant");
            } catch (const ParseError& e) {
                throw ParseError(where + ": " + e.what());
            }
            if (stored != rec.determinant)
                throw DataIntegrityError("knot " + rec.name + " (" + where + "): stored determinant " +
                                         std::to_string(stored) + " but the braid gives " +
                                         std::to_string(rec.determinant));
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<KnotRecord> load_knot_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open knot table '" + path + "'");
    return parse_knot_table(in, path);
}

const KnotRecord& find_knot(const std::vector<KnotRecord>& records, const std::string& name) {
    for (const auto& r : records)
        if (r.name == name) return r;
    throw DomainError("no knot named '" + name + "' in the table");
}

ColoringProfile coloring_profile(const std::vector<KnotRecord>& knots, const std::vector<Quandle>& quandles) {
    ColoringProfile p;
    for (const auto& k : knots) {
        auto& row = p.counts.emplace_back();
        for (const auto& q : quandles) row.push_back(count_colorings(k.braid, q));
    }
    auto group_by = [&](auto column_of) {
        std::vector<std::vector<std::size_t>> classes;
        std::map<decltype(column_of(0)), std::size_t> index;
        for (std::size_t j = 0; j < quandles.size(); ++j) {
            auto [it, fresh] = index.emplace(column_of(j), classes.size());
            if (fresh) classes.emplace_back();
            classes[it->second].push_back(j);
        }
        return classes;
    };
    p.count_classes = group_by([&](std::size_t j) {
        std::vector<std::uint64_t> col;
        for (const auto& row : p.counts) col.push_back(row[j]);
        return col;
    });
    p.nontrivial_classes = group_by([&](std::size_t j) {
        std::vector<bool> col;
        for (const auto& row : p.counts) col.push_back(row[j] > static_cast<std::uint64_t>(quandles[j].order()));
        return col;
    });
    return p;
}

} // namespace gq
