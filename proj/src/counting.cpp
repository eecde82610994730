#include "gq/counting.hpp"

#include "gq/error.hpp"
#include "gq/galkin.hpp"

namespace gq {

const std::array<std::uint64_t, 100> kPublishedClassCounts = {
    1, 2, 2, 5,  2, 4, 2,  10, 5, 4, 2, 10, 2,  4,  4,  20, 2, 10, 2, 10, 4, 4,  2, 20, 5,
    4, 10, 10, 2, 8, 2, 36, 4, 4, 4, 25, 2,  4,  4,  20, 2, 8,  2, 10, 10, 4, 2, 40, 5, 10,
    4, 10, 2, 20, 4, 20, 4, 4, 2, 20, 2, 4,  10, 65, 4, 8,  2, 10, 4, 8,  2, 50, 2, 4,  10,
    10, 4, 8, 2, 40, 20, 4, 2, 20, 4, 4, 4,  20, 2, 20, 4, 10, 4, 4,  4,  72, 2, 10, 10, 25,
};

std::uint64_t partition_count(int m) {
    if (m < 0) throw DomainError("partition count of a negative number");
    // After the pass for `part`, p[k] counts partitions of k into parts <= part.
    std::vector<std::uint64_t> p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= m; ++part)
        for (int k = part; k <= m; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
    return p[static_cast<std::size_t>(m)];
}

std::uint64_t galkin_class_count(int n) {
    if (n < 1) throw DomainError("class count needs n >= 1, got " + std::to_string(n));
    std::uint64_t total = 1;
    for (auto [prime, e] : factorize(n)) {
        std::uint64_t local = 0;
        for (int m = 0; m <= e; ++m) local += partition_count(m) * partition_count(e - m);
        total *= local;
    }
    return total;
}

CrosscheckReport crosscheck(int n_max, int classify_max, const BruteForceLimits& limits) {
    if (n_max < 1) throw DomainError("crosscheck needs n_max >= 1");
    CrosscheckReport report;
    for (int n = 1; n <= n_max; ++n) {
        CrosscheckRow row;
        row.n = n;
        row.formula = galkin_class_count(n);
        if (n <= static_cast<int>(kPublishedClassCounts.size()))
            row.published = kPublishedClassCounts[static_cast<std::size_t>(n - 1)];
        if (n <= classify_max) row.classified = classify_order(3 * n, limits).size();
        row.ok = (row.published == 0 || row.published == row.formula) &&
                 (row.classified == 0 || row.classified == row.formula);
        if (!row.ok)
            report.discrepancies.push_back("n=" + std::to_string(n) + ": formula " + std::to_string(row.formula) +
                                           ", classified " + std::to_string(row.classified) + ", published " +
                                           std::to_string(row.published));
        report.rows.push_back(row);
    }
    return report;
}

} // namespace gq
