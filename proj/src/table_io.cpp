#include "gq/table_io.hpp"

#include "gq/error.hpp"

#include <fstream>
#include <sstream>

namespace gq {

std::vector<std::vector<int>> read_table(std::istream& in, bool transposed) {
    long long n = 0;
    if (!(in >> n)) throw ParseError("table file must start with its order");
    if (n < 1 || n > 4096) throw ParseError("table order " + std::to_string(n) + " is out of range");
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            long long v = 0;
            if (!(in >> v))
                throw ParseError("table ends early at row " + std::to_string(i) + ", column " + std::to_string(j));
            if (v < 0 || v >= n)
                throw MalformedError("entry " + std::to_string(v) + " at row " + std::to_string(i) +
                                     " is out of range 0.." + std::to_string(n - 1));
            auto& slot = transposed ? rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
                                    : rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            slot = static_cast<int>(v);
        }
    std::string extra;
    if (in >> extra) throw ParseError("unexpected trailing content '" + extra + "' after the table");
    return rows;
}

Quandle read_quandle(std::istream& in, bool transposed) { return Quandle::from_rows(read_table(in, transposed)); }

Quandle load_quandle(const std::string& path, bool transposed) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open table file '" + path + "'");
    return read_quandle(in, transposed);
}

void write_table(std::ostream& out, const Quandle& q) {
    out << q.order() << '\n';
    for (int a = 0; a < q.order(); ++a) {
        for (int b = 0; b < q.order(); ++b) out << (b ? " " : "") << q.op(a, b);
        out << '\n';
    }
}

} // namespace gq
