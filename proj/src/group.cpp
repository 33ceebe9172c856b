#include "dowling/group.hpp"

#include <cctype>
#include <stdexcept>

namespace dowling {

void FiniteGroup::validate() const {
    const int m = order_;
    if (m < 1) throw std::invalid_argument("group order must be >= 1");
    if (static_cast<int>(table_.size()) != m * m) throw std::invalid_argument("group table must be order x order");
    for (int x : table_)
        if (x < 0 || x >= m) throw std::invalid_argument("group table entry out of range");
    for (int a = 0; a < m; ++a)
        if (mul(0, a) != a || mul(a, 0) != a)
            throw std::invalid_argument("index 0 is not a two-sided identity");
    for (int a = 0; a < m; ++a)
        if (mul(a, inverse_[static_cast<size_t>(a)]) != 0 || mul(inverse_[static_cast<size_t>(a)], a) != 0)
            throw std::invalid_argument("element without two-sided inverse");
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("group table is not associative");
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
    FiniteGroup g;
    g.order_ = static_cast<int>(table.size());
    g.table_.clear();
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != g.order_)
            throw std::invalid_argument("group table must be square");
        g.table_.insert(g.table_.end(), row.begin(), row.end());
    }
    g.inverse_.assign(static_cast<size_t>(g.order_), -1);
    for (int a = 0; a < g.order_; ++a) {
        for (int b = 0; b < g.order_; ++b) {
            if (g.table_[static_cast<size_t>(a) * g.order_ + b] == 0) {
                g.inverse_[static_cast<size_t>(a)] = b;
                break;
            }
        }
        if (g.inverse_[static_cast<size_t>(a)] < 0)
            throw std::invalid_argument("element without inverse in group table");
    }
    g.name_ = "group(order=" + std::to_string(g.order_) + ")";
    g.validate();
    return g;
}

FiniteGroup FiniteGroup::cyclic(int m) {
    if (m < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    FiniteGroup g;
    g.order_ = m;
    g.table_.resize(static_cast<size_t>(m) * m);
    g.inverse_.resize(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) {
        g.inverse_[static_cast<size_t>(a)] = (m - a) % m;
        for (int b = 0; b < m; ++b) g.table_[static_cast<size_t>(a) * m + b] = (a + b) % m;
    }
    g.name_ = "Z" + std::to_string(m);
    return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    const int m = a.order() * b.order();
    g.order_ = m;
    g.table_.resize(static_cast<size_t>(m) * m);
    g.inverse_.resize(static_cast<size_t>(m));
    // element (x, y) <-> x * |b| + y, so identity (0,0) stays at index 0
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1) {
            const int e1 = x1 * b.order() + y1;
            g.inverse_[static_cast<size_t>(e1)] = a.inv(x1) * b.order() + b.inv(y1);
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2) {
                    const int e2 = x2 * b.order() + y2;
                    g.table_[static_cast<size_t>(e1) * m + e2] = a.mul(x1, x2) * b.order() + b.mul(y1, y2);
                }
        }
    g.name_ = a.name() + "x" + b.name();
    return g;
}

std::vector<std::vector<int>> FiniteGroup::table_rows() const {
    std::vector<std::vector<int>> rows(static_cast<size_t>(order_));
    for (int a = 0; a < order_; ++a)
        rows[static_cast<size_t>(a)].assign(table_.begin() + static_cast<long>(a) * order_,
                                            table_.begin() + static_cast<long>(a + 1) * order_);
    return rows;
}

FiniteGroup parse_group(const std::string& spec) {
    size_t pos = 0;
    auto factor = [&]() {
        if (pos >= spec.size() || (spec[pos] != 'Z' && spec[pos] != 'z'))
            throw ParseError("group spec must look like Z<m> or Z<a>xZ<b>: '" + spec + "'");
        ++pos;
        size_t start = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
        if (pos == start) throw ParseError("missing order in group spec '" + spec + "'");
        const int m = std::stoi(spec.substr(start, pos - start));
        if (m < 1) throw ParseError("group order must be >= 1");
        return FiniteGroup::cyclic(m);
    };
    FiniteGroup g = factor();
    while (pos < spec.size()) {
        if (spec[pos] != 'x' && spec[pos] != 'X') throw ParseError("expected 'x' between group factors");
        ++pos;
        g = FiniteGroup::direct_product(g, factor());
    }
    return g;
}

}  // namespace dowling
