#ifndef DOWLING_GROUP_HPP
#define DOWLING_GROUP_HPP

#include <string>
#include <vector>

#include "dowling/int.hpp"

namespace dowling {

// Finite group given by its multiplication table over element indices
// 0..order-1, with the identity fixed at index 0.  Construction checks
// closure, the identity law, inverses and associativity exhaustively.
class FiniteGroup {
public:
    static constexpr int identity = 0;

    static FiniteGroup from_table(const std::vector<std::vector<int>>& table);
    static FiniteGroup cyclic(int m);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    int order() const { return order_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
    int inv(int a) const { return inverse_[static_cast<size_t>(a)]; }

    std::vector<std::vector<int>> table_rows() const;

    // Short description for reports, e.g. "Z4" or "group(order=6)".
    const std::string& name() const { return name_; }

    bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

private:
    int order_ = 1;
    std::vector<int> table_ = {0};  // row-major order x order
    std::vector<int> inverse_ = {0};
    std::string name_ = "Z1";

    FiniteGroup() = default;
    void validate() const;
};

// Accepts "Z<m>" or direct products "Z<a>xZ<b>" (any number of factors).
FiniteGroup parse_group(const std::string& spec);

}  // namespace dowling

#endif
