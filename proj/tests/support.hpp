#pragma once

#include "edmcp/matrix.hpp"

#include <initializer_list>
#include <vector>

namespace test {

inline edmcp::Rational Q(long p, long q = 1) { return edmcp::make_rational(p, q); }

inline edmcp::SymMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<edmcp::Scalar> entries;
    for (const auto& r : rows)
        for (long x : r) entries.emplace_back(x);
    return edmcp::SymMatrix::from_entries(rows.size(), std::move(entries));
}

inline edmcp::Vector vec(std::initializer_list<long> xs) {
    edmcp::Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace test
