// Integer partitions in canonical decreasing order, used to index Chern
// numbers and the basis of products of projective spaces.
#pragma once

#include <string>
#include <vector>

namespace cobord {

using Partition = std::vector<int>;  // weakly decreasing positive parts

/// All partitions of d, each weakly decreasing, listed largest-part-first:
/// (d), (d-1,1), ..., (1,...,1). partitions_of(0) = { () }.
inline std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    if (d >= 0)
        rec(rec, d, d == 0 ? 1 : d);
    return out;
}

/// "c2*c1^2" for (2,1,1); "1" for the empty partition.
inline std::string partition_chern_label(const Partition& p) {
    if (p.empty())
        return "1";
    std::string s;
    for (size_t i = 0; i < p.size();) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i])
            ++j;
        if (!s.empty())
            s += "*";
        s += "c" + std::to_string(p[i]);
        if (j - i > 1)
            s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

/// "(2,1,1)" — the bracketed form used in tables and JSON.
inline std::string partition_str(const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

}  // namespace cobord
