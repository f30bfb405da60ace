#include "oharm/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace oharm {

Partition::Partition(std::initializer_list<int> parts)
    : parts_(parts) {
    normalize();
}

Partition::Partition(const std::vector<int>& parts)
    : parts_(parts) {
    normalize();
}

void Partition::normalize() {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    size_ = 0;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::domain_error("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("Partition: parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

int Partition::part(int i) const {
    if (i < 1)
        throw std::domain_error("Partition::part: index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

std::string Partition::str() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    s += "]";
    return s;
}

bool PartitionLess::operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size())
        return a.size() < b.size();
    int len = std::max(a.length(), b.length());
    for (int i = 1; i <= len; ++i) {
        if (a.part(i) != b.part(i))
            return a.part(i) > b.part(i);
    }
    return false;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

// Chooses the new length of row `row` so that the skew stays a horizontal
// strip; larger choices first keeps the output in canonical order.
void gen_pieri(const Partition& base, int row, int remaining,
               std::vector<int>& cur, std::vector<Partition>& out) {
    if (row > base.length() + 1) {
        if (remaining == 0)
            out.push_back(Partition(cur));
        return;
    }
    int lo = base.part(row);
    int hi = row == 1 ? base.part(1) + remaining
                      : std::min(base.part(row - 1), lo + remaining);
    for (int v = hi; v >= lo; --v) {
        // Rows below can absorb at most sum of base parts there plus nothing:
        // each later row i satisfies v_i <= base_{i-1}, so the strip below is
        // bounded; let recursion prune instead of precomputing.
        cur.push_back(v);
        gen_pieri(base, row + 1, remaining - (v - lo), cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw std::domain_error("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    if (n == 0)
        out.assign(1, Partition{});
    return out;
}

bool contains(const Partition& inner, const Partition& outer) {
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i))
            return false;
    return true;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
    if (!contains(inner, outer))
        return false;
    for (int i = 1; i <= outer.length(); ++i)
        if (outer.part(i + 1) > inner.part(i))
            return false;
    return true;
}

std::vector<Partition> pieri_h(const Partition& base, int k) {
    if (k < 0)
        throw std::domain_error("pieri_h: k must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_pieri(base, 1, k, cur, out);
    return out;
}

std::vector<Partition> even_partitions(int n) {
    std::vector<Partition> out;
    for (const Partition& lam : partitions_of(n)) {
        bool even = true;
        for (int p : lam.parts())
            if (p % 2) { even = false; break; }
        if (even)
            out.push_back(lam);
    }
    return out;
}

}  // namespace oharm
