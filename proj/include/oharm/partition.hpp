#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace oharm {

/* An integer partition in normal form: weakly decreasing positive parts with
 * trailing zeros stripped, so (3,2) and (3,2,0,0) are the same object. The
 * empty partition is the unique partition of 0. */
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(const std::vector<int>& parts);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }

    // 1-based part access; parts beyond length() are 0.
    int part(int i) const;
    int first() const { return part(1); }
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition&) const = default;

    // Renders as "[3,2,1]"; the empty partition renders as "[]".
    std::string str() const;

private:
    void normalize();

    std::vector<int> parts_;
    int size_ = 0;
};

/* Canonical order used everywhere for iteration and output: smaller size
 * first, then reverse-lexicographic on the part sequences, so the partitions
 * of n run (n), (n-1,1), ..., (1^n). */
struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

// All partitions of n, in canonical order.
std::vector<Partition> partitions_of(int n);

// inner_i <= outer_i for all i (Young-diagram containment).
bool contains(const Partition& inner, const Partition& outer);

// contains(inner, outer) and outer/inner has at most one cell per column,
// equivalently outer_{i+1} <= inner_i for all i >= 1.
bool is_horizontal_strip(const Partition& inner, const Partition& outer);

// All lambda obtained from base by adding a horizontal k-strip (the Pieri
// rule for s_base * h_k), in canonical order, without duplicates.
std::vector<Partition> pieri_h(const Partition& base, int k);

// All partitions of n with every part even; empty for odd n.
std::vector<Partition> even_partitions(int n);

}  // namespace oharm
