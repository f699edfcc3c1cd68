#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace spinqw {

// Occupation numbers per column: counts[c] paths at column c.
struct MultiplicityVector {
    std::vector<int> counts;
    bool saturated_zero = false; // column 0 carries infinitely many paths

    int operator[](std::size_t c) const { return c < counts.size() ? counts[c] : 0; }
    bool operator==(const MultiplicityVector&) const = default;
};

// Weakly decreasing sequence of non-negative integers; zero parts are kept.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    static Partition parse(std::string_view text);
    // Rebuild a partition from column occupations (counts[c] parts equal to c).
    static Partition from_multiplicities(const std::vector<int>& counts);

    std::string str() const;

    const std::vector<int>& parts() const { return parts_; }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t size() const { return parts_.size(); }
    int length() const;
    int weight() const;
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const { return length() == 0; }

    Partition positive() const;
    Partition padded(std::size_t n) const;
    Partition conjugate() const;
    MultiplicityVector multiplicities() const;
    int multiplicity(int value) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

// True when positive parts satisfy lambda_1 >= mu_1 >= lambda_2 >= ... and 0 <= l(lambda) - l(mu) <= 1.
bool interlaces(const Partition& lambda, const Partition& mu);
// Young-diagram containment of positive parts.
bool contains(const Partition& lambda, const Partition& mu);
bool is_vertical_strip(const Partition& lambda, const Partition& mu);

// Positive partitions with parts <= max_part, length <= max_length, weight <= max_weight
// (negative max_weight means unbounded), by increasing weight and then decreasing parts.
std::vector<Partition> enumerate_partitions(int max_part, int max_length, int max_weight = -1);

// Partitions with exactly n parts (zeros allowed) and largest part <= max_part.
std::vector<Partition> partitions_with_size(int n, int max_part);

} // namespace spinqw
