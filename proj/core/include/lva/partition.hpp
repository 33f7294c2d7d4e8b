#ifndef LVA_PARTITION_HPP
#define LVA_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lva {

/// Finite non-increasing sequence of positive integers. The empty
/// partition (weight 0) is allowed.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> p) : parts_(p) { validate(); }
    explicit Partition(std::vector<int> p) : parts_(std::move(p)) { validate(); }

    // Sorts and drops zeros instead of rejecting.
    static Partition from_unsorted(std::vector<int> p) {
        std::erase(p, 0);
        std::sort(p.begin(), p.end(), std::greater<>());
        return Partition(std::move(p));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    auto operator<=>(const Partition&) const = default;

private:
    void validate() const {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("partition parts must be non-increasing");
        }
    }
    std::vector<int> parts_;
};

/// All partitions of n, in lexicographically decreasing order of part lists.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// All partitions of weight <= n (including the empty one).
inline std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int w = 0; w <= n; ++w)
        for (auto& p : partitions_of(w)) out.push_back(std::move(p));
    return out;
}

} // namespace lva

#endif
