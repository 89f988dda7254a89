#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropilift {

/// Weakly decreasing list of positive integers.
struct Partition {
    std::vector<long long> parts;

    Partition() = default;
    explicit Partition(std::vector<long long> p) : parts(std::move(p)) {
        for (long long x : parts)
            if (x < 1) throw std::invalid_argument("partition entries must be >= 1");
        std::sort(parts.rbegin(), parts.rend());
    }

    long long sum() const { return std::accumulate(parts.begin(), parts.end(), 0LL); }
    size_t length() const { return parts.size(); }
    bool trivial() const {
        return std::all_of(parts.begin(), parts.end(), [](long long x) { return x == 1; });
    }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

}  // namespace tropilift
