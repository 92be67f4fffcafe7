#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace arstat {

/// Occupation numbers (n_1, ..., n_r) of a Fock state, or the exponents of a
/// monomial on the Bargmann side. Modes are indexed from 0 in code.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t modes) : n_(modes, 0) {}
    MultiIndex(std::initializer_list<int> n) : n_(n) {}
    explicit MultiIndex(std::vector<int> n) : n_(std::move(n)) {}

    std::size_t modes() const noexcept { return n_.size(); }
    int operator[](std::size_t i) const { return n_[i]; }
    int& operator[](std::size_t i) { return n_[i]; }
    const std::vector<int>& values() const noexcept { return n_; }

    int total() const noexcept { return std::accumulate(n_.begin(), n_.end(), 0); }
    bool is_vacuum() const noexcept { return total() == 0; }

    MultiIndex raised(std::size_t i) const {
        MultiIndex m = *this;
        ++m.n_[i];
        return m;
    }
    MultiIndex lowered(std::size_t i) const {
        MultiIndex m = *this;
        --m.n_[i];
        return m;
    }

    std::string to_string() const;

    // Graded lexicographic: total occupation first, then lexicographic.
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
        if (auto c = a.total() <=> b.total(); c != 0) return c;
        return a.n_ <=> b.n_;
    }
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> n_;
};

inline std::string MultiIndex::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < n_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(n_[i]);
    }
    return s + ")";
}

}  // namespace arstat
