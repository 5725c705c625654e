#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace patsort {

// A permutation of [n] in one-line form.  Values are 1-based, storage is
// 0-indexed: p[i] is the value at position i+1.  Immutable after construction.
class Permutation {
public:
    Permutation() = default;

    // Validates that vals is a rearrangement of 1..n.
    static Permutation from_values(std::vector<int> vals);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(vals_.size()); }
    int operator[](int i) const { return vals_[static_cast<size_t>(i)]; }
    const std::vector<int>& values() const { return vals_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.vals_ < b.vals_;
    }

    struct unchecked_t {};
    // Internal fast path for enumeration; caller guarantees validity.
    Permutation(std::vector<int> vals, unchecked_t) : vals_(std::move(vals)) {}

private:
    std::vector<int> vals_;
};

// A sequence of distinct values drawn from [ambient_n], kept in order.
struct PartialPermutation {
    std::vector<int> values;
    int ambient_n = 0;
};

// gamma |= n: ordered parts, every part >= 1.
struct Composition {
    std::vector<int> parts;
    int total = 0;

    static Composition from_parts(std::vector<int> parts);
};

// Parses either compact digits ("64518723", n <= 9) or whitespace/comma
// separated integers ("3 10 1 2 ...").  Throws std::invalid_argument naming
// the offending token otherwise.
Permutation parse_permutation(const std::string& text);

// Compact digits iff n <= 9, otherwise space separated.
std::string format_permutation(const Permutation& p);

Permutation inverse(const Permutation& p);

// r[i] = n+1 - p[n+1-i] (1-based); an involution on S_n.
Permutation reverse_complement(const Permutation& p);

// Blocks s_1, s_2, ... where s_i is the left-to-right minima subsequence of
// p with s_1..s_{i-1} removed.  Each block is strictly decreasing.
std::vector<std::vector<int>> left_to_right_minima_decomposition(const Permutation& p);

inline constexpr int kEnumerationCap = 12;

// Calls fn for every element of S_n in lexicographic order.
// n > kEnumerationCap is refused unless allow_large is set.
template <typename F>
void for_each_permutation(int n, F&& fn, bool allow_large = false) {
    if (n < 0) throw std::invalid_argument("for_each_permutation: n must be >= 0");
    if (n > kEnumerationCap && !allow_large)
        throw std::invalid_argument("for_each_permutation: n > " +
                                    std::to_string(kEnumerationCap) +
                                    " refused (enumeration cap); opt in explicitly");
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    do {
        const Permutation p(v, Permutation::unchecked_t{});
        fn(p);
    } while (std::next_permutation(v.begin(), v.end()));
}

// Restartable enumeration stream over S_n in lexicographic order.  Streams
// started at different ranks are independent, so brute-force sweeps can be
// partitioned across workers.
class PermutationStream {
public:
    explicit PermutationStream(int n, std::uint64_t start_rank = 0);

    // Returns false when the stream is exhausted.
    bool next(Permutation& out);

    static std::uint64_t factorial(int n);

    int size() const { return n_; }

private:
    int n_;
    bool done_ = false;
    std::vector<int> current_;
};

// Deterministic Fisher-Yates shuffle of 1..n driven by mt19937_64(seed).
Permutation random_permutation(int n, std::uint64_t seed);

// All 2^(n-1) compositions of n, in lexicographic order of their cut sets.
std::vector<Composition> compositions_of(int n);

}  // namespace patsort
