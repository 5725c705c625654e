#include "patsort/perm.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace patsort {

namespace {

void check_is_permutation(const std::vector<int>& vals) {
    const int n = static_cast<int>(vals.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : vals) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation value " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        if (seen[static_cast<size_t>(v)])
            throw std::invalid_argument("duplicate permutation value " + std::to_string(v));
        seen[static_cast<size_t>(v)] = 1;
    }
}

}  // namespace

Permutation Permutation::from_values(std::vector<int> vals) {
    check_is_permutation(vals);
    return Permutation(std::move(vals), unchecked_t{});
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("identity: n must be >= 0");
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(v), unchecked_t{});
}

Composition Composition::from_parts(std::vector<int> parts) {
    Composition c;
    c.total = 0;
    for (int part : parts) {
        if (part < 1) throw std::invalid_argument("composition parts must be >= 1");
        c.total += part;
    }
    c.parts = std::move(parts);
    return c;
}

Permutation parse_permutation(const std::string& text) {
    const bool separated =
        text.find_first_of(" \t\n\r,") != std::string::npos;
    std::vector<int> vals;
    if (separated) {
        std::string norm = text;
        std::replace(norm.begin(), norm.end(), ',', ' ');
        std::istringstream in(norm);
        std::string tok;
        while (in >> tok) {
            size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != tok.size())
                throw std::invalid_argument("non-numeric token \"" + tok + "\"");
            vals.push_back(v);
        }
    } else {
        if (text.empty()) throw std::invalid_argument("empty permutation text");
        if (text.size() > 9)
            throw std::invalid_argument(
                "compact digit form is limited to n <= 9; use separated form");
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                throw std::invalid_argument(std::string("non-numeric token \"") + c + "\"");
            vals.push_back(c - '0');
        }
    }
    return Permutation::from_values(std::move(vals));
}

std::string format_permutation(const Permutation& p) {
    std::string out;
    if (p.size() <= 9) {
        for (int v : p.values()) out += static_cast<char>('0' + v);
    } else {
        for (int i = 0; i < p.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(p[i]);
        }
    }
    return out;
}

Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> inv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(p[i] - 1)] = i + 1;
    return Permutation(std::move(inv), Permutation::unchecked_t{});
}

Permutation reverse_complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = n + 1 - p[n - 1 - i];
    return Permutation(std::move(out), Permutation::unchecked_t{});
}

std::vector<std::vector<int>> left_to_right_minima_decomposition(const Permutation& p) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> rest = p.values();
    while (!rest.empty()) {
        std::vector<int> block;
        std::vector<int> next;
        int running_min = rest.front() + 1;
        for (int v : rest) {
            if (v < running_min) {
                block.push_back(v);
                running_min = v;
            } else {
                next.push_back(v);
            }
        }
        blocks.push_back(std::move(block));
        rest = std::move(next);
    }
    return blocks;
}

std::uint64_t PermutationStream::factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

PermutationStream::PermutationStream(int n, std::uint64_t start_rank) : n_(n) {
    if (n < 0 || n > kEnumerationCap)
        throw std::invalid_argument("PermutationStream: n must be in 0.." +
                                    std::to_string(kEnumerationCap));
    const std::uint64_t total = factorial(n);
    if (start_rank >= total) {
        done_ = true;
        return;
    }
    // Unrank via the factorial number system.
    std::vector<int> pool;
    for (int i = 1; i <= n; ++i) pool.push_back(i);
    std::uint64_t r = start_rank;
    current_.reserve(static_cast<size_t>(n));
    for (int i = n; i >= 1; --i) {
        const std::uint64_t block = factorial(i - 1);
        const auto idx = static_cast<size_t>(r / block);
        r %= block;
        current_.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
}

bool PermutationStream::next(Permutation& out) {
    if (done_) return false;
    out = Permutation(current_, Permutation::unchecked_t{});
    if (!std::next_permutation(current_.begin(), current_.end())) done_ = true;
    return true;
}

Permutation random_permutation(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_permutation: n must be >= 0");
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    std::mt19937_64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<size_t>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(v[static_cast<size_t>(i)], v[j]);
    }
    return Permutation(std::move(v), Permutation::unchecked_t{});
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: n must be >= 0");
    std::vector<Composition> out;
    if (n == 0) return out;
    // Cut set bits: bit i set means a part boundary after position i+1.
    const std::uint32_t masks = 1u << (n - 1);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        Composition c;
        c.total = n;
        int part = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                c.parts.push_back(part);
                part = 1;
            } else {
                ++part;
            }
        }
        c.parts.push_back(part);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace patsort
