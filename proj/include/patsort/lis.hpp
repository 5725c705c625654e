#pragma once

#include <vector>

#include "patsort/perm.hpp"

namespace patsort {

// L_i = length of the longest increasing subsequence ending at position i.
struct LisTable {
    std::vector<int> lengths;

    int max() const;
};

// O(n^2) dynamic program: L_i = 1 + max{L_j : j < i, p_j < p_i}, or 1.
LisTable lis_table(const Permutation& p);

struct RowBumpTrace {
    std::vector<int> word;              // final increasing word w
    std::vector<int> insert_positions;  // 1-based slot each card landed in
};

// Single row bumping: each card either appends or bumps the left-most
// larger entry of w.  insert_positions[i] records the slot card i landed in.
RowBumpTrace row_bump_trace(const Permutation& p);

std::vector<int> row_bump_word(const Permutation& p);

// O(n log n) length via binary search over the increasing word.
int lis_length(const Permutation& p);
int lis_length(const std::vector<int>& values);

}  // namespace patsort
