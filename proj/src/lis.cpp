#include "patsort/lis.hpp"

#include <algorithm>

namespace patsort {

int LisTable::max() const {
    int best = 0;
    for (int v : lengths) best = std::max(best, v);
    return best;
}

LisTable lis_table(const Permutation& p) {
    const int n = p.size();
    LisTable table;
    table.lengths.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        int best = 0;
        for (int j = 0; j < i; ++j)
            if (p[j] < p[i]) best = std::max(best, table.lengths[static_cast<size_t>(j)]);
        table.lengths[static_cast<size_t>(i)] = best + 1;
    }
    return table;
}

RowBumpTrace row_bump_trace(const Permutation& p) {
    RowBumpTrace trace;
    trace.insert_positions.reserve(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) {
        const int card = p[i];
        auto it = std::lower_bound(trace.word.begin(), trace.word.end(), card);
        trace.insert_positions.push_back(
            static_cast<int>(it - trace.word.begin()) + 1);
        if (it == trace.word.end())
            trace.word.push_back(card);
        else
            *it = card;
    }
    return trace;
}

std::vector<int> row_bump_word(const Permutation& p) {
    return row_bump_trace(p).word;
}

int lis_length(const std::vector<int>& values) {
    std::vector<int> word;
    for (int card : values) {
        auto it = std::lower_bound(word.begin(), word.end(), card);
        if (it == word.end())
            word.push_back(card);
        else
            *it = card;
    }
    return static_cast<int>(word.size());
}

int lis_length(const Permutation& p) { return lis_length(p.values()); }

}  // namespace patsort
