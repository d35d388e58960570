#ifndef TFES_DETAIL_COMBINATIONS_HPP
#define TFES_DETAIL_COMBINATIONS_HPP

#include <cstddef>
#include <vector>

namespace tfes::detail {

// Lexicographically first size-c subset of [0, m): {0, 1, ..., c-1}.
inline std::vector<std::size_t> first_combination(std::size_t c) {
    std::vector<std::size_t> pick(c);
    for (std::size_t i = 0; i < c; ++i) pick[i] = i;
    return pick;
}

// Advances `pick` to the lexicographically next size-|pick| subset of
// [0, m). Returns false when exhausted.
inline bool next_combination(std::vector<std::size_t>& pick, std::size_t m) {
    const std::size_t c = pick.size();
    std::size_t i = c;
    while (i > 0) {
        --i;
        if (pick[i] + (c - i) < m) {
            ++pick[i];
            for (std::size_t j = i + 1; j < c; ++j) pick[j] = pick[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace tfes::detail

#endif
