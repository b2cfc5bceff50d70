#ifndef BPART_BRUTE_ORACLE_HPP
#define BPART_BRUTE_ORACLE_HPP

#include <cstdint>
#include <vector>

namespace bpart {

// Ground-truth enumeration of signed set partitions, straight from the
// definition: a partition of {±1,...,±n} whose block set is closed under
// negation, with at most one self-negated block (the zero-block). Kept
// independent of the triangle recurrences on purpose.
struct SignedBlockPartition {
    int n = 0;
    // Canonical form: within a block elements ascending; blocks ordered by
    // minimal absolute element (ties broken by the signed value).
    std::vector<std::vector<int>> blocks;

    bool operator==(const SignedBlockPartition&) const = default;
};

// Largest n we exhaustively enumerate (Bell(10) = 115975 candidates at n = 5).
inline constexpr int kMaxEnumerationN = 5;

// All signed partitions of {±1..±n}, duplicate-free, canonical order.
// With allow_zero_block = false, partitions containing a self-negated
// block are excluded. Throws std::out_of_range for n < 1 or n > 5.
std::vector<SignedBlockPartition> enumerate_bn(int n, bool allow_zero_block);

// counts[k] = number of enumerated partitions with exactly k block pairs.
std::vector<std::int64_t> count_by_pairs(int n, bool allow_zero_block);

// Number of non-self-negated block pairs of a valid partition.
int block_pair_count(const SignedBlockPartition& p);

// True iff the blocks partition {±1..±n} exactly, the block set is closed
// under negation, and at most one block is self-negated.
bool validate_partition(const SignedBlockPartition& p);

SignedBlockPartition canonicalize(int n, std::vector<std::vector<int>> blocks);

}  // namespace bpart

#endif  // BPART_BRUTE_ORACLE_HPP
