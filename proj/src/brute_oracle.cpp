#include "bpart/brute_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace bpart {

namespace {

// Symbols 0..2n-1 stand for 1..n, -1..-n.
int index_to_symbol(int i, int n) { return i < n ? i + 1 : -(i - n + 1); }

std::vector<std::vector<int>> blocks_from_rgs(const std::vector<int>& rgs, int n) {
    int nblocks = 0;
    for (int c : rgs) nblocks = std::max(nblocks, c + 1);
    std::vector<std::vector<int>> blocks(nblocks);
    for (size_t i = 0; i < rgs.size(); ++i)
        blocks[rgs[i]].push_back(index_to_symbol(static_cast<int>(i), n));
    return blocks;
}

}  // namespace

SignedBlockPartition canonicalize(int n, std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        int ma = std::abs(a.front());
        for (int x : a) ma = std::min(ma, std::abs(x));
        int mb = std::abs(b.front());
        for (int x : b) mb = std::min(mb, std::abs(x));
        if (ma != mb) return ma < mb;
        return a < b;
    });
    return SignedBlockPartition{n, std::move(blocks)};
}

bool validate_partition(const SignedBlockPartition& p) {
    if (p.n < 1) return false;
    std::set<int> seen;
    std::set<std::vector<int>> block_set;
    int self_negated = 0;
    for (const auto& block : p.blocks) {
        if (block.empty()) return false;
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        for (int x : sorted) {
            if (x == 0 || std::abs(x) > p.n) return false;
            if (!seen.insert(x).second) return false;  // duplicate element
        }
        std::vector<int> negated;
        for (int x : sorted) negated.push_back(-x);
        std::sort(negated.begin(), negated.end());
        if (negated == sorted) ++self_negated;
        block_set.insert(std::move(sorted));
    }
    if (seen.size() != static_cast<size_t>(2 * p.n)) return false;
    if (self_negated > 1) return false;
    // Closure: -B present for every block B.
    for (const auto& block : block_set) {
        std::vector<int> negated;
        for (int x : block) negated.push_back(-x);
        std::sort(negated.begin(), negated.end());
        if (!block_set.count(negated)) return false;
    }
    return true;
}

int block_pair_count(const SignedBlockPartition& p) {
    int non_self_negated = 0;
    for (const auto& block : p.blocks) {
        std::vector<int> negated;
        for (int x : block) negated.push_back(-x);
        std::sort(negated.begin(), negated.end());
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        if (negated != sorted) ++non_self_negated;
    }
    return non_self_negated / 2;
}

std::vector<SignedBlockPartition> enumerate_bn(int n, bool allow_zero_block) {
    if (n < 1 || n > kMaxEnumerationN)
        throw std::out_of_range("enumerate_bn: n must be in [1, 5]");

    // Walk all set partitions of the 2n symbols as restricted growth
    // strings, then keep the ones satisfying the signed invariants.
    const int m = 2 * n;
    std::vector<SignedBlockPartition> out;
    std::vector<int> rgs(m, 0);

    auto visit = [&]() {
        auto part = canonicalize(n, blocks_from_rgs(rgs, n));
        if (!validate_partition(part)) return;
        const bool has_zero_block =
            part.blocks.size() != 2 * static_cast<size_t>(block_pair_count(part));
        if (allow_zero_block || !has_zero_block) out.push_back(std::move(part));
    };

    auto rec = [&](auto&& self, int i, int max_class) -> void {
        if (i == m) {
            visit();
            return;
        }
        for (int c = 0; c <= max_class + 1; ++c) {
            rgs[i] = c;
            self(self, i + 1, std::max(max_class, c));
        }
    };
    rec(rec, 1, 0);  // rgs[0] is pinned to class 0
    return out;
}

std::vector<std::int64_t> count_by_pairs(int n, bool allow_zero_block) {
    std::vector<std::int64_t> counts(n + 1, 0);
    for (const auto& part : enumerate_bn(n, allow_zero_block))
        ++counts[block_pair_count(part)];
    return counts;
}

}  // namespace bpart
