#pragma once

#include "symrep/partition.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace symrep {

/// Conjugacy class of S_k: the partition of cycle lengths.
using CycleType = Partition;

/// Number of permutations of cycle type rho in S_n (rho padded with fixed
/// points up to n).
long long class_size(const CycleType& rho, int n);

/// Murnaghan-Nakayama character value chi^{outer/inner}(rho): signed count
/// of chains of skew-hook strips realizing the cycle type, peeled largest
/// part first with memoization. One evaluator may be shared across many
/// cells of a table; it is not thread-safe.
class MnEvaluator {
public:
    long long eval(const SkewShape& shape, const CycleType& rho);
    /// Same sum with the strip sizes consumed in the given order.
    long long eval_ordered(const SkewShape& shape, const std::vector<int>& parts);

private:
    using Key = std::tuple<Partition, Partition, std::vector<int>>;

    long long grow(const Partition& outer, const Partition& current,
                   const std::vector<int>& parts, std::size_t next);

    std::map<Key, long long> memo_;
};

long long mn_character(const SkewShape& shape, const CycleType& rho);

/// chi^{shape} on the full cycle: (-1)^height for a skew hook, 0 otherwise.
long long full_cycle_character(const SkewShape& shape);

/// Eigenvalue (-1)^b b! (k-b-1)! of X_2...X_k on the hook (k-b, 1^b).
long long hook_eigenvalue(int k, int b);

/// True for shapes (a+1, 1^b).
bool is_hook(const Partition& shape);

/// Multiplicity of the hook module (a+1, 1^b) in the skew module, as the
/// character inner product over cycle types.
long long hook_multiplicity(const Partition& hook, const SkewShape& shape);

struct CharacterTable {
    int n = 0;
    std::vector<Partition> partitions;   ///< rows, canonical order
    std::vector<CycleType> cycle_types;  ///< columns, identity class first
    std::vector<std::vector<long long>> values;
};

/// Full character table of S_n via the Murnaghan-Nakayama rule.
CharacterTable character_table(int n);

} // namespace symrep
