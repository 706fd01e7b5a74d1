#include "symrep/characters.hpp"

#include "symrep/config.hpp"
#include "symrep/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace symrep {

long long class_size(const CycleType& rho, int n) {
    if (rho.n() > n) throw std::invalid_argument("class_size: cycle type exceeds degree");
    long long factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    std::map<int, int> multiplicity;
    for (int part : rho.parts()) multiplicity[part] += 1;
    multiplicity[1] += n - rho.n();
    long long denom = 1;
    for (const auto& [length, count] : multiplicity) {
        for (int c = 1; c <= count; ++c) denom *= static_cast<long long>(length) * c;
    }
    return factorial / denom;
}

long long MnEvaluator::eval(const SkewShape& shape, const CycleType& rho) {
    return eval_ordered(shape, rho.parts());
}

long long MnEvaluator::eval_ordered(const SkewShape& shape, const std::vector<int>& parts) {
    int total = 0;
    for (int part : parts) {
        if (part < 1) throw std::invalid_argument("mn_character: parts must be positive");
        total += part;
    }
    if (total != shape.box_count()) {
        throw std::invalid_argument("mn_character: cycle type size must match the box count");
    }
    if (shape.box_count() == 0) return 1;
    return grow(shape.outer(), shape.inner(), parts, 0);
}

long long MnEvaluator::grow(const Partition& outer, const Partition& current,
                            const std::vector<int>& parts, std::size_t next) {
    if (next == parts.size()) return current == outer ? 1 : 0;
    Key key{outer, current, std::vector<int>(parts.begin() + static_cast<long>(next), parts.end())};
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
    long long total = 0;
    int target = current.n() + parts[next];
    for (const Partition& grown : enumerate_partitions(target)) {
        if (!grown.contains(current) || !outer.contains(grown)) continue;
        auto height = skew_hook_height(SkewShape(grown, current));
        if (!height) continue;
        long long sign = (*height % 2 == 0) ? 1 : -1;
        total += sign * grow(outer, grown, parts, next + 1);
    }
    memo_[key] = total;
    return total;
}

long long mn_character(const SkewShape& shape, const CycleType& rho) {
    MnEvaluator evaluator;
    return evaluator.eval(shape, rho);
}

long long full_cycle_character(const SkewShape& shape) {
    if (shape.box_count() < 1) throw std::invalid_argument("full_cycle_character: empty shape");
    auto height = skew_hook_height(shape);
    if (!height) return 0;
    return *height % 2 == 0 ? 1 : -1;
}

long long hook_eigenvalue(int k, int b) {
    if (b < 0 || b > k - 1) throw std::invalid_argument("hook_eigenvalue: need 0 <= b <= k-1");
    long long value = 1;
    for (int i = 2; i <= b; ++i) value *= i;
    for (int i = 2; i <= k - b - 1; ++i) value *= i;
    return b % 2 == 0 ? value : -value;
}

bool is_hook(const Partition& shape) {
    if (shape.rows() == 0) return false;
    for (int r = 2; r <= shape.rows(); ++r) {
        if (shape.part(r) != 1) return false;
    }
    return true;
}

long long hook_multiplicity(const Partition& hook, const SkewShape& shape) {
    if (!is_hook(hook)) throw std::invalid_argument("hook_multiplicity: first shape must be a hook");
    int k = shape.box_count();
    if (hook.n() != k) throw std::invalid_argument("hook_multiplicity: size mismatch");
    MnEvaluator evaluator;
    long long sum = 0;
    long long factorial = 1;
    for (int i = 2; i <= k; ++i) factorial *= i;
    for (const CycleType& rho : enumerate_partitions(k)) {
        sum += class_size(rho, k) * evaluator.eval(SkewShape(hook), rho) *
               evaluator.eval(shape, rho);
    }
    if (sum % factorial != 0) throw std::logic_error("hook_multiplicity: non-integer inner product");
    return sum / factorial;
}

CharacterTable character_table(int n) {
    if (n < 1) throw std::invalid_argument("character_table: n must be >= 1");
    require_size(n, character_table_cap(), "character_table");
    CharacterTable table;
    table.n = n;
    table.partitions = enumerate_partitions(n);
    table.cycle_types = table.partitions;
    std::reverse(table.cycle_types.begin(), table.cycle_types.end());
    MnEvaluator evaluator;
    for (const Partition& shape : table.partitions) {
        std::vector<long long> row;
        row.reserve(table.cycle_types.size());
        for (const CycleType& rho : table.cycle_types) {
            row.push_back(evaluator.eval(SkewShape(shape), rho));
        }
        table.values.push_back(std::move(row));
    }
    return table;
}

} // namespace symrep
