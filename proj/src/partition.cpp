#include "symrep/partition.hpp"

#include "symrep/config.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace symrep {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int r) const {
    if (r < 1) throw std::invalid_argument("row index is 1-based");
    if (r > rows()) return 0;
    return parts_[static_cast<std::size_t>(r - 1)];
}

bool Partition::contains(const Partition& inner) const {
    for (int r = 1; r <= inner.rows(); ++r) {
        if (inner.part(r) > part(r)) return false;
    }
    return true;
}

bool revlex_greater(const Partition& a, const Partition& b) {
    return a.parts() > b.parts();
}

namespace {

void extend_partitions(std::vector<int>& prefix, int remaining, int max_part,
                       std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        extend_partitions(prefix, remaining - p, p, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    require_size(n, enumeration_size_cap(), "enumerate_partitions");
    std::vector<Partition> out;
    std::vector<int> prefix;
    extend_partitions(prefix, n, n == 0 ? 1 : n, out);
    return out;
}

YoungNeighbors young_graph_neighbors(const Partition& shape) {
    YoungNeighbors result;
    // Corners bottom-up: removing from a lower row gives the revlex-larger parent.
    for (int r = shape.rows(); r >= 1; --r) {
        if (shape.part(r) > shape.part(r + 1)) {
            std::vector<int> parts = shape.parts();
            parts[static_cast<std::size_t>(r - 1)] -= 1;
            if (parts.back() == 0) parts.pop_back();
            result.parents.emplace_back(std::move(parts));
        }
    }
    // Addable boxes top-down, then a new row.
    for (int r = 1; r <= shape.rows(); ++r) {
        if (r == 1 || shape.part(r - 1) > shape.part(r)) {
            std::vector<int> parts = shape.parts();
            parts[static_cast<std::size_t>(r - 1)] += 1;
            result.children.emplace_back(std::move(parts));
        }
    }
    std::vector<int> extended = shape.parts();
    extended.push_back(1);
    result.children.emplace_back(std::move(extended));
    return result;
}

long long young_path_count(const Partition& from, const Partition& to) {
    if (from.n() > to.n() || !to.contains(from)) return 0;
    std::map<Partition, long long> level{{from, 1}};
    for (int size = from.n(); size < to.n(); ++size) {
        std::map<Partition, long long> next;
        for (const auto& [shape, count] : level) {
            for (const Partition& child : young_graph_neighbors(shape).children) {
                if (to.contains(child)) next[child] += count;
            }
        }
        level = std::move(next);
    }
    auto it = level.find(to);
    return it == level.end() ? 0 : it->second;
}

SkewShape::SkewShape(const Partition& straight) : outer_(straight) {}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) {
        throw std::invalid_argument("skew shape requires inner inside outer");
    }
}

bool SkewShape::contains(int row, int col) const {
    if (row < 1 || row > rows()) return false;
    return col >= row_first(row) && col <= row_last(row);
}

std::vector<Box> SkewShape::boxes() const {
    std::vector<Box> out;
    out.reserve(static_cast<std::size_t>(box_count()));
    for (int r = 1; r <= rows(); ++r) {
        for (int c = row_first(r); c <= row_last(r); ++c) out.push_back(Box{r, c});
    }
    return out;
}

std::optional<int> skew_hook_height(const SkewShape& shape) {
    if (shape.box_count() < 1) throw std::invalid_argument("skew_hook_height: empty shape");
    std::vector<Box> cells = shape.boxes();
    std::vector<int> contents;
    contents.reserve(cells.size());
    for (const Box& b : cells) contents.push_back(b.content());
    std::sort(contents.begin(), contents.end());
    if (std::adjacent_find(contents.begin(), contents.end()) != contents.end()) {
        return std::nullopt; // two boxes on one diagonal
    }
    if (connected_components(shape).size() != 1) return std::nullopt;
    int first_row = cells.front().row;
    int last_row = cells.back().row;
    return last_row - first_row;
}

std::vector<SkewShape> connected_components(const SkewShape& shape) {
    std::vector<Box> cells = shape.boxes();
    std::vector<int> component(cells.size(), -1);
    auto find_cell = [&](int row, int col) -> int {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].row == row && cells[i].col == col) return static_cast<int>(i);
        }
        return -1;
    };
    int count = 0;
    for (std::size_t seed = 0; seed < cells.size(); ++seed) {
        if (component[seed] >= 0) continue;
        std::vector<std::size_t> stack{seed};
        component[seed] = count;
        while (!stack.empty()) {
            const Box b = cells[stack.back()];
            stack.pop_back();
            const int deltas[4][2] = {{0, 1}, {0, -1}, {1, 0}, {-1, 0}};
            for (const auto& d : deltas) {
                int j = find_cell(b.row + d[0], b.col + d[1]);
                if (j >= 0 && component[static_cast<std::size_t>(j)] < 0) {
                    component[static_cast<std::size_t>(j)] = count;
                    stack.push_back(static_cast<std::size_t>(j));
                }
            }
        }
        ++count;
    }
    std::vector<SkewShape> out;
    for (int id = 0; id < count; ++id) {
        int row_min = 0, row_max = 0;
        bool first = true;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (component[i] != id) continue;
            if (first || cells[i].row < row_min) row_min = cells[i].row;
            if (first || cells[i].row > row_max) row_max = cells[i].row;
            first = false;
        }
        std::vector<int> outer_parts, inner_parts;
        int col_shift = 0;
        for (int r = row_max; r >= row_min; --r) {
            // component rows are contiguous column intervals of the skew rows
            int lo = 0, hi = 0;
            bool seen = false;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (component[i] != id || cells[i].row != r) continue;
                if (!seen || cells[i].col < lo) lo = cells[i].col;
                if (!seen || cells[i].col > hi) hi = cells[i].col;
                seen = true;
            }
            if (!seen) throw std::logic_error("component rows must be contiguous");
            if (r == row_max) col_shift = lo - 1;
            outer_parts.insert(outer_parts.begin(), hi - col_shift);
            inner_parts.insert(inner_parts.begin(), lo - 1 - col_shift);
        }
        while (!inner_parts.empty() && inner_parts.back() == 0) inner_parts.pop_back();
        out.emplace_back(Partition(std::move(outer_parts)), Partition(std::move(inner_parts)));
    }
    return out;
}

} // namespace symrep
