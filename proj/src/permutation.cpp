#include "symrep/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symrep {

Permutation::Permutation(int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    image_.resize(static_cast<std::size_t>(degree));
    std::iota(image_.begin(), image_.end(), 1);
}

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
    std::vector<bool> seen(image_.size() + 1, false);
    for (int v : image_) {
        if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("one-line notation must be a bijection of 1..n");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::transposition(int degree, int a, int b) {
    Permutation p(degree);
    if (a < 1 || b < 1 || a > degree || b > degree || a == b) {
        throw std::invalid_argument("bad transposition");
    }
    std::swap(p.image_[static_cast<std::size_t>(a - 1)], p.image_[static_cast<std::size_t>(b - 1)]);
    return p;
}

Permutation Permutation::coxeter(int degree, int i) {
    if (i < 1 || i >= degree) throw std::invalid_argument("coxeter index out of range");
    return transposition(degree, i, i + 1);
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p(degree);
    std::vector<bool> used(static_cast<std::size_t>(degree) + 1, false);
    for (const auto& cycle : cycles) {
        for (int v : cycle) {
            if (v < 1 || v > degree || used[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("cycles must be disjoint and within 1..n");
            }
            used[static_cast<std::size_t>(v)] = true;
        }
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            int from = cycle[j];
            int to = cycle[(j + 1) % cycle.size()];
            p.image_[static_cast<std::size_t>(from - 1)] = to;
        }
    }
    return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (degree() != other.degree()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> out(image_.size());
    for (int x = 1; x <= degree(); ++x) {
        out[static_cast<std::size_t>(x - 1)] = (*this)(other(x));
    }
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<int> out(image_.size());
    for (int x = 1; x <= degree(); ++x) {
        out[static_cast<std::size_t>((*this)(x)-1)] = x;
    }
    return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= degree(); ++x) {
        if ((*this)(x) != x) return false;
    }
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(image_.size() + 1, false);
    for (int start = 1; start <= degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
        std::vector<int> cycle;
        int x = start;
        do {
            cycle.push_back(x);
            seen[static_cast<std::size_t>(x)] = true;
            x = (*this)(x);
        } while (x != start);
        out.push_back(std::move(cycle));
    }
    return out;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lengths;
    int moved = 0;
    for (const auto& cycle : cycles()) {
        lengths.push_back(static_cast<int>(cycle.size()));
        moved += static_cast<int>(cycle.size());
    }
    lengths.insert(lengths.end(), static_cast<std::size_t>(degree() - moved), 1);
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

int Permutation::inversions() const {
    int count = 0;
    for (std::size_t i = 0; i < image_.size(); ++i)
        for (std::size_t j = i + 1; j < image_.size(); ++j)
            if (image_[i] > image_[j]) ++count;
    return count;
}

std::vector<int> Permutation::reduced_word() const {
    // Right-multiplying by s_i swaps positions i, i+1; bubble-sort the
    // one-line notation and invert the recorded sequence.
    std::vector<int> line = image_;
    std::vector<int> sorter;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < line.size(); ++i) {
            if (line[i] > line[i + 1]) {
                std::swap(line[i], line[i + 1]);
                sorter.push_back(static_cast<int>(i + 1));
                changed = true;
            }
        }
    }
    std::reverse(sorter.begin(), sorter.end());
    return sorter;
}

std::vector<int> Permutation::reduced_word_by_values() const {
    // Left-multiplying by s_i swaps the values i, i+1. Greedily pick the
    // smallest value inversion; the recorded sequence is the word itself.
    std::vector<int> position(image_.size() + 1);
    for (int x = 1; x <= degree(); ++x) position[static_cast<std::size_t>((*this)(x))] = x;
    std::vector<int> word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 1; v < degree(); ++v) {
            if (position[static_cast<std::size_t>(v)] > position[static_cast<std::size_t>(v + 1)]) {
                std::swap(position[static_cast<std::size_t>(v)],
                          position[static_cast<std::size_t>(v + 1)]);
                word.push_back(v);
                changed = true;
                break;
            }
        }
    }
    return word;
}

Permutation Permutation::embedded(int new_degree) const {
    if (new_degree < degree()) throw std::invalid_argument("cannot embed into a smaller degree");
    std::vector<int> out = image_;
    for (int x = degree() + 1; x <= new_degree; ++x) out.push_back(x);
    return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int degree) {
    std::vector<int> line(static_cast<std::size_t>(degree));
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(line));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

Permutation cycle_type_representative(const Partition& rho, int degree) {
    if (rho.n() > degree) throw std::invalid_argument("cycle type exceeds degree");
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int part : rho.parts()) {
        std::vector<int> cycle;
        for (int j = 0; j < part; ++j) cycle.push_back(next++);
        if (part > 1) cycles.push_back(std::move(cycle));
    }
    return Permutation::from_cycles(degree, cycles);
}

} // namespace symrep
