#include "symrep/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace symrep {

namespace {

std::size_t pivot_of(const std::vector<Rational>& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != 0) return j;
    }
    return row.size();
}

} // namespace

Subspace::Subspace(int degree) : degree_(degree) {}

std::size_t Subspace::ambient_dim() const { return group_index(degree_).order(); }

Subspace Subspace::span(int degree, const std::vector<AlgebraElement>& elements) {
    Subspace s(degree);
    for (const AlgebraElement& e : elements) s.add(e);
    return s;
}

std::vector<Rational> Subspace::reduce(std::vector<Rational> row) const {
    for (const auto& basis_row : rows_) {
        std::size_t p = pivot_of(basis_row);
        if (p < row.size() && row[p] != 0) {
            Rational factor = row[p]; // basis pivots are normalized to 1
            for (std::size_t j = p; j < row.size(); ++j) {
                if (basis_row[j] != 0) row[j] -= factor * basis_row[j];
            }
        }
    }
    return row;
}

bool Subspace::add_row(std::vector<Rational> row) {
    if (row.size() != ambient_dim()) throw std::invalid_argument("row has wrong dimension");
    row = reduce(std::move(row));
    std::size_t p = pivot_of(row);
    if (p == row.size()) return false;
    Rational lead = row[p];
    for (std::size_t j = p; j < row.size(); ++j) {
        if (row[j] != 0) row[j] /= lead;
    }
    // back-substitute into the existing rows, keep pivot order
    for (auto& basis_row : rows_) {
        if (basis_row[p] != 0) {
            Rational factor = basis_row[p];
            for (std::size_t j = p; j < row.size(); ++j) {
                if (row[j] != 0) basis_row[j] -= factor * row[j];
            }
        }
    }
    auto where = std::lower_bound(rows_.begin(), rows_.end(), p,
                                  [](const std::vector<Rational>& r, std::size_t col) {
                                      return pivot_of(r) < col;
                                  });
    rows_.insert(where, std::move(row));
    return true;
}

bool Subspace::add(const AlgebraElement& e) {
    if (e.degree() != degree_) throw std::invalid_argument("element degree mismatch");
    return add_row(group_index(degree_).dense(e));
}

bool Subspace::contains_row(const std::vector<Rational>& row) const {
    return pivot_of(reduce(row)) == row.size();
}

bool Subspace::contains(const AlgebraElement& e) const {
    return contains_row(group_index(degree_).dense(e));
}

bool Subspace::contains(const Subspace& other) const {
    if (other.degree_ != degree_) return false;
    for (const auto& row : other.rows_) {
        if (!contains_row(row)) return false;
    }
    return true;
}

std::vector<AlgebraElement> Subspace::basis_elements() const {
    std::vector<AlgebraElement> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(group_index(degree_).element(row));
    return out;
}

std::vector<std::vector<Rational>> row_dependencies(
    const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    if (r == 0) return {};
    const std::size_t n = rows[0].size();
    // Eliminate [rows | I]; zero left parts expose the dependencies.
    std::vector<std::vector<Rational>> work(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("ragged row set");
        work[i] = rows[i];
        work[i].resize(n + r, Rational(0));
        work[i][n + i] = Rational(1);
    }
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n && pivot_row < r; ++col) {
        std::size_t found = pivot_row;
        while (found < r && work[found][col] == 0) ++found;
        if (found == r) continue;
        std::swap(work[pivot_row], work[found]);
        Rational lead = work[pivot_row][col];
        for (std::size_t j = col; j < n + r; ++j) work[pivot_row][j] /= lead;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == pivot_row || work[i][col] == 0) continue;
            Rational factor = work[i][col];
            for (std::size_t j = col; j < n + r; ++j) {
                if (work[pivot_row][j] != 0) work[i][j] -= factor * work[pivot_row][j];
            }
        }
        ++pivot_row;
    }
    std::vector<std::vector<Rational>> dependencies;
    for (std::size_t i = pivot_row; i < r; ++i) {
        dependencies.emplace_back(work[i].begin() + static_cast<long>(n), work[i].end());
    }
    // normalize to reduced echelon form for determinism
    std::vector<std::vector<Rational>> reduced;
    for (auto& dep : dependencies) {
        for (const auto& prev : reduced) {
            std::size_t p = pivot_of(prev);
            if (dep[p] != 0) {
                Rational factor = dep[p];
                for (std::size_t j = 0; j < dep.size(); ++j) {
                    if (prev[j] != 0) dep[j] -= factor * prev[j];
                }
            }
        }
        std::size_t p = pivot_of(dep);
        if (p == dep.size()) continue;
        Rational lead = dep[p];
        for (auto& v : dep) {
            if (v != 0) v /= lead;
        }
        for (auto& prev : reduced) {
            if (prev[p] != 0) {
                Rational factor = prev[p];
                for (std::size_t j = 0; j < dep.size(); ++j) {
                    if (dep[j] != 0) prev[j] -= factor * dep[j];
                }
            }
        }
        reduced.push_back(std::move(dep));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
                  return pivot_of(a) < pivot_of(b);
              });
    return reduced;
}

} // namespace symrep
