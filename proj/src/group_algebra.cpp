#include "symrep/group_algebra.hpp"

#include <mutex>
#include <stdexcept>

namespace symrep {

AlgebraElement AlgebraElement::identity(int degree) {
    return unit(Permutation::identity(degree));
}

AlgebraElement AlgebraElement::unit(const Permutation& g) {
    AlgebraElement e(g.degree());
    e.terms_.emplace(g, Rational(1));
    return e;
}

Rational AlgebraElement::coefficient(const Permutation& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Permutation& g, const Rational& c) {
    if (g.degree() != degree_) throw std::invalid_argument("algebra element degree mismatch");
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else if (it->second == 0) {
        terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
    if (degree_ != other.degree_) throw std::invalid_argument("algebra element degree mismatch");
    AlgebraElement out = *this;
    for (const auto& [g, c] : other.terms_) out.add_term(g, c);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
    if (degree_ != other.degree_) throw std::invalid_argument("algebra element degree mismatch");
    AlgebraElement out = *this;
    for (const auto& [g, c] : other.terms_) out.add_term(g, -c);
    return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& other) const {
    if (degree_ != other.degree_) throw std::invalid_argument("algebra element degree mismatch");
    AlgebraElement out(degree_);
    for (const auto& [g, a] : terms_) {
        for (const auto& [h, b] : other.terms_) {
            out.add_term(g * h, a * b);
        }
    }
    return out;
}

AlgebraElement AlgebraElement::operator*(const Rational& scalar) const {
    AlgebraElement out(degree_);
    if (scalar == 0) return out;
    for (const auto& [g, c] : terms_) out.terms_.emplace(g, c * scalar);
    return out;
}

AlgebraElement AlgebraElement::embedded(int new_degree) const {
    AlgebraElement out(new_degree);
    for (const auto& [g, c] : terms_) out.terms_.emplace(g.embedded(new_degree), c);
    return out;
}

AlgebraElement yjm_element(int i, int n) {
    if (i < 1 || i > n) throw std::invalid_argument("yjm_element: index out of range");
    AlgebraElement x(n);
    for (int j = 1; j < i; ++j) {
        x.add_term(Permutation::transposition(n, j, i), Rational(1));
    }
    return x;
}

AlgebraElement class_sum(const CycleType& rho, int n) {
    if (rho.n() > n) throw std::invalid_argument("class_sum: cycle type exceeds degree");
    std::vector<int> padded = rho.parts();
    padded.insert(padded.end(), static_cast<std::size_t>(n - rho.n()), 1);
    Partition type(std::move(padded));
    AlgebraElement sum(n);
    for (const Permutation& g : all_permutations(n)) {
        if (g.cycle_type() == type) sum.add_term(g, Rational(1));
    }
    return sum;
}

std::vector<AlgebraElement> center_basis(int m, int n) {
    if (m > n) throw std::invalid_argument("center_basis: subgroup degree exceeds degree");
    std::vector<AlgebraElement> basis;
    for (const CycleType& rho : enumerate_partitions(m)) {
        basis.push_back(class_sum(rho, m).embedded(n));
    }
    return basis;
}

GroupIndex::GroupIndex(int degree) : degree_(degree), elements_(all_permutations(degree)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    if (degree <= 6) {
        table_.resize(elements_.size(), std::vector<std::uint32_t>(elements_.size()));
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            for (std::size_t j = 0; j < elements_.size(); ++j) {
                table_[i][j] = static_cast<std::uint32_t>(index_of(elements_[i] * elements_[j]));
            }
        }
    }
}

std::size_t GroupIndex::index_of(const Permutation& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) throw std::invalid_argument("permutation not of this degree");
    return it->second;
}

std::size_t GroupIndex::compose(std::size_t i, std::size_t j) const {
    if (!table_.empty()) return table_[i][j];
    return index_of(elements_[i] * elements_[j]);
}

std::vector<Rational> GroupIndex::dense(const AlgebraElement& e) const {
    if (e.degree() != degree_) throw std::invalid_argument("dense: degree mismatch");
    std::vector<Rational> coords(order(), Rational(0));
    for (const auto& [g, c] : e.terms()) coords[index_of(g)] = c;
    return coords;
}

AlgebraElement GroupIndex::element(const std::vector<Rational>& coords) const {
    if (coords.size() != order()) throw std::invalid_argument("element: coordinate size mismatch");
    AlgebraElement e(degree_);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0) e.add_term(elements_[i], coords[i]);
    }
    return e;
}

const GroupIndex& group_index(int degree) {
    if (degree < 0 || degree > 8) throw std::invalid_argument("group_index: degree out of range");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GroupIndex>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(degree);
    if (it == cache.end()) {
        it = cache.emplace(degree, std::make_unique<GroupIndex>(degree)).first;
    }
    return *it->second;
}

} // namespace symrep
