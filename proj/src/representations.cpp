#include "symrep/representations.hpp"

#include <cmath>
#include <stdexcept>

namespace symrep {

int axial_distance(const StandardTableau& t, int i) {
    if (i < 1 || i >= t.size()) throw std::invalid_argument("axial_distance: index out of range");
    return t.box_of(i + 1).content() - t.box_of(i).content();
}

ContentVector highest_weight(const Partition& shape) {
    return content_vector(canonical_tableau(SkewShape(shape)));
}

YoungModule::YoungModule(SkewShape shape) : shape_(std::move(shape)) {
    basis_ = enumerate_tableaux(shape_);
    contents_.reserve(basis_.size());
    inversion_lengths_.reserve(basis_.size());
    for (std::size_t t = 0; t < basis_.size(); ++t) {
        contents_.push_back(basis_[t].content_sequence());
        inversion_lengths_.push_back(inversion_length(basis_[t]));
        index_by_contents_[contents_.back()] = t;
    }
}

void YoungModule::check_generator_index(int i) const {
    if (i < 1 || i >= shape_.box_count()) {
        throw std::invalid_argument("generator index out of range");
    }
}

namespace {

double orthogonal_offdiag(int r) {
    return std::sqrt(1.0 - 1.0 / (static_cast<double>(r) * static_cast<double>(r)));
}

template <class T>
struct PairBlock;

template <>
struct PairBlock<Rational> {
    static void fill(Matrix<Rational>& m, std::size_t low, std::size_t high, int r) {
        Rational inv = frac(1, r);
        m(low, low) = inv;
        m(high, low) = Rational(1);
        m(low, high) = Rational(1) - inv * inv;
        m(high, high) = -inv;
    }
};

template <>
struct PairBlock<double> {
    static void fill(Matrix<double>& m, std::size_t low, std::size_t high, int r) {
        double inv = 1.0 / static_cast<double>(r);
        double off = orthogonal_offdiag(r);
        m(low, low) = inv;
        m(high, low) = off;
        m(low, high) = off;
        m(high, high) = -inv;
    }
};

} // namespace

template <class T>
Matrix<T> YoungModule::coxeter_impl(int i) const {
    check_generator_index(i);
    Matrix<T> m(dim(), dim());
    for (std::size_t t = 0; t < dim(); ++t) {
        const Box& a = basis_[t].box_of(i);
        const Box& b = basis_[t].box_of(i + 1);
        if (a.row == b.row) {
            m(t, t) = T(1);
        } else if (a.col == b.col) {
            m(t, t) = T(-1);
        } else {
            std::vector<int> swapped = contents_[t];
            std::swap(swapped[static_cast<std::size_t>(i - 1)],
                      swapped[static_cast<std::size_t>(i)]);
            std::size_t u = index_by_contents_.at(swapped);
            if (t > u) continue; // pair handled once
            std::size_t low = inversion_lengths_[t] < inversion_lengths_[u] ? t : u;
            std::size_t high = low == t ? u : t;
            int r = contents_[low][static_cast<std::size_t>(i)] -
                    contents_[low][static_cast<std::size_t>(i - 1)];
            PairBlock<T>::fill(m, low, high, r);
        }
    }
    return m;
}

Matrix<Rational> YoungModule::coxeter_seminormal(int i) const { return coxeter_impl<Rational>(i); }

Matrix<double> YoungModule::coxeter_orthogonal(int i) const { return coxeter_impl<double>(i); }

Matrix<Rational> YoungModule::yjm_seminormal(int j) const {
    if (j < 1 || j > shape_.box_count()) throw std::invalid_argument("yjm index out of range");
    Matrix<Rational> m(dim(), dim());
    for (std::size_t t = 0; t < dim(); ++t) {
        m(t, t) = Rational(contents_[t][static_cast<std::size_t>(j - 1)]);
    }
    return m;
}

Matrix<double> YoungModule::yjm_orthogonal(int j) const { return to_double(yjm_seminormal(j)); }

Matrix<Rational> YoungModule::permutation_seminormal(const Permutation& g) const {
    if (g.degree() != shape_.box_count()) {
        throw std::invalid_argument("permutation degree does not match the shape");
    }
    Matrix<Rational> m = Matrix<Rational>::identity(dim());
    for (int i : g.reduced_word()) m = m * coxeter_seminormal(i);
    return m;
}

Matrix<double> YoungModule::permutation_orthogonal(const Permutation& g) const {
    if (g.degree() != shape_.box_count()) {
        throw std::invalid_argument("permutation degree does not match the shape");
    }
    Matrix<double> m = Matrix<double>::identity(dim());
    for (int i : g.reduced_word()) m = m * coxeter_orthogonal(i);
    return m;
}

std::vector<RestrictionBlock> YoungModule::restriction_blocks() const {
    if (!shape_.is_straight()) {
        throw std::invalid_argument("restriction blocks are defined for straight shapes");
    }
    if (shape_.box_count() < 1) throw std::invalid_argument("restriction of the empty shape");
    int n = shape_.box_count();
    std::vector<RestrictionBlock> blocks;
    for (const Partition& parent : young_graph_neighbors(shape_.outer()).parents) {
        blocks.push_back(RestrictionBlock{parent, {}});
    }
    for (std::size_t t = 0; t < dim(); ++t) {
        const Box& top = basis_[t].box_of(n);
        std::vector<int> parts = shape_.outer().parts();
        parts[static_cast<std::size_t>(top.row - 1)] -= 1;
        if (parts.back() == 0) parts.pop_back();
        Partition parent(std::move(parts));
        for (RestrictionBlock& block : blocks) {
            if (block.parent == parent) {
                block.indices.push_back(t);
                break;
            }
        }
    }
    return blocks;
}

RepMatrix coxeter_matrix(const SkewShape& shape, int i, FormKind form) {
    YoungModule module(shape);
    RepMatrix out{shape, form, module.basis(), {}};
    if (form == FormKind::Seminormal) {
        out.entries = module.coxeter_seminormal(i);
    } else {
        out.entries = module.coxeter_orthogonal(i);
    }
    return out;
}

RepMatrix yjm_matrix(const SkewShape& shape, int j, FormKind form) {
    YoungModule module(shape);
    RepMatrix out{shape, form, module.basis(), {}};
    if (form == FormKind::Seminormal) {
        out.entries = module.yjm_seminormal(j);
    } else {
        out.entries = module.yjm_orthogonal(j);
    }
    return out;
}

RepMatrix permutation_matrix(const SkewShape& shape, const Permutation& g, FormKind form) {
    YoungModule module(shape);
    RepMatrix out{shape, form, module.basis(), {}};
    if (form == FormKind::Seminormal) {
        out.entries = module.permutation_seminormal(g);
    } else {
        out.entries = module.permutation_orthogonal(g);
    }
    return out;
}

} // namespace symrep
