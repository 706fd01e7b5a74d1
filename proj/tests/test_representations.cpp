#include "symrep/representations.hpp"
#include "symrep/text.hpp"

#include <doctest.h>

#include <cmath>

using namespace symrep;

TEST_CASE("axial distances") {
    CHECK(axial_distance(canonical_tableau(SkewShape(Partition{2})), 1) == 1);
    CHECK(axial_distance(canonical_tableau(SkewShape(Partition{1, 1})), 1) == -1);
    CHECK(axial_distance(canonical_tableau(SkewShape(Partition{2, 1})), 2) == -2);
    CHECK_THROWS_AS(axial_distance(canonical_tableau(SkewShape(Partition{2})), 2),
                    std::invalid_argument);
}

TEST_CASE("one-dimensional modules") {
    YoungModule trivial(SkewShape(Partition{4}));
    for (int i = 1; i < 4; ++i) {
        CHECK(trivial.coxeter_seminormal(i) == Matrix<Rational>::identity(1));
    }
    YoungModule sign(SkewShape(Partition{1, 1}));
    Matrix<Rational> s = sign.coxeter_seminormal(1);
    CHECK(s(0, 0) == Rational(-1));
    YoungModule cycle(SkewShape(Partition{3}));
    CHECK(cycle.permutation_seminormal(parse_cycles("(1 2 3)", 3)) ==
          Matrix<Rational>::identity(1));
}

TEST_CASE("the standard two-dimensional block") {
    YoungModule module(SkewShape(Partition{2, 1}));
    REQUIRE(module.dim() == 2);
    // basis order [row-reading, swapped]
    CHECK(module.contents(0) == std::vector<int>{0, 1, -1});
    CHECK(module.contents(1) == std::vector<int>{0, -1, 1});

    Matrix<Rational> s2 = module.coxeter_seminormal(2);
    CHECK(s2(0, 0) == frac(-1, 2));
    CHECK(s2(1, 0) == Rational(1));
    CHECK(s2(0, 1) == frac(3, 4));
    CHECK(s2(1, 1) == frac(1, 2));

    Matrix<double> o2 = module.coxeter_orthogonal(2);
    CHECK(o2(0, 0) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(o2(0, 1) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
    CHECK(o2(1, 0) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
    CHECK(o2(1, 1) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(module.coxeter_seminormal(3), std::invalid_argument);
}

TEST_CASE("yjm matrices are the content diagonals") {
    YoungModule module(SkewShape(Partition{2, 1}));
    Matrix<Rational> x1 = module.yjm_seminormal(1);
    CHECK(x1(0, 0) == Rational(0));
    CHECK(x1(1, 1) == Rational(0));
    Matrix<Rational> x2 = module.yjm_seminormal(2);
    CHECK(x2(0, 0) == Rational(1));
    CHECK(x2(1, 1) == Rational(-1));

    YoungModule skew(SkewShape(Partition{2, 2}, Partition{1}));
    Matrix<Rational> j1 = skew.yjm_seminormal(1);
    CHECK(j1(0, 0) == Rational(1));
    CHECK(j1(1, 1) == Rational(-1));
}

TEST_CASE("permutation matrices respect the group structure") {
    YoungModule module(SkewShape(Partition{2, 1}));
    CHECK(module.permutation_seminormal(Permutation::identity(3)) ==
          Matrix<Rational>::identity(2));
    CHECK(module.permutation_seminormal(parse_cycles("(1 3)", 3)).trace() == Rational(0));
    CHECK_THROWS_AS(module.permutation_seminormal(Permutation::identity(4)),
                    std::invalid_argument);

    // multiplicativity pins the composition convention
    YoungModule bigger(SkewShape(Partition{2, 1, 1}));
    for (const Permutation& g : all_permutations(4)) {
        for (const Permutation& h : {parse_cycles("(1 2 3)", 4), parse_cycles("(3 4)", 4)}) {
            CHECK(bigger.permutation_seminormal(g) * bigger.permutation_seminormal(h) ==
                  bigger.permutation_seminormal(g * h));
        }
    }
}

TEST_CASE("generator rows stay sparse") {
    for (const Partition& shape : enumerate_partitions(5)) {
        YoungModule module((SkewShape(shape)));
        for (int i = 1; i < 5; ++i) {
            Matrix<Rational> m = module.coxeter_seminormal(i);
            for (std::size_t row = 0; row < module.dim(); ++row) {
                CHECK(m.nonzeros_in_row(row) <= 2);
            }
        }
    }
}

TEST_CASE("restriction blocks match the Young graph") {
    YoungModule row(SkewShape(Partition{3}));
    auto row_blocks = row.restriction_blocks();
    REQUIRE(row_blocks.size() == 1);
    CHECK(row_blocks[0].parent == Partition{2});
    CHECK(row_blocks[0].indices.size() == 1);

    YoungModule mid(SkewShape(Partition{2, 1}));
    auto mid_blocks = mid.restriction_blocks();
    REQUIRE(mid_blocks.size() == 2);
    CHECK(mid_blocks[0].parent == Partition{2});
    CHECK(mid_blocks[1].parent == Partition{1, 1});
    CHECK(mid_blocks[0].indices.size() == 1);
    CHECK(mid_blocks[1].indices.size() == 1);

    YoungModule big(SkewShape(Partition{3, 2}));
    auto big_blocks = big.restriction_blocks();
    REQUIRE(big_blocks.size() == 2);
    std::size_t total = 0;
    for (const auto& block : big_blocks) {
        total += block.indices.size();
        if (block.parent == Partition{2, 2}) CHECK(block.indices.size() == 2);
        if (block.parent == Partition{3, 1}) CHECK(block.indices.size() == 3);
    }
    CHECK(total == big.dim());

    CHECK_THROWS_AS(YoungModule(SkewShape(Partition{2, 2}, Partition{1})).restriction_blocks(),
                    std::invalid_argument);
}

TEST_CASE("highest weights") {
    CHECK(highest_weight(Partition{3}).entries() == std::vector<int>{0, 1, 2});
    CHECK(highest_weight(Partition{1, 1, 1}).entries() == std::vector<int>{0, -1, -2});
    CHECK(highest_weight(Partition{2, 2}).entries() == std::vector<int>{0, 1, -1, 0});
}

TEST_CASE("hecke relation holds in the orthogonal form too") {
    for (int n = 2; n <= 5; ++n) {
        for (const Partition& shape : enumerate_partitions(n)) {
            YoungModule module((SkewShape(shape)));
            Matrix<double> one = Matrix<double>::identity(module.dim());
            for (int i = 1; i < n; ++i) {
                Matrix<double> s = module.coxeter_orthogonal(i);
                Matrix<double> lhs = s * module.yjm_orthogonal(i) + one;
                Matrix<double> rhs = module.yjm_orthogonal(i + 1) * s;
                CHECK(max_abs_diff(lhs, rhs) < 1e-10);
            }
        }
    }
}

TEST_CASE("yjm matrices commute pairwise") {
    for (const Partition& shape : enumerate_partitions(5)) {
        YoungModule module((SkewShape(shape)));
        for (int i = 1; i <= 5; ++i) {
            for (int j = i + 1; j <= 5; ++j) {
                CHECK(module.yjm_seminormal(i) * module.yjm_seminormal(j) ==
                      module.yjm_seminormal(j) * module.yjm_seminormal(i));
            }
        }
    }
}

TEST_CASE("skew modules satisfy the same relations") {
    for (const SkewShape& shape :
         {SkewShape(Partition{2, 2}, Partition{1}), SkewShape(Partition{3, 2}, Partition{1}),
          SkewShape(Partition{3, 3, 1}, Partition{2, 1}),
          SkewShape(Partition{3, 1}, Partition{2})}) {
        YoungModule module(shape);
        int k = shape.box_count();
        Matrix<Rational> one = Matrix<Rational>::identity(module.dim());
        for (int i = 1; i < k; ++i) {
            Matrix<Rational> s = module.coxeter_seminormal(i);
            CHECK(s * s == one);
            CHECK(s * module.yjm_seminormal(i) + one == module.yjm_seminormal(i + 1) * s);
            if (i + 1 < k) {
                Matrix<Rational> t = module.coxeter_seminormal(i + 1);
                CHECK(s * t * s == t * s * t);
            }
            Matrix<double> o = module.coxeter_orthogonal(i);
            CHECK(max_abs_diff(o.transpose() * o, Matrix<double>::identity(module.dim())) <
                  1e-12);
        }
    }
}

TEST_CASE("rep matrix bundles carry the requested form") {
    RepMatrix exact = coxeter_matrix(SkewShape(Partition{2, 1}), 1, FormKind::Seminormal);
    CHECK(std::holds_alternative<Matrix<Rational>>(exact.entries));
    CHECK(exact.basis.size() == 2);
    RepMatrix floating = yjm_matrix(SkewShape(Partition{2, 1}), 2, FormKind::Orthogonal);
    CHECK(std::holds_alternative<Matrix<double>>(floating.entries));
    RepMatrix perm =
        permutation_matrix(SkewShape(Partition{2, 1}), parse_cycles("(1 2)", 3), FormKind::Orthogonal);
    CHECK(std::get<Matrix<double>>(perm.entries)(0, 0) == doctest::Approx(1.0));
}
