#include "symrep/characters.hpp"
#include "symrep/config.hpp"
#include "symrep/tableau.hpp"
#include "symrep/text.hpp"

#include <doctest.h>

using namespace symrep;

TEST_CASE("class sizes") {
    CHECK(class_size(CycleType{1, 1, 1}, 3) == 1);
    CHECK(class_size(CycleType{2}, 3) == 3);
    CHECK(class_size(CycleType{3}, 3) == 2);
    CHECK(class_size(CycleType{2, 2}, 4) == 3);
    long long total = 0;
    for (const CycleType& rho : enumerate_partitions(6)) total += class_size(rho, 6);
    CHECK(total == 720);
}

TEST_CASE("murnaghan-nakayama values") {
    CHECK(mn_character(SkewShape(Partition{2, 1}), CycleType{3}) == -1);
    CHECK(mn_character(SkewShape(Partition{2, 2}), CycleType{4}) == 0);
    CHECK(mn_character(SkewShape(Partition{3, 2}), CycleType{1, 1, 1, 1, 1}) == 5);
    CHECK(mn_character(SkewShape(Partition{2, 2}, Partition{1}), CycleType{3}) == -1);
    CHECK_THROWS_AS(mn_character(SkewShape(Partition{2, 1}), CycleType{2}),
                    std::invalid_argument);
}

TEST_CASE("full cycle closed form") {
    CHECK(full_cycle_character(SkewShape(Partition{5})) == 1);
    for (int k = 1; k <= 6; ++k) {
        std::vector<int> column(static_cast<std::size_t>(k), 1);
        CHECK(full_cycle_character(SkewShape(Partition(column))) == (k % 2 == 1 ? 1 : -1));
    }
    // disconnected shapes vanish on the full cycle
    CHECK(full_cycle_character(SkewShape(Partition{3, 1}, Partition{2})) == 0);
    CHECK(full_cycle_character(SkewShape(Partition{2, 2})) == 0);
}

TEST_CASE("character tables") {
    CharacterTable two = character_table(2);
    CHECK(two.partitions == std::vector<Partition>{Partition{2}, Partition{1, 1}});
    CHECK(two.cycle_types == std::vector<CycleType>{CycleType{1, 1}, CycleType{2}});
    CHECK(two.values == std::vector<std::vector<long long>>{{1, 1}, {1, -1}});

    CharacterTable three = character_table(3);
    CHECK(three.values[1] == std::vector<long long>{2, 0, -1});

    CharacterTable four = character_table(4);
    std::vector<long long> dims;
    for (const auto& row : four.values) dims.push_back(row[0]);
    CHECK(dims == std::vector<long long>{1, 3, 2, 3, 1});

    CHECK_THROWS_AS(character_table(0), std::invalid_argument);
    CHECK_THROWS_AS(character_table(character_table_cap() + 1), SizeCapError);
}

TEST_CASE("row orthogonality") {
    for (int n = 2; n <= 6; ++n) {
        CharacterTable table = character_table(n);
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        for (std::size_t a = 0; a < table.partitions.size(); ++a) {
            for (std::size_t b = a; b < table.partitions.size(); ++b) {
                long long sum = 0;
                for (std::size_t c = 0; c < table.cycle_types.size(); ++c) {
                    sum += class_size(table.cycle_types[c], n) * table.values[a][c] *
                           table.values[b][c];
                }
                CHECK(sum == (a == b ? fact : 0));
            }
        }
    }
}

TEST_CASE("hook eigenvalues") {
    CHECK(hook_eigenvalue(3, 0) == 2);
    CHECK(hook_eigenvalue(3, 2) == 2);
    CHECK(hook_eigenvalue(4, 1) == -2);
    CHECK_THROWS_AS(hook_eigenvalue(3, 3), std::invalid_argument);
}

TEST_CASE("hook multiplicities") {
    SkewShape strip(Partition{2, 2}, Partition{1});
    CHECK(hook_multiplicity(Partition{2, 1}, strip) == 1);
    CHECK(hook_multiplicity(Partition{3}, strip) == 0);
    CHECK(hook_multiplicity(Partition{1, 1, 1}, strip) == 0);
    for (int b = 0; b < 4; ++b) {
        std::vector<int> parts{4 - b};
        parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
        CHECK(hook_multiplicity(Partition(parts), SkewShape(Partition{2, 2})) == 0);
    }
    CHECK_THROWS_AS(hook_multiplicity(Partition{2, 2}, SkewShape(Partition{2, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(hook_multiplicity(Partition{2, 1}, SkewShape(Partition{2, 2})),
                    std::invalid_argument);
}

TEST_CASE("peeling order does not change the value") {
    MnEvaluator mn;
    for (const Partition& shape : enumerate_partitions(6)) {
        for (const CycleType& rho : enumerate_partitions(6)) {
            std::vector<int> increasing = rho.parts();
            std::reverse(increasing.begin(), increasing.end());
            CHECK(mn.eval(SkewShape(shape), rho) ==
                  mn.eval_ordered(SkewShape(shape), increasing));
        }
    }
}

TEST_CASE("character at the identity is the tableau count") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        for (const Partition& shape : enumerate_partitions(n)) {
            CHECK(mn_character(SkewShape(shape), CycleType(ones)) ==
                  tableau_count(SkewShape(shape)));
        }
    }
}
