#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "hqc/hybrid.hpp"

using namespace hqc;

namespace {

const std::vector<std::string> kGen7Q = {"XIIZYYZ", "ZXIXZIX", "ZIXXIZX", "ZIZZXII", "IZIZIXX"};
const std::vector<std::string> kGen7C = {"ZIIIIIX"};
const std::vector<std::string> kGen9Q = {"XIIZYZXXY", "ZXIZYXYIZ", "IZXZZIXIX", "IZZIYXXYI",
                                         "ZZIXXIXZI"};
const std::vector<std::string> kGen9C = {"ZIIIIXIII", "IZIIIIXII"};
const std::vector<std::string> kFive = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};

PauliOperator random_pauli_weight(std::mt19937& rng, std::size_t n, int w) {
    std::uint64_t count = pauli_count(n, w);
    return pauli_at(n, w, rng() % count);
}

}  // namespace

TEST(Hybrid, ParametersFromRows) {
    HybridCode h = make_hybrid(kGen7Q, kGen7C);
    EXPECT_EQ(h.n, 7u);
    EXPECT_EQ(h.r_q(), 5u);
    EXPECT_EQ(h.m(), 1u);
    EXPECT_EQ(h.k(), 1u);
    HybridCode g9 = make_hybrid(kGen9Q, kGen9C);
    EXPECT_EQ(g9.k(), 2u);
    EXPECT_EQ(g9.m(), 2u);
}

TEST(Hybrid, RejectsBadClassicalRows) {
    // Dependent modulo the stabilizer: the product of the two rows is XXXXX * itself.
    const std::vector<std::string> rep5 = {"XXXXX", "ZZZZI"};
    EXPECT_THROW(make_hybrid(rep5, {"IIIIX", "IIIIX"}), std::invalid_argument);
    EXPECT_THROW(make_hybrid({"ZZ"}, {"ZI", "IZ"}), std::invalid_argument);  // ZI*IZ = ZZ
    EXPECT_THROW(make_hybrid({"ZZ"}, {"iXX"}), std::invalid_argument);
    EXPECT_THROW(make_hybrid({"XX", "XZ"}, std::vector<std::string>{}), AnticommutingPair);
}

TEST(Hybrid, InnerCodeSigns) {
    HybridCode h = make_hybrid(kGen7Q, kGen7C);
    StabilizerGroup s0 = inner_code(h, {false});
    StabilizerGroup s1 = inner_code(h, {true});
    EXPECT_EQ(s0.rank(), 6u);
    auto d0 = contains(s0, pauli_from_string("ZIIIIIX"));
    ASSERT_TRUE(d0.has_value());
    EXPECT_EQ(*d0, 0);
    auto d1 = contains(s1, pauli_from_string("-ZIIIIIX"));
    ASSERT_TRUE(d1.has_value());
    EXPECT_EQ(*d1, 0);
}

TEST(Hybrid, OrthogonalityAndUnion) {
    HybridCode h = make_hybrid(kGen7Q, kGen7C);
    StabilizerGroup s0 = inner_code(h, {false});
    StabilizerGroup s1 = inner_code(h, {true});
    EXPECT_TRUE(orthogonal_pair(s0, s1));
    EXPECT_FALSE(orthogonal_pair(s0, s0));
    EXPECT_THROW(make_union({s0, s0}), std::invalid_argument);

    StabilizerUnionCode u = as_union(h);
    EXPECT_EQ(u.M(), 2u);
    EXPECT_EQ(*contains(u.inner[0], pauli_from_string("ZIIIIIX")), 0);
    EXPECT_EQ(*contains(u.inner[1], pauli_from_string("-ZIIIIIX")), 0);
}

TEST(Hybrid, DetectabilityMatchesKLExhaustively) {
    HybridCode h = make_hybrid(kGen7Q, kGen7C);
    StabilizerUnionCode u = as_union(h);
    std::vector<CodeBasis> bases;
    for (const auto& s : u.inner) bases.push_back(code_basis(s));
    for (int w = 0; w <= 3; ++w)
        for_each_pauli(7, w, [&](const PauliOperator& e) {
            EXPECT_EQ(is_detectable(h, e), kl_is_detectable(kl_check(bases, e))) << to_string(e);
            return true;
        });
}

TEST(Hybrid, DetectabilityMatchesKLRandom) {
    HybridCode h = make_hybrid(kGen9Q, kGen9C);
    StabilizerUnionCode u = as_union(h);
    std::vector<CodeBasis> bases;
    for (const auto& s : u.inner) bases.push_back(code_basis(s));
    std::mt19937 rng(23);
    for (int t = 0; t < 400; ++t) {
        int w = 1 + static_cast<int>(rng() % 9);
        PauliOperator e = random_pauli_weight(rng, 9, w);
        EXPECT_EQ(is_detectable(h, e), kl_is_detectable(kl_check(bases, e))) << to_string(e);
    }
}

TEST(Hybrid, DistanceScan) {
    HybridCode h = make_hybrid(kGen7Q, kGen7C);
    DistanceResult d = distance(h, 4);
    ASSERT_TRUE(d.exact());
    EXPECT_EQ(d.found->weight, 3);
    EXPECT_EQ(to_string(d.found->witness), "XZYIIII");

    DistanceResult capped = distance(h, 2);
    EXPECT_FALSE(capped.exact());
    EXPECT_EQ(capped.scanned_to, 2u);
    EXPECT_EQ(capped.value(), 3u);
}

TEST(Hybrid, UnionDistanceDense) {
    StabilizerUnionCode u = make_union(
        {build_group(parse_pauli_rows({"XXZIZI", "ZXXZII", "IZXXZI", "ZIZXXI", "IIIIIX"})),
         build_group(parse_pauli_rows({"YIZXXY", "ZXIIXZ", "IZXXXX", "IIIZIZ", "ZZZIZI"}))});
    DistanceResult d = union_distance_dense(u);
    ASSERT_TRUE(d.exact());
    EXPECT_EQ(d.found->weight, 1);
    EXPECT_EQ(to_string(d.found->witness), "IXIIII");
    // The two inner codes separately have distance 3.
    for (const auto& s : u.inner) {
        auto hit = min_weight_outside(centralizer_basis(s), s, 3);
        ASSERT_TRUE(hit.has_value());
        EXPECT_EQ(hit->weight, 3);
        EXPECT_EQ(to_string(hit->witness), "XZXIII");
    }
}

TEST(Hybrid, DistancesAgreeAcrossRoutes) {
    HybridCode h = make_hybrid(kGen7Q, kGen7C);
    DistanceResult fast = distance(h, 4);
    DistanceResult dense = union_distance_dense(as_union(h), 4);
    ASSERT_TRUE(fast.exact() && dense.exact());
    EXPECT_EQ(fast.found->weight, dense.found->weight);
    EXPECT_EQ(fast.found->witness, dense.found->witness);
}

TEST(Hybrid, DetectableDimensionFormula) {
    EXPECT_EQ(detectable_dimension(1, 1, 2), 2);
    EXPECT_EQ(detectable_dimension(7, 2, 2), 16370);
}

TEST(Hybrid, InnerDegeneracy) {
    HybridCode g7 = make_hybrid(kGen7Q, kGen7C);
    DegeneracyResult dg = inner_degenerate(g7, 3);
    ASSERT_TRUE(dg.degenerate());
    EXPECT_EQ(to_string(*dg.witness), "ZIIIIIX");

    HybridCode d2 = make_hybrid({"XXXXX", "ZZZZI"}, {"IIIIX"});
    DegeneracyResult dg2 = inner_degenerate(d2, 2);
    ASSERT_TRUE(dg2.degenerate());
    EXPECT_EQ(to_string(*dg2.witness), "IIIIX");

    HybridCode bell = make_hybrid({"XX", "ZZ"}, std::vector<std::string>{});
    EXPECT_FALSE(inner_degenerate(bell, 2).degenerate());
}

TEST(Hybrid, FromQuantumDemotesLogicals) {
    StabilizerGroup five = build_group(parse_pauli_rows(kFive));
    HybridCode h = from_quantum(five, 1);
    EXPECT_EQ(h.n, 5u);
    EXPECT_EQ(h.k(), 0u);
    EXPECT_EQ(h.m(), 1u);
    // The demoted row is a logical: commutes with the stabilizer, not inside it.
    ASSERT_EQ(h.classical.size(), 1u);
    for (const auto& g : h.quantum.basis) EXPECT_TRUE(commutes(g, h.classical[0]));
    EXPECT_FALSE(in_rowspace(h.quantum, h.classical[0]));
    DistanceResult d = distance(h, 4);
    ASSERT_TRUE(d.exact());
    EXPECT_EQ(d.found->weight, 3);

    HybridCode plain = from_quantum(five, 0);
    EXPECT_EQ(plain.k(), 1u);
    EXPECT_EQ(plain.m(), 0u);

    EXPECT_THROW(from_quantum(build_group(parse_pauli_rows({"XX", "ZZ"})), 1), std::logic_error);
}

TEST(Hybrid, TensorClassicalExtendsLength) {
    StabilizerGroup five = build_group(parse_pauli_rows(kFive));
    HybridCode h5 = from_quantum(five, 0);

    std::vector<BitVec> rep3;
    rep3.emplace_back(3);
    rep3[0].set(0, true);
    rep3[0].set(1, true);
    rep3[0].set(2, true);
    HybridCode t = tensor_classical(h5, rep3, 3);
    EXPECT_EQ(t.n, 8u);
    EXPECT_EQ(t.k(), 1u);
    EXPECT_EQ(t.m(), 1u);
    DistanceResult d = distance(t, 4);
    ASSERT_TRUE(d.exact());
    EXPECT_EQ(d.found->weight, 3);

    std::vector<BitVec> unit1;
    unit1.emplace_back(1);
    unit1[0].set(0, true);
    HybridCode t1 = tensor_classical(h5, unit1, 1);
    EXPECT_EQ(t1.n, 6u);
    EXPECT_EQ(t1.k(), 1u);
    EXPECT_EQ(t1.m(), 1u);
    DistanceResult d1 = distance(t1, 4);
    ASSERT_TRUE(d1.exact());
    EXPECT_EQ(d1.found->weight, 1);

    EXPECT_THROW(tensor_classical(h5, {}, 3), std::invalid_argument);
}

TEST(Hybrid, UnionEnumeratorWrappers) {
    HybridCode h = make_hybrid(kGen7Q, kGen7C);
    StabilizerUnionCode u = as_union(h);
    WeightDistributionSet group_route = all_pair_distributions(u);
    WeightDistributionSet dense_route = weight_distributions_dense(u);
    for (std::size_t a = 0; a < u.M(); ++a)
        for (std::size_t b = 0; b < u.M(); ++b) {
            EXPECT_EQ(group_route.pairs[a][b].A, dense_route.pairs[a][b].A);
            EXPECT_EQ(group_route.pairs[a][b].B, dense_route.pairs[a][b].B);
        }
}
