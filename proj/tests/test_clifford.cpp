#include "lleq/clifford.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lleq;

namespace {

std::vector<std::string> texts(const CliffordSet& s)
{
    std::vector<std::string> out;
    for (const auto& w : s.generators) out.push_back(w.str());
    return out;
}

} // namespace

TEST(Clifford, BaseSet)
{
    const CliffordSet s = base_set();
    EXPECT_EQ(texts(s), (std::vector<std::string>{"X", "Y", "A"}));
    EXPECT_EQ(s.signature, (Signature{2, 1}));
    const CliffordReport r = verify_clifford(s);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.relations(), 6u);
}

TEST(Clifford, ExtendFollowsTheRecursion)
{
    const CliffordSet s1 = extend(base_set());
    EXPECT_EQ(texts(s1), (std::vector<std::string>{"XX", "XY", "XA", "YI", "AI"}));
    EXPECT_EQ(s1.signature, (Signature{3, 2}));
    const CliffordSet s2 = extend(s1);
    EXPECT_EQ(texts(s2), (std::vector<std::string>{"XXX", "XXY", "XXA", "XYI", "XAI", "YII", "AII"}));
    EXPECT_EQ(s2.signature, (Signature{4, 3}));
}

TEST(Clifford, ExtendPreservesValidityThroughThreeLevels)
{
    CliffordSet s = base_set();
    for (int level = 1; level <= 3; ++level) {
        const std::size_t count = s.generators.size();
        const std::size_t length = s.generators.front().size();
        s = extend(s);
        EXPECT_EQ(s.generators.size(), count + 2);
        EXPECT_EQ(s.generators.front().size(), length + 1);
        const CliffordReport r = verify_clifford(s);
        EXPECT_TRUE(r.passed()) << "level " << level;
        const std::size_t m = s.generators.size();
        EXPECT_EQ(r.relations(), m * (m + 1) / 2);
    }
    EXPECT_EQ(s.signature, (Signature{5, 4}));
}

TEST(Clifford, AnticommutationMatchesOracle)
{
    CliffordSet s = extend(extend(base_set()));
    for (std::size_t i = 0; i < s.generators.size(); ++i)
        for (std::size_t j = i + 1; j < s.generators.size(); ++j)
            EXPECT_EQ(oracle::relation(s.generators[i].str(), s.generators[j].str()), "anticommute");
}

TEST(Clifford, CatalogSetsPass)
{
    const auto cat = clifford_catalog();
    const std::map<std::string, Signature> expected{
        {"Cl(2,1)", {2, 1}}, {"Cl(3,2)", {3, 2}}, {"Cl(4,3)-set1", {4, 3}}, {"Cl(4,3)-set2", {4, 3}}};
    ASSERT_EQ(cat.size(), expected.size());
    for (const auto& [name, sig] : expected) {
        ASSERT_TRUE(cat.count(name)) << name;
        EXPECT_EQ(cat.at(name).signature, sig) << name;
        EXPECT_TRUE(verify_clifford(cat.at(name)).passed()) << name;
    }
    EXPECT_EQ(texts(cat.at("Cl(4,3)-set2")),
              (std::vector<std::string>{"XYX", "XYY", "XYA", "XXI", "XAI", "YII", "AII"}));
}

TEST(Clifford, SpaceAndTimeLikeSplitOfThreeTwo)
{
    const CliffordSet s = clifford_catalog().at("Cl(3,2)");
    std::vector<std::string> space, time;
    for (const auto& w : s.generators) (square_sign(w) > 0 ? space : time).push_back(w.str());
    EXPECT_EQ(space, (std::vector<std::string>{"XX", "XY", "YI"}));
    EXPECT_EQ(time, (std::vector<std::string>{"XA", "AI"}));
}

TEST(Clifford, WrongSignatureFails)
{
    const CliffordReport r = verify_clifford({base_set().generators, {3, 0}});
    EXPECT_FALSE(r.passed());
    ASSERT_EQ(r.failures().size(), 1u);
    EXPECT_EQ(r.failures()[0].i, 2u);
    EXPECT_EQ(r.failures()[0].j, 2u);
}

TEST(Clifford, CommutingPairFails)
{
    const CliffordReport r = verify_clifford(make_clifford_set({Word("XX"), Word("XI")}));
    EXPECT_FALSE(r.passed());
    ASSERT_EQ(r.failures().size(), 1u);
    EXPECT_EQ(r.failures()[0].i, 0u);
    EXPECT_EQ(r.failures()[0].j, 1u);
    EXPECT_EQ(oracle::relation("XX", "XI"), "commute");
}

TEST(Clifford, GeneratorCountMismatchFails)
{
    EXPECT_FALSE(verify_clifford({{Word("X"), Word("Y")}, {2, 1}}).passed());
    EXPECT_THROW(extend({{Word("X"), Word("Y")}, {2, 1}}), std::invalid_argument);
}

TEST(Clifford, CompleteToTower)
{
    const auto full = complete_to_tower({Word("XY"), Word("YI"), Word("AI")});
    ASSERT_TRUE(full.has_value());
    EXPECT_EQ(full->signature, (Signature{3, 2}));
    EXPECT_TRUE(verify_clifford(*full).passed());
    EXPECT_FALSE(complete_to_tower({Word("XX"), Word("XI")}).has_value());
}
