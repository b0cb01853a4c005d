#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmzv/relations.hpp"
#include "qmzv/stuffle.hpp"
#include "qmzv/okounkov.hpp"

#include <random>

using namespace qmzv;

namespace {

ZWord zw(TypeTag ty, std::vector<int> t, std::vector<int> s) {
    return ZWord{ty, CompositionPair(std::move(t), std::move(s))};
}

} // namespace

TEST_CASE("one-step examples") {
    // II: z'2 * z'3 = z'2 z'3 + z'3 z'2 + z'5
    auto p = stuffle(TypeTag::II, zw(TypeTag::II, {2}, {2}), zw(TypeTag::II, {3}, {3}));
    LinComb<ZWord> want;
    want.add(zw(TypeTag::II, {2, 3}, {2, 3}), 1);
    want.add(zw(TypeTag::II, {3, 2}, {3, 2}), 1);
    want.add(zw(TypeTag::II, {5}, {5}), 1);
    CHECK(p == want);

    // ~I: z2 * z3 = z2 z3 + z3 z2 + z5 + z4
    p = stuffle(TypeTag::tI, zw(TypeTag::tI, {1}, {2}), zw(TypeTag::tI, {2}, {3}));
    want = {};
    want.add(zw(TypeTag::tI, {1, 2}, {2, 3}), 1);
    want.add(zw(TypeTag::tI, {2, 1}, {3, 2}), 1);
    want.add(zw(TypeTag::tI, {4}, {5}), 1);
    want.add(zw(TypeTag::tI, {3}, {4}), 1);
    CHECK(p == want);

    // III: z'1 * z'1 = 2 z'1 z1 - 2 z'1 z0 + z'2 - z'1
    p = stuffle(TypeTag::III, zw(TypeTag::III, {1}, {1}), zw(TypeTag::III, {1}, {1}));
    want = {};
    want.add(zw(TypeTag::III, {1, 0}, {1, 1}), 2);
    want.add(zw(TypeTag::III, {1, 0}, {1, 0}), -2);
    want.add(zw(TypeTag::III, {1}, {2}), 1);
    want.add(zw(TypeTag::III, {1}, {1}), -1);
    CHECK(p == want);

    // G: z_{1,1} * z_{1,2} = z_{1,1} z_{1,2} + z_{1,2} z_{1,1} + z_{2,3}
    p = stuffle(TypeTag::G, zw(TypeTag::G, {1}, {1}), zw(TypeTag::G, {1}, {2}));
    want = {};
    want.add(zw(TypeTag::G, {1, 1}, {1, 2}), 1);
    want.add(zw(TypeTag::G, {1, 1}, {2, 1}), 1);
    want.add(zw(TypeTag::G, {2}, {3}), 1);
    CHECK(p == want);

    // unit law
    p = stuffle(TypeTag::II, ZWord{TypeTag::II, {}}, zw(TypeTag::II, {2}, {2}));
    CHECK(p == LinComb<ZWord>(zw(TypeTag::II, {2}, {2})));
}

TEST_CASE("type O examples") {
    // [2,3] * [2] = 2 z[2,2,3] + z[2,3,2] + 2 z[4,3] + 2 z[2,5]
    auto p = stuffle_o({2, 3}, {2});
    LinComb<OWord> want;
    want.add({2, 2, 3}, 2);
    want.add({2, 3, 2}, 1);
    want.add({4, 3}, 2);
    want.add({2, 5}, 2);
    CHECK(p == want);

    // [2,3] * [3] = 2 z[2,3,3] + z[3,2,3] + 2 z[5,3] + 2 z[2,6] + 1/2 z[2,4]
    p = stuffle_o({2, 3}, {3});
    want = {};
    want.add({2, 3, 3}, 2);
    want.add({3, 2, 3}, 1);
    want.add({5, 3}, 2);
    want.add({2, 6}, 2);
    want.add({2, 4}, rat(1, 2));
    CHECK(p == want);

    CHECK(stuffle_o({}, {2}) == LinComb<OWord>(OWord{2}));
    CHECK_THROWS_AS(stuffle_o({1}, {2}), stuffle_error);
}

TEST_CASE("mismatched families are rejected") {
    CHECK_THROWS_AS(stuffle(TypeTag::II, zw(TypeTag::II, {1}, {1}), zw(TypeTag::tI, {1}, {1})),
                    stuffle_error);
}

namespace {

std::vector<ZWord> small_words(TypeTag ty, int w, int maxdep) {
    std::vector<ZWord> out;
    for (const auto& word : enumerate_admissible(ty, w))
        if (word.depth() <= maxdep) out.push_back(word);
    return out;
}

} // namespace

TEST_CASE("commutativity and associativity on random words") {
    std::mt19937 rng(2024);
    for (TypeTag ty : {TypeTag::tI, TypeTag::II, TypeTag::III, TypeTag::tIV, TypeTag::G}) {
        auto words = small_words(ty, 3, 3);
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        for (int rep = 0; rep < 30; ++rep) {
            const ZWord &u = words[pick(rng)], &v = words[pick(rng)], &w = words[pick(rng)];
            CHECK(stuffle(ty, u, v) == stuffle(ty, v, u));
            auto lhs = stuffle(ty, stuffle(ty, u, v), LinComb<ZWord>(w));
            auto rhs = stuffle(ty, LinComb<ZWord>(u), stuffle(ty, v, w));
            CHECK(lhs == rhs);
        }
    }
    // type O
    auto owords = enumerate_o(5);
    std::uniform_int_distribution<std::size_t> pick(0, owords.size() - 1);
    for (int rep = 0; rep < 30; ++rep) {
        const OWord &u = owords[pick(rng)], &v = owords[pick(rng)], &w = owords[pick(rng)];
        CHECK(stuffle_o(u, v) == stuffle_o(v, u));
        CHECK(stuffle_o(stuffle_o(u, v), LinComb<OWord>(w)) ==
              stuffle_o(LinComb<OWord>(u), stuffle_o(v, w)));
    }
}

TEST_CASE("closure: outputs stay admissible, weights bounded") {
    std::mt19937 rng(99);
    for (TypeTag ty : {TypeTag::tI, TypeTag::II, TypeTag::III, TypeTag::tIV, TypeTag::G}) {
        auto words = small_words(ty, 3, 3);
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        for (int rep = 0; rep < 40; ++rep) {
            const ZWord &u = words[pick(rng)], &v = words[pick(rng)];
            const int maxd = u.depth() + v.depth();
            const int mind = std::max(u.depth(), v.depth());
            for (const auto& [word, c] : stuffle(ty, u, v)) {
                CHECK(zword_admissible(word));
                CHECK(word.weight() <= u.weight() + v.weight());
                CHECK(word.depth() >= mind);
                CHECK(word.depth() <= maxd);
            }
        }
    }
}

TEST_CASE("weight is exactly additive for II and G") {
    std::mt19937 rng(5);
    for (TypeTag ty : {TypeTag::II, TypeTag::G}) {
        auto words = small_words(ty, 3, 3);
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        for (int rep = 0; rep < 40; ++rep) {
            const ZWord &u = words[pick(rng)], &v = words[pick(rng)];
            for (const auto& [word, c] : stuffle(ty, u, v))
                CHECK(word.weight() == u.weight() + v.weight());
        }
    }
}
