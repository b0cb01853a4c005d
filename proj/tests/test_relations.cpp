#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmzv/relations.hpp"

using namespace qmzv;

TEST_CASE("enumeration counts match the closed forms") {
    for (int w = 1; w <= 6; ++w) {
        for (TypeTag ty : {TypeTag::I, TypeTag::tI, TypeTag::II, TypeTag::III, TypeTag::IV,
                           TypeTag::tIV}) {
            if (ty == TypeTag::tI && w < 2) continue;
            CHECK(static_cast<long long>(enumerate_admissible(ty, w).size()) ==
                  count_admissible(ty, w));
        }
    }
    for (int w = 1; w <= 4; ++w)
        CHECK(static_cast<long long>(enumerate_admissible(TypeTag::G, w).size()) ==
              count_admissible(TypeTag::G, w));

    CHECK(enumerate_admissible(TypeTag::tI, 3).size() == 12);
    CHECK(enumerate_admissible(TypeTag::II, 4).size() == 69);
    CHECK(count_admissible(TypeTag::G, 3) == 49);
    CHECK(count_admissible(TypeTag::O, 5) == 7);
}

TEST_CASE("basis is sorted and admissible") {
    for (TypeTag ty : {TypeTag::tI, TypeTag::II, TypeTag::III, TypeTag::tIV, TypeTag::G}) {
        auto basis = enumerate_admissible(ty, 3);
        CHECK(std::is_sorted(basis.begin(), basis.end()));
        for (const auto& w : basis) {
            CHECK(zword_admissible(w));
            CHECK(w.weight() <= 3);
            CHECK(w.depth() <= 3);
        }
    }
}

TEST_CASE("dbsf ranks at small weight") {
    GenOptions opts;
    CHECK(rank(gen_dbsf(TypeTag::II, 2, opts)) == 1);
    CHECK(rank(gen_dbsf(TypeTag::II, 3, opts)) == 5);
    CHECK(rank(gen_dbsf(TypeTag::tI, 2, opts)) == 1);
    CHECK(rank(gen_dbsf(TypeTag::tI, 3, opts)) == 4);
    CHECK(rank(gen_dbsf(TypeTag::tI, 4, opts)) == 17);
    CHECK(rank(gen_dbsf(TypeTag::G, 2, opts)) == 1);
    CHECK(rank(gen_dbsf(TypeTag::III, 3, opts)) == 5);
    CHECK(rank(gen_dbsf(TypeTag::tIV, 3, opts)) == 5);
}

TEST_CASE("every generated row is a zero series") {
    const int N = 40;
    EvalCache cache;
    for (TypeTag ty : {TypeTag::tI, TypeTag::II, TypeTag::III, TypeTag::tIV, TypeTag::G}) {
        auto ds = gen_dbsf(ty, 3);
        CHECK(soundness_failures(ds, N, &cache).empty());
        auto du = gen_duality(ty, 3);
        CHECK(soundness_failures(du, N, &cache).empty());
    }
    CHECK(soundness_failures(gen_pr(3), N, &cache).empty());
}

TEST_CASE("duality increments over the double shuffle span") {
    auto incr = [](TypeTag ty, int w) {
        auto ds = gen_dbsf(ty, w);
        auto du = gen_duality(ty, w);
        return rank_union({&ds, &du}) - rank(ds);
    };
    CHECK(incr(TypeTag::tI, 3) == 0);
    CHECK(incr(TypeTag::tI, 4) == 1);
    CHECK(incr(TypeTag::II, 3) == 2);
}

TEST_CASE("PR relations for type G") {
    auto pr = gen_pr(3);
    CHECK(!pr.rows.empty());
    // z^(1)[3] = z^(2)[3] + z^(1)[2] is in the span
    RelationSystem probe = pr;
    Echelon e;
    for (const auto& r : pr.rows) e.add(r.v);
    LinComb<ZWord> rel;
    rel.add(ZWord{TypeTag::G, CompositionPair({1}, {3})}, 1);
    rel.add(ZWord{TypeTag::G, CompositionPair({2}, {3})}, -1);
    rel.add(ZWord{TypeTag::G, CompositionPair({1}, {2})}, -1);
    SparseRow row;
    for (const auto& [w, c] : rel) row.emplace_back(pr.column_of(w), c);
    CHECK(e.in_span(row));
    // pi-free words contribute no row
    for (const auto& r : pr.rows) CHECK(!r.v.empty());
}

TEST_CASE("dim lower bounds against the published values") {
    const int N = 60; // ranks stabilize well before q^100 here
    EvalCache cache;
    CHECK(dim_lower_bound(enumerate_admissible(TypeTag::II, 1), N, &cache) == 1);
    CHECK(dim_lower_bound(enumerate_admissible(TypeTag::II, 3), N, &cache) == 12);
    CHECK(dim_lower_bound(enumerate_admissible(TypeTag::tI, 2), N, &cache) == 3);
    CHECK(dim_lower_bound(enumerate_admissible(TypeTag::tI, 3), N, &cache) == 7);
    // single nonzero word
    CHECK(dim_lower_bound({ZWord{TypeTag::II, CompositionPair({1}, {1})}}, 10, &cache) == 1);
}

TEST_CASE("deficiency and augmentation for ~I") {
    auto rep3 = deficiency(TypeTag::tI, 3, 60);
    CHECK(rep3.words == 12);
    CHECK(rep3.lower_bound == 7);
    CHECK(rep3.relation_rank == 4);
    CHECK(rep3.deficiency == 1);
    auto aug = augmented_deficiency(TypeTag::tI, 3, 1, 60);
    CHECK(aug.deficiency == 0);
}

TEST_CASE("deficiency for G vanishes through PR") {
    for (int w = 1; w <= 3; ++w) CHECK(deficiency(TypeTag::G, w, 50).deficiency == 0);
}

TEST_CASE("projection ~I onto I") {
    auto ds = gen_dbsf(TypeTag::tI, 4);
    auto du = gen_duality(TypeTag::tI, 4);
    ds.append(du);
    auto proj = project_relations(ds, enumerate_admissible(TypeTag::I, 4));
    CHECK(rank(proj) == 3); // published type I double-shuffle rank at w=4
    // projection onto the full basis changes nothing
    auto full = project_relations(ds, ds.basis);
    CHECK(rank(full) == rank(ds));
}

TEST_CASE("verify_identity") {
    // z^III[1,0,1] = 2 z^III[1,1,0] - z^III[1,2,0] - z^III[2,0,0] + z^III[2,0,1]
    LinComb<CompositionPair> rel;
    rel.add(CompositionPair({1, 0, 0}, {1, 0, 1}), 1);
    rel.add(CompositionPair({1, 0, 0}, {1, 1, 0}), -2);
    rel.add(CompositionPair({1, 0, 0}, {1, 2, 0}), 1);
    rel.add(CompositionPair({1, 0, 0}, {2, 0, 0}), 1);
    rel.add(CompositionPair({1, 0, 0}, {2, 0, 1}), -1);
    CHECK(verify_identity(rel, 60));

    LinComb<CompositionPair> trivial;
    trivial.add(CompositionPair({2}, {2}), 1);
    trivial.add(CompositionPair({2}, {2}), -1);
    CHECK(verify_identity(trivial, 10));

    LinComb<CompositionPair> wrong;
    wrong.add(CompositionPair({2}, {2}), 1);
    CHECK(!verify_identity(wrong, 10));
}

TEST_CASE("json round trip") {
    auto ds = gen_dbsf(TypeTag::II, 3);
    auto text = relations_to_json(ds);
    auto back = relations_from_json(text);
    CHECK(back.basis == ds.basis);
    CHECK(back.rows.size() == ds.rows.size());
    CHECK(rank(back) == rank(ds));
}

TEST_CASE("empty system has rank zero") {
    RelationSystem sys;
    sys.type = TypeTag::II;
    sys.weight = 1;
    sys.basis = enumerate_admissible(TypeTag::II, 1);
    CHECK(rank(sys) == 0);
}
