#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "symcox/coxeter.hpp"

using namespace symcox;

namespace {

Symbol sym(Row X, Row Y) {
    return Symbol::reduce(std::move(X), std::move(Y));
}

}  // namespace

TEST_CASE("eigenvalue labels") {
    CHECK(EigenvalueLabel::plus(2).str() == "+q^2");
    CHECK(EigenvalueLabel::minus(3).str() == "-q^3");
    CHECK(EigenvalueLabel::plus(0) < EigenvalueLabel::plus(1));
    CHECK(EigenvalueLabel::plus(5) < EigenvalueLabel::minus(1));
    CHECK(EigenvalueLabel::minus(2).twisted() == EigenvalueLabel::minus(3));
    CHECK_THROWS_AS(EigenvalueLabel::minus(0), std::invalid_argument);
}

TEST_CASE("explicit Coxeter symbols at small rank") {
    auto k1 = coxeter_symbols(1);
    REQUIRE(k1.S.size() == 2);
    CHECK(k1.S[0] == sym({0, 1}, {1}));
    CHECK(k1.S[1] == sym({1}, {}));
    CHECK(k1.T.empty());

    auto k2 = coxeter_symbols(2);
    REQUIRE(k2.S.size() == 3);
    REQUIRE(k2.T.size() == 1);
    CHECK(k2.S[0] == sym({0, 1, 2}, {1, 2}));
    CHECK(k2.S[1] == sym({0, 2}, {1}));
    CHECK(k2.S[2] == sym({2}, {}));
    CHECK(k2.T[0] == sym({0, 1, 2}, {}));

    auto k4 = coxeter_symbols(4);
    REQUIRE(k4.T.size() == 3);
    CHECK(k4.T[2] == sym({0, 1, 4}, {}));
}

TEST_CASE("all Coxeter symbols have rank k and are pairwise distinct") {
    for (int k = 0; k <= 10; ++k) {
        auto syms = coxeter_symbols(k);
        std::set<Symbol> seen;
        for (const auto& s : syms.S) {
            CHECK(s.rank() == k);
            CHECK(s.defect() == 1);
            seen.insert(s);
        }
        for (const auto& t : syms.T) {
            CHECK(t.rank() == k);
            CHECK(t.defect() == 3);
            seen.insert(t);
        }
        CHECK(seen.size() == syms.S.size() + syms.T.size());
    }
}

TEST_CASE("the two series have the expected cuspidal supports") {
    for (int k = 2; k <= 8; ++k) {
        auto syms = coxeter_symbols(k);
        for (const auto& s : syms.S)
            CHECK(core_and_cuspidal(s).support.delta == 0);
        for (const auto& t : syms.T)
            CHECK(core_and_cuspidal(t).support.delta == 1);
    }
}

TEST_CASE("pinned eigenspace dimensions") {
    CHECK(lusztig_degree(2, {CoxeterSeries::S, 0}) == RatPoly::q_power(4));
    CHECK(lusztig_degree(5, {CoxeterSeries::S, 5}) == RatPoly(1L));

    // T(0) at k=3: q^4 (q^2-1)(q^3-1) / (2 (q+1))
    RatPoly t30 = RatFunc(RatPoly::q_power(4) * RatPoly::q_pow_minus_one(2) *
                              RatPoly::q_pow_minus_one(3),
                          RatPoly(2L) * RatPoly::q_pow_plus_one(1))
                      .to_poly();
    CHECK(lusztig_degree(3, {CoxeterSeries::T, 0}) == t30);

    // T(2) at k=4: q (q^3-1)(q^4-1) / (2 (q+1))
    RatPoly t42 = RatFunc(RatPoly::q_power(1) * RatPoly::q_pow_minus_one(3) *
                              RatPoly::q_pow_minus_one(4),
                          RatPoly(2L) * RatPoly::q_pow_plus_one(1))
                      .to_poly();
    CHECK(lusztig_degree(4, {CoxeterSeries::T, 2}) == t42);
}

TEST_CASE("hook formula agrees with the eigenspace dimension formulas") {
    for (int k = 0; k <= 10; ++k) {
        auto syms = coxeter_symbols(k);
        for (int i = 0; i <= k; ++i)
            CHECK(unipotent_degree(syms.S[static_cast<size_t>(i)]) ==
                  lusztig_degree(k, {CoxeterSeries::S, i}));
        for (int j = 0; j <= k - 2; ++j)
            CHECK(unipotent_degree(syms.T[static_cast<size_t>(j)]) ==
                  lusztig_degree(k, {CoxeterSeries::T, j}));
    }
}

TEST_CASE("graded table shape") {
    GradedRep k0 = coxeter_graded(0);
    REQUIRE(k0.by_degree.size() == 1);
    const auto* cell = k0.cell(0, EigenvalueLabel::plus(0));
    REQUIRE(cell != nullptr);
    CHECK(cell->contains(sym({0}, {})));

    GradedRep k1 = coxeter_graded(1);
    const auto* h1 = k1.cell(1, EigenvalueLabel::plus(0));
    REQUIRE(h1 != nullptr);
    CHECK(h1->contains(sym({0, 1}, {1})));
    const auto* h2 = k1.cell(2, EigenvalueLabel::plus(1));
    REQUIRE(h2 != nullptr);
    CHECK(h2->contains(sym({1}, {})));
    CHECK(k1.cell(1, EigenvalueLabel::minus(1)) == nullptr);

    GradedRep k2 = coxeter_graded(2);
    const auto* middle_plus = k2.cell(2, EigenvalueLabel::plus(0));
    const auto* middle_minus = k2.cell(2, EigenvalueLabel::minus(1));
    REQUIRE(middle_plus != nullptr);
    REQUIRE(middle_minus != nullptr);
    CHECK(middle_plus->contains(sym({0, 1, 2}, {1, 2})));
    CHECK(middle_minus->contains(sym({0, 1, 2}, {})));

    for (int k = 0; k <= 8; ++k) {
        GradedRep g = coxeter_graded(k);
        for (const auto& [degree, labelled] : g.by_degree) {
            CHECK(degree >= k);
            CHECK(degree <= 2 * k);
            for (const auto& [label, ms] : labelled)
                CHECK(ms.multiplicity_free());
        }
    }
}

TEST_CASE("restriction recursion holds through rank 10") {
    for (int k = 1; k <= 10; ++k) {
        auto report = verify_restriction_recursion(k);
        INFO("k = " << k);
        for (const auto& m : report.mismatches)
            INFO(m);
        CHECK(report.pass());
    }
}
