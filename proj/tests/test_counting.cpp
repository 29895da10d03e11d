#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symcox/counting.hpp"

using namespace symcox;

TEST_CASE("form spaces know their Witt index") {
    CHECK(FormSpace(FormKind::Symplectic, 4).witt_index() == 2);
    CHECK(FormSpace(FormKind::OrthogonalOdd, 5).witt_index() == 2);
    CHECK(FormSpace(FormKind::OrthogonalEvenSplit, 6).witt_index() == 3);
    CHECK(FormSpace(FormKind::OrthogonalEvenNonsplit, 6).witt_index() == 2);
    CHECK_THROWS_AS(FormSpace(FormKind::Symplectic, 3), std::invalid_argument);
    CHECK_THROWS_AS(FormSpace(FormKind::OrthogonalOdd, 4), std::invalid_argument);
}

TEST_CASE("pinned counts") {
    CHECK(count_isotropic(FormSpace(FormKind::Symplectic, 4), 1, Int(3)) == 40);
    for (long p : {3L, 5L, 7L})
        CHECK(count_isotropic(FormSpace(FormKind::OrthogonalEvenSplit, 2), 1, Int(p)) == 2);
    for (FormKind kind : {FormKind::Symplectic, FormKind::OrthogonalEvenSplit,
                          FormKind::OrthogonalEvenNonsplit})
        CHECK(count_isotropic(FormSpace(kind, 4), 0, Int(5)) == 1);
    CHECK(count_isotropic(FormSpace(FormKind::OrthogonalOdd, 3), 0, Int(5)) == 1);
    CHECK_THROWS_AS(count_isotropic(FormSpace(FormKind::Symplectic, 4), 3, Int(3)),
                    std::invalid_argument);
}

TEST_CASE("brute force pins") {
    Int p(3);
    GramMatrix skew = GramMatrix::standard(FormSpace(FormKind::Symplectic, 4), p);
    CHECK(brute_force_isotropic_serial(skew, 1, p) == 40);
    CHECK(brute_force_isotropic(skew, 1, p) == 40);

    GramMatrix point = GramMatrix::standard(FormSpace(FormKind::OrthogonalOdd, 1), p);
    CHECK(brute_force_isotropic_serial(point, 0, p) == 1);

    // the anisotropic plane has no isotropic lines
    GramMatrix aniso = GramMatrix::standard(FormSpace(FormKind::OrthogonalEvenNonsplit, 2), p);
    CHECK(brute_force_isotropic_serial(aniso, 1, p) == 0);
    CHECK(brute_force_isotropic(aniso, 1, p) == 0);
}

TEST_CASE("guard rejects oversized runs unless overridden") {
    GramMatrix g = GramMatrix::standard(FormSpace(FormKind::Symplectic, 4), Int(11));
    CHECK_THROWS_AS(brute_force_isotropic_serial(g, 1, Int(11)), std::invalid_argument);
    BruteForceGuard open;
    open.override_guard = true;
    CHECK(brute_force_isotropic_serial(g, 1, Int(11), open) ==
          count_isotropic(FormSpace(FormKind::Symplectic, 4), 1, Int(11)));
}

TEST_CASE("formula equals brute force across kinds, p = 3, dims to 6") {
    Int p(3);
    for (FormKind kind : {FormKind::Symplectic, FormKind::OrthogonalOdd,
                          FormKind::OrthogonalEvenSplit, FormKind::OrthogonalEvenNonsplit}) {
        for (int d = kind == FormKind::OrthogonalOdd ? 1 : 2; d <= 6;
             d += 2) {
            FormSpace space(kind, d);
            GramMatrix g = GramMatrix::standard(space, p);
            for (int r = 0; r <= std::min(space.witt_index(), 3); ++r) {
                Int expected = count_isotropic(space, r, p);
                INFO(form_kind_name(kind) << " d=" << d << " r=" << r);
                CHECK(brute_force_isotropic_serial(g, r, p) == expected);
                CHECK(brute_force_isotropic(g, r, p) == expected);
            }
        }
    }
}

TEST_CASE("parallel kernel agrees with the serial reference") {
    Int p(5);
    FormSpace space(FormKind::OrthogonalEvenSplit, 6);
    GramMatrix g = GramMatrix::standard(space, p);
    for (int r = 1; r <= 3; ++r)
        CHECK(brute_force_isotropic(g, r, p) == brute_force_isotropic_serial(g, r, p));
}

TEST_CASE("theta_max per case") {
    CHECK(theta_max(CaseSpec(3, SplitCase::Odd, Int(5))) == 1);
    CHECK(theta_max(CaseSpec(4, SplitCase::EvenSplit, Int(5))) == 2);
    CHECK(theta_max(CaseSpec(4, SplitCase::EvenNonsplit, Int(5))) == 1);
    CHECK(theta_max(CaseSpec(2, SplitCase::EvenNonsplit, Int(5))) == 0);
    CHECK_THROWS_AS(CaseSpec(4, SplitCase::Odd, Int(5)), std::invalid_argument);
    CHECK_THROWS_AS(CaseSpec(3, SplitCase::EvenSplit, Int(5)), std::invalid_argument);
    CHECK_THROWS_AS(CaseSpec(3, SplitCase::Odd, Int(4)), std::invalid_argument);
}

TEST_CASE("incidence pins") {
    for (long p : {3L, 5L, 7L}) {
        CHECK(strata_incidence(CaseSpec(3, SplitCase::Odd, Int(p)), 0, 1,
                               IncidenceDirection::Above) == p + 1);
        CHECK(strata_incidence(CaseSpec(4, SplitCase::EvenNonsplit, Int(p)), 0, 1,
                               IncidenceDirection::Above) == p * p + 1);
        CHECK(strata_incidence(CaseSpec(2, SplitCase::EvenSplit, Int(p)), 0, 0,
                               IncidenceDirection::Above) == 1);
        CHECK(strata_incidence(CaseSpec(5, SplitCase::Odd, Int(p)), 2, 2,
                               IncidenceDirection::Below) == 1);
        // isotropic lines of a symplectic plane, in every case
        for (int n : {3, 5})
            CHECK(strata_incidence(CaseSpec(n, SplitCase::Odd, Int(p)), 1, 0,
                                   IncidenceDirection::Below) == p + 1);
        CHECK(strata_incidence(CaseSpec(4, SplitCase::EvenSplit, Int(p)), 1, 0,
                               IncidenceDirection::Below) == p + 1);
        CHECK(strata_incidence(CaseSpec(4, SplitCase::EvenNonsplit, Int(p)), 1, 0,
                               IncidenceDirection::Below) == p + 1);
    }
    CHECK_THROWS_AS(strata_incidence(CaseSpec(3, SplitCase::Odd, Int(3)), 1, 0,
                                     IncidenceDirection::Above),
                    std::invalid_argument);
}

TEST_CASE("even split: a next-to-maximal stratum lies on an edge") {
    for (long p : {3L, 5L, 7L})
        for (int n : {4, 6}) {
            CaseSpec c(n, SplitCase::EvenSplit, Int(p));
            int tmax = theta_max(c);
            CHECK(strata_incidence(c, tmax - 1, tmax, IncidenceDirection::Above) == 2);
        }
}

TEST_CASE("cover multiplicities at theta_max = 1") {
    for (long p : {3L, 5L}) {
        CaseSpec n3(3, SplitCase::Odd, Int(p));
        CHECK(cover_multiplicity(n3, 2, 0) == binomial(Int(p + 1), 2));
        CHECK(cover_multiplicity(n3, 1, 0) == 0);
        CHECK(cover_multiplicity(n3, 1, 1) == 1);
        CHECK(cover_multiplicity(n3, 2, 1) == 0);

        CaseSpec n2(2, SplitCase::EvenSplit, Int(p));
        CHECK(cover_multiplicity(n2, 1, 0) == 0);
        CHECK(cover_multiplicity(n2, 2, 0) == 1);
        CHECK(cover_multiplicity(n2, 3, 0) == 0);
    }
    CHECK_THROWS_AS(cover_multiplicity(CaseSpec(5, SplitCase::Odd, Int(3)), 1, 0),
                    std::invalid_argument);
}

TEST_CASE("nu across the three cases") {
    for (long p : {3L, 5L, 7L, 11L}) {
        CHECK(nu_multiplicity(CaseSpec(2, SplitCase::EvenSplit, Int(p))) == 1);
        CHECK(nu_multiplicity(CaseSpec(3, SplitCase::Odd, Int(p))) == p);
        CHECK(nu_multiplicity(CaseSpec(4, SplitCase::EvenNonsplit, Int(p))) == p * p);
        // binomial-theorem identity: nu = #neighbours - 1
        for (const CaseSpec& c : {CaseSpec(2, SplitCase::EvenSplit, Int(p)),
                                  CaseSpec(3, SplitCase::Odd, Int(p)),
                                  CaseSpec(4, SplitCase::EvenNonsplit, Int(p))})
            CHECK(nu_multiplicity(c) ==
                  strata_incidence(c, 0, 1, IncidenceDirection::Above) - 1);
    }
    CHECK_THROWS_AS(nu_multiplicity(CaseSpec(5, SplitCase::Odd, Int(3))),
                    std::invalid_argument);
}

TEST_CASE("Cech first page grids") {
    // n=2 split: top row (a=-1, a=0) at b=2, the lone lower term at b=0
    CaseSpec n2(2, SplitCase::EvenSplit, Int(3));
    auto grid2 = rz_first_page(n2);
    REQUIRE(grid2.size() == 4);  // one theta=0 term + the a=0 column of 3 rows
    CHECK(grid2[0].a == -1);
    CHECK(grid2[0].b == 2);
    CHECK(grid2[0].multiplicity == 1);
    CHECK(grid2[0].inducing_theta == 0);
    CHECK(grid2[0].scalar_exp == 1);
    CHECK(grid2[1].a == 0);
    CHECK(grid2[1].b == 2);
    CHECK(grid2[1].inducing_theta == 1);
    CHECK(grid2[1].scalar_exp == 1);
    CHECK(grid2[2].multiplicity == 0);  // b = 1 zero row
    CHECK(grid2[3].b == 0);
    CHECK(grid2[3].inducing_theta == 1);
    CHECK(grid2[3].scalar_exp == 0);

    // n=3: top row multiplicities C(p+1, s) ending at the theta=1 term [p^2],
    // the lone lower term [p] two rows below
    CaseSpec n3(3, SplitCase::Odd, Int(3));
    auto grid3 = rz_first_page(n3);
    long N = 4;  // p + 1
    REQUIRE(static_cast<long>(grid3.size()) == (N - 1) + 5);
    for (long s = N; s >= 2; --s) {
        const auto& term = grid3[static_cast<size_t>(N - s)];
        CHECK(term.a == 1 - s);
        CHECK(term.b == 4);
        CHECK(term.multiplicity == binomial(Int(N), s));
        CHECK(term.inducing_theta == 0);
        CHECK(term.scalar_exp == 2);
    }
    const auto& top = grid3[static_cast<size_t>(N - 1)];
    CHECK(top.a == 0);
    CHECK(top.b == 4);
    CHECK(top.inducing_theta == 1);
    CHECK(top.scalar_exp == 2);
    int zero_rows = 0;
    for (const auto& term : grid3)
        if (term.multiplicity == 0)
            ++zero_rows;
    CHECK(zero_rows == 3);  // b = 3, 1, 0
    bool found_mid = false;
    for (const auto& term : grid3)
        if (term.a == 0 && term.b == 2) {
            CHECK(term.multiplicity == 1);
            CHECK(term.inducing_theta == 1);
            CHECK(term.scalar_exp == 1);
            found_mid = true;
        }
    CHECK(found_mid);

    // n=4 non-split: same shape with two more zero rows and scalars times p
    CaseSpec n4(4, SplitCase::EvenNonsplit, Int(3));
    auto grid4 = rz_first_page(n4);
    long N4 = 10;  // p^2 + 1
    CHECK(static_cast<long>(grid4.size()) == (N4 - 1) + 7);
    CHECK(grid4[0].b == 6);
    CHECK(grid4[0].scalar_exp == 3);
    int zeros4 = 0;
    for (const auto& term : grid4)
        if (term.multiplicity == 0)
            ++zeros4;
    CHECK(zeros4 == 5);  // b = 5, 3, 2, 1, 0
    for (const auto& term : grid4)
        if (term.a == 0 && term.b == 4)
            CHECK(term.scalar_exp == 2);
}
