// The stratification spectral sequence of the closed stratum S_theta: first
// page built from parabolically induced Coxeter cohomology, the explicit
// symbol families of each term, and the component-matching survival analysis
// bounding the abutment.
#ifndef SYMCOX_STRATUM_HPP
#define SYMCOX_STRATUM_HPP

#include "symcox/coxeter.hpp"

namespace symcox {

/// First page E_1^{a,b} (0 <= b <= a <= theta), each cell an
/// eigenvalue-labeled multiset of symbols of rank theta. Row b carries only
/// the labels +q^b and -q^{b+1}; the differential moves a -> a+1 along a row.
struct SpectralPage {
    int theta = 0;
    std::map<std::pair<int, int>, std::map<EigenvalueLabel, SymbolMultiset>> cells;

    const SymbolMultiset* cell(int a, int b, const EigenvalueLabel& label) const;
};

SpectralPage e1_page(int theta);

/// Symbol families of one induced Coxeter eigenspace, keyed by family tag:
/// "S1","S2","S Exc 1","S Exc 2" (i < theta'), "S1'","S2'" (i = theta'),
/// "T1","T2","T Exc 1","T Exc 2" (j+2 < theta'), "T1'","T2'" (j+2 = theta').
/// Members are reduced and listed in increasing d.
std::map<std::string, std::vector<Symbol>> family_terms(int theta, int theta_prime,
                                                        CoxeterSlot slot);

struct FamilyReport {
    int theta;
    std::vector<std::string> mismatches;
    bool pass() const { return mismatches.empty(); }
};

/// Checks, for every theta' <= theta and slot, that the families are pairwise
/// disjoint and their union equals the direct Harish-Chandra induction of the
/// Coxeter symbol.
FamilyReport verify_families(int theta);

struct SurvivalOptions {
    bool sharpen_h0 = true;       // H^0 is the trivial representation
    bool sharpen_corners = true;  // top corner cells are exact
};

/// Survival bounds for one abutment eigenspace H^degree_{label}.
struct CellBounds {
    int a = 0, b = 0;            // position of the contributing E_1 cell
    SymbolMultiset guaranteed;   // certain to survive to the split abutment
    SymbolMultiset ambiguous;    // may or may not survive
    bool exact = false;          // ambiguous empty: eigenspace known exactly
    bool beyond_theorem = false; // matcher output with no theorem backing
};

struct BoundsReport {
    int theta = 0;
    // key: (cohomological degree, eigenvalue label)
    std::map<std::pair<int, EigenvalueLabel>, CellBounds> cells;

    const CellBounds* cell(int degree, const EigenvalueLabel& label) const;
    bool has_guaranteed_nonpurity_witness() const;
};

/// Component-matching analysis of the first page. Differentials are never
/// constructed; a constituent is ambiguous exactly when the equal symbol
/// occurs in an adjacent live cell of its row, under the same label.
BoundsReport survival_bounds(int theta, SurvivalOptions opts = {});

struct WeightRow {
    int degree;
    EigenvalueLabel label;
    RatPoly min_dim;
    RatPoly max_dim;
    bool exact;
};

/// Frobenius weight table assembled from survival_bounds. Asserts that every
/// occurring label lies in the admissible eigenvalue window for its degree.
std::vector<WeightRow> weight_table(int theta, SurvivalOptions opts = {});

struct EulerRow {
    int b;
    EigenvalueLabel label;
    // alternating sums use sign (-1)^(a-b), normalized to the row start
    RatPoly e1_alternating;   // sum_a dim E_1^{a,b} for this label
    RatPoly bounds_low;       // alternating guaranteed - ambiguous at odd offsets
    RatPoly bounds_high;      // alternating guaranteed + ambiguous at even offsets
    bool row_exact;           // every cell of the row resolved exactly
    bool ok;                  // e1_alternating within [low, high] (equality when exact)
};

struct EulerReport {
    int theta;
    std::vector<EulerRow> rows;
    bool pass() const;
};

/// Row-wise alternating-sum invariance check between the first page and the
/// survival bounds, evaluated exactly at sample prime powers.
EulerReport euler_check(int theta, SurvivalOptions opts = {});

}  // namespace symcox

#endif
