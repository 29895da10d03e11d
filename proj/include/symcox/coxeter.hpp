// Closed-form cohomology of the Coxeter variety X^k for Sp(2k): the explicit
// symbols of each eigenspace, Lusztig's dimension formulas, the graded
// eigenvalue-labeled table, and the rank-lowering restriction recursion used
// as a consistency oracle.
#ifndef SYMCOX_COXETER_HPP
#define SYMCOX_COXETER_HPP

#include <map>
#include <optional>

#include "symcox/hc.hpp"

namespace symcox {

/// Frobenius eigenvalue sign * q^exponent. Negative eigenvalues are always of
/// the form -q^{j+1}, so (Minus, 0) never occurs.
struct EigenvalueLabel {
    enum Sign { Plus = 0, Minus = 1 };
    Sign sign;
    int exponent;

    EigenvalueLabel(Sign s, int e) : sign(s), exponent(e) {
        if (e < 0 || (s == Minus && e == 0))
            throw std::invalid_argument("invalid eigenvalue label");
    }
    static EigenvalueLabel plus(int e) { return {Plus, e}; }
    static EigenvalueLabel minus(int e) { return {Minus, e}; }

    /// Tate twist of the recursion: shifts the eigenvalue by one power of q.
    EigenvalueLabel twisted(int by = 1) const { return {sign, exponent + by}; }

    auto operator<=>(const EigenvalueLabel&) const = default;
    std::string str() const;  // "+q^2", "-q^3"
};

/// Cohomology table: cohomological degree -> eigenvalue -> symbols.
struct GradedRep {
    std::map<int, std::map<EigenvalueLabel, SymbolMultiset>> by_degree;

    const SymbolMultiset* cell(int degree, const EigenvalueLabel& label) const;
    bool operator==(const GradedRep&) const = default;
};

enum class CoxeterSeries { S, T };

struct CoxeterSlot {
    CoxeterSeries series;
    int index;  // i for S(i), j for T(j)
};

struct CoxeterSymbols {
    std::vector<Symbol> S;  // S[i], 0 <= i <= k; S[k] is the trivial symbol
    std::vector<Symbol> T;  // T[j], 0 <= j <= k-2
};

/// The explicit principal-series and cuspidal-series symbols of rank k
/// attached to the eigenspaces of the Coxeter variety X^k.
CoxeterSymbols coxeter_symbols(int k);

/// Lusztig's product formula for the dimension of the eigenspace in the given
/// slot, returned as an exact polynomial.
RatPoly lusztig_degree(int k, CoxeterSlot slot);

/// Full graded table of H_c(X^k): degrees k..2k, each degree k+i carrying
/// eigenvalue q^i (S-symbol) and, for i <= k-2, -q^{i+1} (T-symbol).
GradedRep coxeter_graded(int k);

struct RecursionReport {
    int k;
    std::vector<std::string> mismatches;
    bool pass() const { return mismatches.empty(); }
};

/// Checks that restricting every cell of X^k by 1 reproduces the two shifted
/// copies of the X^{k-1} table, with the Tate twist raising the eigenvalue
/// exponent of the second copy by 1. Labels are hard matching keys.
RecursionReport verify_restriction_recursion(int k);

}  // namespace symcox

#endif
