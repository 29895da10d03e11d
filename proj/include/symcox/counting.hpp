// Closed-form counts of isotropic subspaces over F_p, a brute-force
// enumeration oracle (serial reference and OpenMP kernel), stratum incidence
// counts, the small-case cover multiplicities, and the Cech first page for
// theta_max = 1.
#ifndef SYMCOX_COUNTING_HPP
#define SYMCOX_COUNTING_HPP

#include <string>
#include <vector>

#include "symcox/poly.hpp"

namespace symcox {

enum class FormKind {
    Symplectic,
    OrthogonalOdd,
    OrthogonalEvenSplit,
    OrthogonalEvenNonsplit,
};

std::string form_kind_name(FormKind kind);
FormKind form_kind_from_name(const std::string& name);

/// Non-degenerate bilinear space over F_p described by kind and dimension;
/// the Witt index is determined by both.
struct FormSpace {
    FormKind kind;
    int dim;

    FormSpace(FormKind k, int d);
    int witt_index() const;
};

/// Number of r-dimensional totally isotropic subspaces, by the closed product
/// formula. Requires 0 <= r <= witt index.
Int count_isotropic(const FormSpace& space, int r, const Int& p);

/// Explicit Gram matrix over F_p realizing the space, using antidiagonal
/// bases; the even non-split case carries a diag(1, -eps) anisotropic plane
/// with eps a non-square found by search.
struct GramMatrix {
    int dim;
    bool skew;  // skew-symmetric (symplectic) vs symmetric
    std::vector<std::vector<int>> entries;

    static GramMatrix standard(const FormSpace& space, const Int& p);
};

struct BruteForceGuard {
    int max_p = 7;
    int max_dim = 6;
    int max_r = 3;
    bool override_guard = false;
};

/// Exact count of r-dimensional totally isotropic subspaces of (F_p^d, g) by
/// enumeration of reduced row-echelon representatives. Serial reference.
Int brute_force_isotropic_serial(const GramMatrix& g, int r, const Int& p,
                                 BruteForceGuard guard = {});

/// Same count, OpenMP-parallel over echelon pivot patterns and leading free
/// entries. Must agree with the serial reference.
Int brute_force_isotropic(const GramMatrix& g, int r, const Int& p,
                          BruteForceGuard guard = {});

enum class SplitCase { Odd, EvenSplit, EvenNonsplit };

std::string split_case_name(SplitCase c);
SplitCase split_case_from_name(const std::string& name);

/// One arithmetic situation: dimension n, split type, odd prime p.
struct CaseSpec {
    int n;
    SplitCase split_case;
    Int p;

    CaseSpec(int n_, SplitCase c, Int p_);
};

/// Largest theta with a stratum of type 2*theta.
int theta_max(const CaseSpec& c);

enum class IncidenceDirection { Below, Above };

/// Number of type-2*theta' strata below (contained in) or above (containing)
/// a fixed type-2*theta stratum: isotropic subspace counts in the symplectic
/// quotient of dimension 2*theta, resp. the orthogonal quotient of dimension
/// n - 2*theta.
Int strata_incidence(const CaseSpec& c, int theta, int theta_prime,
                     IncidenceDirection direction);

/// Cover multiplicity k_{s,theta} of the Cech nerve for theta_max = 1 cases.
Int cover_multiplicity(const CaseSpec& c, long s, int theta);

/// The multiplicity nu = sum_{i=2}^{N} (-1)^i C(N, i) with N the number of
/// maximal-type neighbours of the type-0 stratum; equals N - 1.
Int nu_multiplicity(const CaseSpec& c);

/// One term of the Cech first page grid: multiplicity copies of the compactly
/// induced representation from the type-2*theta stabilizer, with the scalar
/// sign * p^scalar_exp acting.
struct RZPageTerm {
    int a;
    int b;
    Int multiplicity;  // zero entries are kept to mirror the full grid
    int inducing_theta;
    int scalar_sign;
    int scalar_exp;
};

/// The first page of the Cech spectral sequence for theta_max = 1, as the
/// explicit grid with zero rows included.
std::vector<RZPageTerm> rz_first_page(const CaseSpec& c);

}  // namespace symcox

#endif
