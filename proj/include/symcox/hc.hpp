// Harish-Chandra induction and restriction of 1 x rho along block Levi
// subgroups GL(a) x Sp(2 theta'), realized on symbols as adding/removing a
// pair of leg-length-0 hooks whose lengths sum to a.
#ifndef SYMCOX_HC_HPP
#define SYMCOX_HC_HPP

#include <map>

#include "symcox/symbol.hpp"

namespace symcox {

/// Homogeneous multiset of reduced symbols (all members share one rank).
class SymbolMultiset {
  public:
    SymbolMultiset() = default;

    void add(const Symbol& s, long mult = 1);
    long mult(const Symbol& s) const;
    bool contains(const Symbol& s) const { return mult(s) > 0; }
    bool empty() const { return entries_.empty(); }
    size_t distinct_count() const { return entries_.size(); }
    long total_count() const;
    bool multiplicity_free() const;

    const std::map<Symbol, long>& entries() const { return entries_; }

    SymbolMultiset united(const SymbolMultiset& other) const;
    bool operator==(const SymbolMultiset& other) const = default;

    /// Sum of unipotent degrees, with multiplicity.
    RatPoly total_degree() const;

    std::string str() const;

  private:
    std::map<Symbol, long> entries_;
};

struct HCResult {
    SymbolMultiset symbols;   // each produced symbol with multiplicity 1
    long duplicate_paths = 0; // distinct (a1, a2, site) choices that collided
};

/// All symbols obtained from s_prime by adding an a1-hook of leg length 0 to
/// the first row and an a2-hook of leg length 0 to the second row, over all
/// splits a1 + a2 = a. Hook addition works on a once-shifted representative so
/// the virtual leading 0 of each row is available as a site; results are
/// reduced and deduplicated.
HCResult induce(const Symbol& s_prime, int a);

/// All symbols obtained from s by removing such a hook pair; a <= rank(s).
HCResult restrict(const Symbol& s, int a);

/// Index [G : P] of the parabolic with Levi GL(a) x Sp(2 theta') inside
/// Sp(2 (theta'+a)), as a polynomial in q. Equals the sum of the degrees of
/// induce(s', a) divided by the degree of s'.
RatPoly parabolic_index(int theta_prime, int a);

}  // namespace symcox

#endif
