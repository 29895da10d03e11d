// Lusztig symbols for type-C unipotent characters: reduced two-row arrays,
// rank/defect, hooks and cohooks, cores, cuspidal support and the hook
// dimension formula.
#ifndef SYMCOX_SYMBOL_HPP
#define SYMCOX_SYMBOL_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "symcox/poly.hpp"

namespace symcox {

using Row = std::vector<int>;

/// A reduced symbol (X, Y): both rows strictly increasing and non-negative,
/// the first row strictly longer by an odd amount, and not both rows
/// containing 0 (no inverse shift applies). Construct through reduce().
class Symbol {
  public:
    /// Validates the rows and applies inverse shifts to exhaustion.
    /// Throws std::invalid_argument on malformed input.
    static Symbol reduce(Row X, Row Y);

    /// The cuspidal symbol (0, 1, ..., 2*delta ; -) of rank delta*(delta+1).
    static Symbol cuspidal(int delta);
    /// The trivial-representation symbol (theta ; -).
    static Symbol trivial(int theta);

    const Row& X() const { return X_; }
    const Row& Y() const { return Y_; }

    int rank() const;
    int defect() const { return static_cast<int>(X_.size() - Y_.size()); }

    /// shift(S) = ({0} u (X+1), {0} u (Y+1)); used by tests to check
    /// shift-invariance of derived data.
    std::pair<Row, Row> shifted(int times = 1) const;

    auto operator<=>(const Symbol& other) const = default;

    /// "(0 1 3 | 2)" single-line form; two_row_str() gives the matrix layout.
    std::string str() const;
    std::string two_row_str() const;

  private:
    Symbol() = default;
    Row X_, Y_;
};

enum class RowKind { First, Second };

/// A k-hook: an entry z of a row with z-k >= 0 missing from the same row.
struct Hook {
    RowKind row;
    int z;
    int length;
    int leg_length;  // same-row entries strictly between z-k and z
    auto operator<=>(const Hook&) const = default;
};

/// A k-cohook: an entry z of a row with z-k >= 0 missing from the other row.
struct Cohook {
    RowKind row;
    int z;
    int length;
    auto operator<=>(const Cohook&) const = default;
};

/// Identifies the Harish-Chandra series of a symbol: the Levi
/// GL(1)^a x Sp(2 delta(delta+1)) carrying the cuspidal datum.
struct CuspidalSupport {
    int delta;
    int a;  // rank - delta*(delta+1)
    auto operator<=>(const CuspidalSupport&) const = default;
};

/// Complete hook and cohook multisets of a symbol (computed on the reduced
/// representative; the multisets are shift-invariant).
std::pair<std::vector<Hook>, std::vector<Cohook>> hooks_and_cohooks(const Symbol& s);

/// All reduced symbols of the given rank, over every odd defect. Sorted.
std::vector<Symbol> symbols_of_rank(int theta);

/// Generic degree of the unipotent character attached to s, by the hook
/// formula:
///   q^a(S) * prod_{i<=theta} (q^{2i}-1)
///     / ( 2^b'(S) * prod_hooks (q^l-1) * prod_cohooks (q^l+1) ).
/// The quotient is always a polynomial; a non-polynomial result indicates a
/// bug and raises std::logic_error.
RatPoly unipotent_degree(const Symbol& s);

struct CoreInfo {
    Symbol core;
    bool is_cuspidal;
    CuspidalSupport support;
};

/// Core S_delta of the symbol's defect, cuspidality, and cuspidal support.
CoreInfo core_and_cuspidal(const Symbol& s);

/// Removes a hook (must be a hook of s): z is replaced by z-k in its row.
/// The result has rank(s) - k and the same defect.
Symbol remove_hook(const Symbol& s, const Hook& h);

}  // namespace symcox

#endif
