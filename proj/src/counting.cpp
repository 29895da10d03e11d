#include "symcox/counting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef SYMCOX_HAVE_OPENMP
#include <omp.h>
#endif

namespace symcox {

std::string form_kind_name(FormKind kind) {
    switch (kind) {
        case FormKind::Symplectic: return "symplectic";
        case FormKind::OrthogonalOdd: return "orthogonal-odd";
        case FormKind::OrthogonalEvenSplit: return "orthogonal-even-split";
        case FormKind::OrthogonalEvenNonsplit: return "orthogonal-even-nonsplit";
    }
    throw std::logic_error("unreachable");
}

FormKind form_kind_from_name(const std::string& name) {
    if (name == "symplectic") return FormKind::Symplectic;
    if (name == "orthogonal-odd") return FormKind::OrthogonalOdd;
    if (name == "orthogonal-even-split") return FormKind::OrthogonalEvenSplit;
    if (name == "orthogonal-even-nonsplit") return FormKind::OrthogonalEvenNonsplit;
    throw std::invalid_argument("unknown form kind: '" + name + "'");
}

FormSpace::FormSpace(FormKind k, int d) : kind(k), dim(d) {
    if (d < 0)
        throw std::invalid_argument("FormSpace: negative dimension");
    bool even = d % 2 == 0;
    if (kind == FormKind::OrthogonalOdd ? even : !even)
        throw std::invalid_argument("FormSpace: dimension parity does not match kind");
    if (kind == FormKind::OrthogonalEvenNonsplit && d < 2)
        throw std::invalid_argument("FormSpace: non-split space needs dimension >= 2");
}

int FormSpace::witt_index() const {
    switch (kind) {
        case FormKind::Symplectic:
        case FormKind::OrthogonalEvenSplit: return dim / 2;
        case FormKind::OrthogonalEvenNonsplit: return dim / 2 - 1;
        case FormKind::OrthogonalOdd: return (dim - 1) / 2;
    }
    throw std::logic_error("unreachable");
}

namespace {

Int divexact(const Int& a, const Int& b) {
    if (b == 0 || a % b != 0)
        throw std::logic_error("count_isotropic: non-exact division");
    return a / b;
}

void require_odd_prime(const Int& p) {
    if (p < 3 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("p must be an odd prime");
}

}  // namespace

Int count_isotropic(const FormSpace& space, int r, const Int& p) {
    require_odd_prime(p);
    int delta = space.witt_index();
    if (r < 0 || r > delta)
        throw std::invalid_argument("count_isotropic: r exceeds Witt index");
    Int num(1), den(1);
    for (int i = 1; i <= r; ++i) {
        num *= int_pow(p, static_cast<unsigned long>(2 * (i + delta - r))) - 1;
        den *= int_pow(p, static_cast<unsigned long>(i)) - 1;
    }
    if (space.kind == FormKind::OrthogonalEvenNonsplit) {
        num *= int_pow(p, static_cast<unsigned long>(delta + 1)) + 1;
        den *= int_pow(p, static_cast<unsigned long>(delta + 1 - r)) + 1;
    } else if (space.kind == FormKind::OrthogonalEvenSplit) {
        num *= int_pow(p, static_cast<unsigned long>(delta - r)) + 1;
        den *= int_pow(p, static_cast<unsigned long>(delta)) + 1;
    }
    return divexact(num, den);
}

GramMatrix GramMatrix::standard(const FormSpace& space, const Int& p) {
    require_odd_prime(p);
    if (!p.fits_sint_p())
        throw std::invalid_argument("GramMatrix: p too large for the oracle");
    long pl = p.get_si();
    int d = space.dim;
    GramMatrix g;
    g.dim = d;
    g.skew = space.kind == FormKind::Symplectic;
    g.entries.assign(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d), 0));
    switch (space.kind) {
        case FormKind::Symplectic: {
            int h = d / 2;
            for (int i = 0; i < d; ++i)
                g.entries[static_cast<size_t>(i)][static_cast<size_t>(d - 1 - i)] =
                    i < h ? 1 : static_cast<int>(pl - 1);  // -1 mod p
            break;
        }
        case FormKind::OrthogonalOdd:
        case FormKind::OrthogonalEvenSplit:
            for (int i = 0; i < d; ++i)
                g.entries[static_cast<size_t>(i)][static_cast<size_t>(d - 1 - i)] = 1;
            break;
        case FormKind::OrthogonalEvenNonsplit: {
            for (int i = 0; i < d - 2; ++i)
                g.entries[static_cast<size_t>(i)][static_cast<size_t>(d - 3 - i)] = 1;
            // anisotropic plane diag(1, -eps), eps the smallest non-square mod p
            long eps = 0;
            for (long t = 2; t < pl; ++t) {
                long pow = 1, base = t, e = (pl - 1) / 2;
                while (e) {
                    if (e & 1)
                        pow = pow * base % pl;
                    base = base * base % pl;
                    e >>= 1;
                }
                if (pow == pl - 1) {
                    eps = t;
                    break;
                }
            }
            if (eps == 0)
                throw std::logic_error("no quadratic non-residue found");
            g.entries[static_cast<size_t>(d - 2)][static_cast<size_t>(d - 2)] = 1;
            g.entries[static_cast<size_t>(d - 1)][static_cast<size_t>(d - 1)] =
                static_cast<int>((pl - eps) % pl);
            break;
        }
    }
    return g;
}

namespace {

struct EchelonPattern {
    std::vector<int> pivots;                    // pivot column per row
    std::vector<std::pair<int, int>> free_pos;  // (row, col) free slots
};

std::vector<EchelonPattern> echelon_patterns(int d, int r) {
    std::vector<EchelonPattern> out;
    std::vector<int> idx(static_cast<size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        EchelonPattern pat;
        pat.pivots = idx;
        for (int row = 0; row < r; ++row)
            for (int col = idx[static_cast<size_t>(row)] + 1; col < d; ++col)
                if (!std::binary_search(idx.begin(), idx.end(), col))
                    pat.free_pos.push_back({row, col});
        out.push_back(std::move(pat));
        // next r-combination of {0..d-1}
        int k = r - 1;
        while (k >= 0 && idx[static_cast<size_t>(k)] == d - r + k)
            --k;
        if (k < 0)
            break;
        ++idx[static_cast<size_t>(k)];
        for (int t = k + 1; t < r; ++t)
            idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
    }
    return out;
}

// Counts the isotropic members of one echelon pattern with the leading
// `prefix.size()` free slots pinned.
long count_pattern(const GramMatrix& g, int r, long p, const EchelonPattern& pat,
                   const std::vector<int>& prefix) {
    const int d = g.dim;
    const size_t nfree = pat.free_pos.size();
    std::vector<std::vector<long>> m(static_cast<size_t>(r),
                                     std::vector<long>(static_cast<size_t>(d), 0));
    for (int row = 0; row < r; ++row)
        m[static_cast<size_t>(row)][static_cast<size_t>(pat.pivots[static_cast<size_t>(row)])] = 1;

    std::vector<int> digits(nfree, 0);
    std::copy(prefix.begin(), prefix.end(), digits.begin());
    auto apply = [&](size_t slot) {
        auto [row, col] = pat.free_pos[slot];
        m[static_cast<size_t>(row)][static_cast<size_t>(col)] = digits[slot];
    };
    for (size_t slot = 0; slot < nfree; ++slot)
        apply(slot);

    std::vector<std::vector<long>> w(static_cast<size_t>(r),
                                     std::vector<long>(static_cast<size_t>(d), 0));
    long count = 0;
    while (true) {
        // w = m * G, then test w[a] . m[b] = 0 for the needed pairs
        for (int a = 0; a < r; ++a)
            for (int j = 0; j < d; ++j) {
                long acc = 0;
                for (int i = 0; i < d; ++i)
                    acc += m[static_cast<size_t>(a)][static_cast<size_t>(i)] *
                           g.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
                w[static_cast<size_t>(a)][static_cast<size_t>(j)] = acc % p;
            }
        bool isotropic = true;
        for (int a = 0; a < r && isotropic; ++a)
            for (int b = g.skew ? a + 1 : a; b < r && isotropic; ++b) {
                long acc = 0;
                for (int i = 0; i < d; ++i)
                    acc += w[static_cast<size_t>(a)][static_cast<size_t>(i)] *
                           m[static_cast<size_t>(b)][static_cast<size_t>(i)];
                if (acc % p != 0)
                    isotropic = false;
            }
        if (isotropic)
            ++count;

        // odometer over the non-pinned slots
        bool advanced = false;
        size_t slot = nfree;
        while (slot > prefix.size()) {
            --slot;
            if (digits[slot] + 1 < p) {
                ++digits[slot];
                apply(slot);
                advanced = true;
                break;
            }
            digits[slot] = 0;
            apply(slot);
        }
        if (!advanced)
            return count;
    }
}

void check_guard(const GramMatrix& g, int r, const Int& p, const BruteForceGuard& guard) {
    require_odd_prime(p);
    if (r < 0 || r > g.dim)
        throw std::invalid_argument("brute force: need 0 <= r <= dim");
    if (guard.override_guard)
        return;
    if (p > guard.max_p || g.dim > guard.max_dim || r > guard.max_r)
        throw std::invalid_argument(
            "brute force guard exceeded (p <= 7, dim <= 6, r <= 3); pass override to force");
}

}  // namespace

Int brute_force_isotropic_serial(const GramMatrix& g, int r, const Int& p,
                                 BruteForceGuard guard) {
    check_guard(g, r, p, guard);
    if (r == 0)
        return 1;
    long pl = p.get_si();
    long total = 0;
    for (const auto& pat : echelon_patterns(g.dim, r))
        total += count_pattern(g, r, pl, pat, {});
    return Int(total);
}

Int brute_force_isotropic(const GramMatrix& g, int r, const Int& p, BruteForceGuard guard) {
    check_guard(g, r, p, guard);
    if (r == 0)
        return 1;
    long pl = p.get_si();
    auto patterns = echelon_patterns(g.dim, r);

    // split each pattern on its leading free slots until there are enough
    // independent tasks to schedule
    struct Task {
        const EchelonPattern* pat;
        std::vector<int> prefix;
    };
    std::vector<Task> tasks;
    for (const auto& pat : patterns) {
        size_t depth = 0;
        long width = 1;
        while (depth < pat.free_pos.size() && width < 256) {
            width *= pl;
            ++depth;
        }
        std::vector<int> prefix(depth, 0);
        while (true) {
            tasks.push_back({&pat, prefix});
            size_t slot = depth;
            bool done = true;
            while (slot > 0) {
                --slot;
                if (prefix[slot] + 1 < pl) {
                    ++prefix[slot];
                    std::fill(prefix.begin() + static_cast<long>(slot) + 1, prefix.end(), 0);
                    done = false;
                    break;
                }
            }
            if (done)
                break;
            if (depth == 0)
                break;
        }
    }

    long total = 0;
#ifdef SYMCOX_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
#endif
    for (size_t t = 0; t < tasks.size(); ++t)
        total += count_pattern(g, r, pl, *tasks[t].pat, tasks[t].prefix);
    return Int(total);
}

std::string split_case_name(SplitCase c) {
    switch (c) {
        case SplitCase::Odd: return "odd";
        case SplitCase::EvenSplit: return "even-split";
        case SplitCase::EvenNonsplit: return "even-nonsplit";
    }
    throw std::logic_error("unreachable");
}

SplitCase split_case_from_name(const std::string& name) {
    if (name == "odd") return SplitCase::Odd;
    if (name == "even-split") return SplitCase::EvenSplit;
    if (name == "even-nonsplit") return SplitCase::EvenNonsplit;
    throw std::invalid_argument("unknown split case: '" + name + "'");
}

CaseSpec::CaseSpec(int n_, SplitCase c, Int p_) : n(n_), split_case(c), p(std::move(p_)) {
    if (n < 1)
        throw std::invalid_argument("CaseSpec: n must be >= 1");
    if ((n % 2 == 1) != (split_case == SplitCase::Odd))
        throw std::invalid_argument("CaseSpec: split case 'odd' exactly when n is odd");
    require_odd_prime(p);
}

int theta_max(const CaseSpec& c) {
    switch (c.split_case) {
        case SplitCase::Odd: return (c.n - 1) / 2;
        case SplitCase::EvenSplit: return c.n / 2;
        case SplitCase::EvenNonsplit: return (c.n - 2) / 2;
    }
    throw std::logic_error("unreachable");
}

Int strata_incidence(const CaseSpec& c, int theta, int theta_prime,
                     IncidenceDirection direction) {
    int tmax = theta_max(c);
    if (direction == IncidenceDirection::Below) {
        if (!(0 <= theta_prime && theta_prime <= theta && theta <= tmax))
            throw std::invalid_argument("strata_incidence: need 0 <= theta' <= theta <= theta_max");
        return count_isotropic(FormSpace(FormKind::Symplectic, 2 * theta), theta - theta_prime,
                               c.p);
    }
    if (!(0 <= theta && theta <= theta_prime && theta_prime <= tmax))
        throw std::invalid_argument("strata_incidence: need 0 <= theta <= theta' <= theta_max");
    FormKind kind = c.split_case == SplitCase::Odd          ? FormKind::OrthogonalOdd
                    : c.split_case == SplitCase::EvenSplit  ? FormKind::OrthogonalEvenSplit
                                                            : FormKind::OrthogonalEvenNonsplit;
    return count_isotropic(FormSpace(kind, c.n - 2 * theta), theta_prime - theta, c.p);
}

namespace {

void require_theta_max_one(const CaseSpec& c, const char* who) {
    if (theta_max(c) != 1)
        throw std::invalid_argument(std::string(who) +
                                    ": general theta_max requires lattice enumeration, out of scope");
}

}  // namespace

Int cover_multiplicity(const CaseSpec& c, long s, int theta) {
    require_theta_max_one(c, "cover_multiplicity");
    if (s < 1)
        throw std::invalid_argument("cover_multiplicity: s must be >= 1");
    if (theta != 0 && theta != 1)
        throw std::invalid_argument("cover_multiplicity: theta must be 0 or 1");
    if (theta == 1)
        return s == 1 ? 1 : 0;
    if (s == 1)
        return 0;
    Int neighbours = strata_incidence(c, 0, 1, IncidenceDirection::Above);
    return binomial(neighbours, s);
}

Int nu_multiplicity(const CaseSpec& c) {
    require_theta_max_one(c, "nu_multiplicity");
    Int neighbours = strata_incidence(c, 0, 1, IncidenceDirection::Above);
    if (!neighbours.fits_slong_p())
        throw std::invalid_argument("nu_multiplicity: neighbour count too large");
    long n = neighbours.get_si();
    Int nu(0);
    for (long i = 2; i <= n; ++i) {
        Int term = binomial(neighbours, i);
        nu += (i % 2 == 0) ? term : -term;
    }
    return nu;
}

std::vector<RZPageTerm> rz_first_page(const CaseSpec& c) {
    require_theta_max_one(c, "rz_first_page");
    Int neighbours = strata_incidence(c, 0, 1, IncidenceDirection::Above);
    if (!neighbours.fits_slong_p())
        throw std::invalid_argument("rz_first_page: neighbour count too large");
    long nn = neighbours.get_si();
    const int top = 2 * (c.n - 1);
    std::vector<RZPageTerm> grid;
    // top row: theta = 0 terms with Cech multiplicity k_{s,0}, s >= 2
    for (long s = nn; s >= 2; --s)
        grid.push_back({static_cast<int>(1 - s), top, binomial(neighbours, s), 0, +1, c.n - 1});
    // the a = 0 column, explicit zero rows included
    for (int b = top; b >= 0; --b) {
        if (b == top)
            grid.push_back({0, b, Int(1), 1, +1, c.n - 1});
        else if (b == top - 2)
            grid.push_back({0, b, Int(1), 1, +1, c.n - 2});
        else
            grid.push_back({0, b, Int(0), 0, +1, 0});
    }
    return grid;
}

}  // namespace symcox
