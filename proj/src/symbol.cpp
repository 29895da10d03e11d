#include "symcox/symbol.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace symcox {

namespace {

bool strictly_increasing(const Row& row) {
    for (size_t i = 1; i < row.size(); ++i)
        if (row[i - 1] >= row[i])
            return false;
    return true;
}

bool contains(const Row& row, int v) {
    return std::binary_search(row.begin(), row.end(), v);
}

std::string row_str(const Row& row) {
    std::ostringstream os;
    for (size_t i = 0; i < row.size(); ++i)
        os << (i ? " " : "") << row[i];
    return os.str();
}

}  // namespace

Symbol Symbol::reduce(Row X, Row Y) {
    if (!strictly_increasing(X) || !strictly_increasing(Y))
        throw std::invalid_argument("symbol rows must be strictly increasing");
    if ((!X.empty() && X.front() < 0) || (!Y.empty() && Y.front() < 0))
        throw std::invalid_argument("symbol entries must be non-negative");
    int diff = static_cast<int>(X.size()) - static_cast<int>(Y.size());
    if (diff <= 0 || diff % 2 == 0)
        throw std::invalid_argument(
            "first row must be longer than the second by an odd positive amount");
    while (!X.empty() && !Y.empty() && X.front() == 0 && Y.front() == 0) {
        X.erase(X.begin());
        Y.erase(Y.begin());
        for (int& v : X)
            --v;
        for (int& v : Y)
            --v;
    }
    Symbol s;
    s.X_ = std::move(X);
    s.Y_ = std::move(Y);
    return s;
}

Symbol Symbol::cuspidal(int delta) {
    if (delta < 0)
        throw std::invalid_argument("cuspidal: delta must be >= 0");
    Row X(static_cast<size_t>(2 * delta + 1));
    std::iota(X.begin(), X.end(), 0);
    return reduce(std::move(X), {});
}

Symbol Symbol::trivial(int theta) {
    if (theta < 0)
        throw std::invalid_argument("trivial: theta must be >= 0");
    return reduce({theta}, {});
}

int Symbol::rank() const {
    int sum = std::accumulate(X_.begin(), X_.end(), 0) +
              std::accumulate(Y_.begin(), Y_.end(), 0);
    int n = static_cast<int>(X_.size() + Y_.size());
    return sum - ((n - 1) * (n - 1)) / 4;
}

std::pair<Row, Row> Symbol::shifted(int times) const {
    Row X = X_, Y = Y_;
    for (int t = 0; t < times; ++t) {
        for (int& v : X)
            ++v;
        for (int& v : Y)
            ++v;
        X.insert(X.begin(), 0);
        Y.insert(Y.begin(), 0);
    }
    return {X, Y};
}

std::string Symbol::str() const {
    return "(" + row_str(X_) + " | " + row_str(Y_) + ")";
}

std::string Symbol::two_row_str() const {
    return "( " + row_str(X_) + " )\n( " + row_str(Y_) + " )";
}

std::pair<std::vector<Hook>, std::vector<Cohook>> hooks_and_cohooks(const Symbol& s) {
    std::vector<Hook> hooks;
    std::vector<Cohook> cohooks;
    auto scan_row = [&](const Row& same, const Row& other, RowKind kind) {
        for (int z : same) {
            for (int k = 1; k <= z; ++k) {
                if (!contains(same, z - k)) {
                    int leg = 0;
                    for (int t : same)
                        if (z - k < t && t < z)
                            ++leg;
                    hooks.push_back({kind, z, k, leg});
                }
                if (!contains(other, z - k))
                    cohooks.push_back({kind, z, k});
            }
        }
    };
    scan_row(s.X(), s.Y(), RowKind::First);
    scan_row(s.Y(), s.X(), RowKind::Second);
    std::sort(hooks.begin(), hooks.end());
    std::sort(cohooks.begin(), cohooks.end());
    return {hooks, cohooks};
}

namespace {

// Smallest possible rank of a reduced symbol with second-row length r and
// defect d: rows (0,...,r+d-1) and (1,...,r).
int min_rank(int r, int d) {
    int m = r + d;
    int sum = m * (m - 1) / 2 + r * (r + 1) / 2;
    int n = 2 * r + d;
    return sum - ((n - 1) * (n - 1)) / 4;
}

// All strictly increasing rows of the given length with the given entry sum,
// entries >= lo.
void fill_rows(int length, int sum, int lo, Row& acc, std::vector<Row>& out) {
    if (length == 0) {
        if (sum == 0)
            out.push_back(acc);
        return;
    }
    // remaining entries are at least lo, lo+1, ...
    int floor_sum = length * lo + length * (length - 1) / 2;
    if (sum < floor_sum)
        return;
    // first (smallest) entry v: the rest are >= v+1
    for (int v = lo; v + (length - 1) * v + length * (length - 1) / 2 <= sum; ++v) {
        acc.push_back(v);
        fill_rows(length - 1, sum - v, v + 1, acc, out);
        acc.pop_back();
    }
}

std::vector<Row> rows_with_sum(int length, int sum, int lo) {
    std::vector<Row> out;
    Row acc;
    fill_rows(length, sum, lo, acc, out);
    return out;
}

}  // namespace

std::vector<Symbol> symbols_of_rank(int theta) {
    if (theta < 0)
        throw std::invalid_argument("symbols_of_rank: theta must be >= 0");
    std::vector<Symbol> out;
    for (int d = 1; (d * d) / 4 <= theta; d += 2) {
        for (int r = 0; min_rank(r, d) <= theta; ++r) {
            int n = 2 * r + d;
            int total = theta + ((n - 1) * (n - 1)) / 4;
            for (int sx = 0; sx <= total; ++sx) {
                auto xs = rows_with_sum(r + d, sx, 0);
                if (xs.empty())
                    continue;
                auto ys = rows_with_sum(r, total - sx, 0);
                for (const auto& X : xs)
                    for (const auto& Y : ys) {
                        // only reduced representatives are emitted
                        if (!X.empty() && X.front() == 0 && !Y.empty() && Y.front() == 0)
                            continue;
                        out.push_back(Symbol::reduce(X, Y));
                    }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RatPoly unipotent_degree(const Symbol& s) {
    const int theta = s.rank();
    std::vector<int> entries(s.X());
    entries.insert(entries.end(), s.Y().begin(), s.Y().end());
    std::sort(entries.begin(), entries.end());
    const int n = static_cast<int>(entries.size());

    // a(S) = sum of min over entry pairs - sum_i C(n-2i, 2)
    long a = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            a += std::min(entries[i], entries[j]);
    for (int i = 1; n - 2 * i >= 2; ++i) {
        long m = n - 2 * i;
        a -= m * (m - 1) / 2;
    }
    if (a < 0)
        throw std::logic_error("unipotent_degree: negative q-exponent");

    // b'(S) = floor((n-1)/2) - #(X n Y)
    int common = 0;
    for (int v : s.X())
        if (std::binary_search(s.Y().begin(), s.Y().end(), v))
            ++common;
    int b_prime = (n - 1) / 2 - common;
    if (b_prime < 0)
        throw std::logic_error("unipotent_degree: negative b'");

    auto [hooks, cohooks] = hooks_and_cohooks(s);

    RatPoly num = RatPoly::q_power(static_cast<int>(a));
    for (int i = 1; i <= theta; ++i)
        num = num * RatPoly::q_pow_minus_one(2 * i);
    RatPoly den(Rat(int_pow(Int(2), static_cast<unsigned long>(b_prime))));
    for (const auto& h : hooks)
        den = den * RatPoly::q_pow_minus_one(h.length);
    for (const auto& c : cohooks)
        den = den * RatPoly::q_pow_plus_one(c.length);

    RatFunc quotient(num, den);
    try {
        return quotient.to_poly();
    } catch (const NotPolynomialError&) {
        throw std::logic_error("hook formula did not produce a polynomial for " + s.str());
    }
}

CoreInfo core_and_cuspidal(const Symbol& s) {
    int delta = (s.defect() - 1) / 2;
    Symbol core = Symbol::cuspidal(delta);
    bool cuspidal = (s == core);
    return {core, cuspidal, {delta, s.rank() - delta * (delta + 1)}};
}

Symbol remove_hook(const Symbol& s, const Hook& h) {
    auto [hooks, cohooks] = hooks_and_cohooks(s);
    (void)cohooks;
    if (std::find(hooks.begin(), hooks.end(), h) == hooks.end())
        throw std::invalid_argument("remove_hook: not a hook of the symbol");
    Row X = s.X(), Y = s.Y();
    Row& row = (h.row == RowKind::First) ? X : Y;
    row.erase(std::find(row.begin(), row.end(), h.z));
    row.insert(std::upper_bound(row.begin(), row.end(), h.z - h.length), h.z - h.length);
    return Symbol::reduce(std::move(X), std::move(Y));
}

}  // namespace symcox
