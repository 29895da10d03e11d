#include "symcox/hc.hpp"

#include <algorithm>
#include <sstream>

namespace symcox {

void SymbolMultiset::add(const Symbol& s, long mult) {
    if (mult <= 0)
        throw std::invalid_argument("SymbolMultiset::add: multiplicity must be positive");
    if (!entries_.empty() && entries_.begin()->first.rank() != s.rank())
        throw std::invalid_argument("SymbolMultiset::add: mixed ranks");
    entries_[s] += mult;
}

long SymbolMultiset::mult(const Symbol& s) const {
    auto it = entries_.find(s);
    return it == entries_.end() ? 0 : it->second;
}

long SymbolMultiset::total_count() const {
    long n = 0;
    for (const auto& [s, m] : entries_)
        n += m;
    return n;
}

bool SymbolMultiset::multiplicity_free() const {
    for (const auto& [s, m] : entries_)
        if (m != 1)
            return false;
    return true;
}

SymbolMultiset SymbolMultiset::united(const SymbolMultiset& other) const {
    SymbolMultiset out = *this;
    for (const auto& [s, m] : other.entries_)
        out.add(s, m);
    return out;
}

RatPoly SymbolMultiset::total_degree() const {
    RatPoly sum;
    for (const auto& [s, m] : entries_)
        sum = sum + unipotent_degree(s) * Rat(m);
    return sum;
}

std::string SymbolMultiset::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [s, m] : entries_) {
        if (!first)
            os << ", ";
        first = false;
        os << s.str();
        if (m != 1)
            os << "^" << m;
    }
    os << "}";
    return os.str();
}

namespace {

// Rows produced by adding a k-hook of leg length 0 to `row`: pick a site t in
// the row with t+k absent and no entry strictly between t and t+k, replace t
// by t+k. k = 0 is the identity.
std::vector<Row> rows_after_hook_addition(const Row& row, int k) {
    if (k == 0)
        return {row};
    std::vector<Row> out;
    for (size_t i = 0; i < row.size(); ++i) {
        int t = row[i];
        bool ok = true;
        for (int v : row) {
            if (v == t + k || (t < v && v < t + k)) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        Row next = row;
        next.erase(next.begin() + static_cast<long>(i));
        next.insert(std::upper_bound(next.begin(), next.end(), t + k), t + k);
        out.push_back(std::move(next));
    }
    return out;
}

// Rows produced by removing a k-hook of leg length 0: pick z in the row with
// z-k >= 0 absent and no entry strictly between z-k and z, replace z by z-k.
std::vector<Row> rows_after_hook_removal(const Row& row, int k) {
    if (k == 0)
        return {row};
    std::vector<Row> out;
    for (size_t i = 0; i < row.size(); ++i) {
        int z = row[i];
        if (z < k)
            continue;
        bool ok = true;
        for (int v : row) {
            if (v == z - k || (z - k < v && v < z)) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        Row next = row;
        next.erase(next.begin() + static_cast<long>(i));
        next.insert(std::upper_bound(next.begin(), next.end(), z - k), z - k);
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace

HCResult induce(const Symbol& s_prime, int a) {
    if (a < 0)
        throw std::invalid_argument("induce: a must be >= 0");
    // one shift exposes a virtual 0 site per row; enough for one hook per row
    auto [X1, Y1] = s_prime.shifted(1);
    std::map<Symbol, long> paths;
    for (int a1 = 0; a1 <= a; ++a1) {
        int a2 = a - a1;
        for (const Row& X : rows_after_hook_addition(X1, a1))
            for (const Row& Y : rows_after_hook_addition(Y1, a2))
                paths[Symbol::reduce(X, Y)] += 1;
    }
    HCResult result;
    for (const auto& [s, n] : paths) {
        result.symbols.add(s, 1);
        result.duplicate_paths += n - 1;
    }
    return result;
}

HCResult restrict(const Symbol& s, int a) {
    if (a < 0 || a > s.rank())
        throw std::invalid_argument("restrict: a must satisfy 0 <= a <= rank");
    std::map<Symbol, long> paths;
    for (int a1 = 0; a1 <= a; ++a1) {
        int a2 = a - a1;
        for (const Row& X : rows_after_hook_removal(s.X(), a1))
            for (const Row& Y : rows_after_hook_removal(s.Y(), a2))
                paths[Symbol::reduce(X, Y)] += 1;
    }
    HCResult result;
    for (const auto& [sym, n] : paths) {
        result.symbols.add(sym, 1);
        result.duplicate_paths += n - 1;
    }
    return result;
}

RatPoly parabolic_index(int theta_prime, int a) {
    if (theta_prime < 0 || a < 0)
        throw std::invalid_argument("parabolic_index: arguments must be >= 0");
    RatPoly num(1L), den(1L);
    for (int i = theta_prime + 1; i <= theta_prime + a; ++i)
        num = num * RatPoly::q_pow_minus_one(2 * i);
    for (int i = 1; i <= a; ++i)
        den = den * RatPoly::q_pow_minus_one(i);
    return RatFunc(num, den).to_poly();
}

}  // namespace symcox
