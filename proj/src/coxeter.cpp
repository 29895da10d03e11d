#include "symcox/coxeter.hpp"

#include <sstream>

namespace symcox {

std::string EigenvalueLabel::str() const {
    std::ostringstream os;
    os << (sign == Plus ? "+" : "-") << "q^" << exponent;
    return os.str();
}

const SymbolMultiset* GradedRep::cell(int degree, const EigenvalueLabel& label) const {
    auto it = by_degree.find(degree);
    if (it == by_degree.end())
        return nullptr;
    auto jt = it->second.find(label);
    if (jt == it->second.end())
        return nullptr;
    return &jt->second;
}

CoxeterSymbols coxeter_symbols(int k) {
    if (k < 0)
        throw std::invalid_argument("coxeter_symbols: k must be >= 0");
    CoxeterSymbols out;
    for (int i = 0; i <= k; ++i) {
        // S(i) = (0, ..., k-i-1, k | 1, ..., k-i)
        Row X, Y;
        for (int v = 0; v <= k - i - 1; ++v)
            X.push_back(v);
        X.push_back(k);
        for (int v = 1; v <= k - i; ++v)
            Y.push_back(v);
        out.S.push_back(Symbol::reduce(X, Y));
    }
    for (int j = 0; j <= k - 2; ++j) {
        // T(j) = (0, ..., k-j-1, k | 1, ..., k-j-2)
        Row X, Y;
        for (int v = 0; v <= k - j - 1; ++v)
            X.push_back(v);
        X.push_back(k);
        for (int v = 1; v <= k - j - 2; ++v)
            Y.push_back(v);
        out.T.push_back(Symbol::reduce(X, Y));
    }
    return out;
}

RatPoly lusztig_degree(int k, CoxeterSlot slot) {
    if (k < 0)
        throw std::invalid_argument("lusztig_degree: k must be >= 0");
    if (slot.series == CoxeterSeries::S) {
        int i = slot.index;
        if (i < 0 || i > k)
            throw std::invalid_argument("lusztig_degree: S index out of range");
        RatPoly num = RatPoly::q_power((k - i) * (k - i));
        RatPoly den(1L);
        for (int s = 1; s <= k - i; ++s) {
            num = num * RatPoly::q_pow_minus_one(s + i);
            den = den * RatPoly::q_pow_minus_one(s);
        }
        for (int s = 0; s <= k - i - 1; ++s) {
            num = num * RatPoly::q_pow_plus_one(s + i);
            den = den * RatPoly::q_pow_plus_one(s);
        }
        return RatFunc(num, den).to_poly();
    }
    int j = slot.index;
    if (j < 0 || j > k - 2)
        throw std::invalid_argument("lusztig_degree: T index out of range");
    RatPoly num = RatPoly::q_power((k - j - 1) * (k - j - 1));
    num = num * RatPoly::q_pow_minus_one(k - 1) * RatPoly::q_pow_minus_one(k);
    RatPoly den = RatPoly(2L) * RatPoly::q_pow_plus_one(1);
    for (int s = 1; s <= k - j - 2; ++s) {
        num = num * RatPoly::q_pow_minus_one(s + j);
        den = den * RatPoly::q_pow_minus_one(s);
    }
    for (int s = 2; s <= k - j - 1; ++s) {
        num = num * RatPoly::q_pow_plus_one(s + j);
        den = den * RatPoly::q_pow_plus_one(s);
    }
    return RatFunc(num, den).to_poly();
}

GradedRep coxeter_graded(int k) {
    auto syms = coxeter_symbols(k);
    GradedRep g;
    for (int i = 0; i <= k; ++i) {
        auto& cells = g.by_degree[k + i];
        SymbolMultiset ms;
        ms.add(syms.S[static_cast<size_t>(i)]);
        cells.emplace(EigenvalueLabel::plus(i), std::move(ms));
        if (i <= k - 2) {
            SymbolMultiset mt;
            mt.add(syms.T[static_cast<size_t>(i)]);
            cells.emplace(EigenvalueLabel::minus(i + 1), std::move(mt));
        }
    }
    return g;
}

RecursionReport verify_restriction_recursion(int k) {
    if (k < 1)
        throw std::invalid_argument("verify_restriction_recursion: k must be >= 1");
    RecursionReport report{k, {}};
    GradedRep top = coxeter_graded(k);
    GradedRep low = coxeter_graded(k - 1);

    for (int i = 0; i <= k; ++i) {
        // collect, per label, the restriction of the degree-(k+i) cell
        std::map<EigenvalueLabel, SymbolMultiset> lhs;
        auto it = top.by_degree.find(k + i);
        if (it != top.by_degree.end())
            for (const auto& [label, ms] : it->second)
                for (const auto& [s, m] : ms.entries()) {
                    auto restricted = restrict(s, 1);
                    for (const auto& [t, mt] : restricted.symbols.entries())
                        lhs[label].add(t, m * mt);
                }

        // right side: degree k-1+i cell plus the Tate-twisted degree k-2+i cell
        std::map<EigenvalueLabel, SymbolMultiset> rhs;
        auto jt = low.by_degree.find(k - 1 + i);
        if (jt != low.by_degree.end())
            for (const auto& [label, ms] : jt->second)
                for (const auto& [s, m] : ms.entries())
                    rhs[label].add(s, m);
        jt = low.by_degree.find(k - 2 + i);
        if (jt != low.by_degree.end())
            for (const auto& [label, ms] : jt->second)
                for (const auto& [s, m] : ms.entries())
                    rhs[label.twisted()].add(s, m);

        std::map<EigenvalueLabel, bool> labels;
        for (const auto& [l, ms] : lhs)
            labels[l] = true;
        for (const auto& [l, ms] : rhs)
            labels[l] = true;
        for (const auto& [label, unused] : labels) {
            (void)unused;
            SymbolMultiset l = lhs.count(label) ? lhs[label] : SymbolMultiset();
            SymbolMultiset r = rhs.count(label) ? rhs[label] : SymbolMultiset();
            if (!(l == r)) {
                std::ostringstream os;
                os << "k=" << k << " degree " << k + i << " label " << label.str()
                   << ": restriction gives " << l.str() << " but expected " << r.str();
                report.mismatches.push_back(os.str());
            }
        }
    }
    return report;
}

}  // namespace symcox
