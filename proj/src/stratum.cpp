#include "symcox/stratum.hpp"

#include <algorithm>
#include <sstream>

namespace symcox {

namespace {

Row make_row(int consecutive_hi, std::vector<int> extras) {
    // {0, ..., consecutive_hi} followed by the extras, as a strictly
    // increasing row; a collision means a family template is used outside
    // its side conditions
    Row row;
    for (int v = 0; v <= consecutive_hi; ++v)
        row.push_back(v);
    for (int v : extras)
        row.push_back(v);
    std::sort(row.begin(), row.end());
    for (size_t i = 1; i < row.size(); ++i)
        if (row[i - 1] >= row[i])
            throw std::logic_error("family template produced a non-increasing row");
    return row;
}

Row iota_row(int lo, int hi) {  // {lo, ..., hi}, empty when hi < lo
    Row row;
    for (int v = lo; v <= hi; ++v)
        row.push_back(v);
    return row;
}

Row with(Row row, std::vector<int> extras) {
    for (int v : extras)
        row.push_back(v);
    std::sort(row.begin(), row.end());
    for (size_t i = 1; i < row.size(); ++i)
        if (row[i - 1] >= row[i])
            throw std::logic_error("family template produced a non-increasing row");
    return row;
}

}  // namespace

const SymbolMultiset* SpectralPage::cell(int a, int b, const EigenvalueLabel& label) const {
    auto it = cells.find({a, b});
    if (it == cells.end())
        return nullptr;
    auto jt = it->second.find(label);
    if (jt == it->second.end())
        return nullptr;
    return &jt->second;
}

SpectralPage e1_page(int theta) {
    if (theta < 0)
        throw std::invalid_argument("e1_page: theta must be >= 0");
    SpectralPage page;
    page.theta = theta;
    for (int a = 0; a <= theta; ++a) {
        GradedRep coxeter = coxeter_graded(a);
        for (const auto& [degree, labelled] : coxeter.by_degree) {
            int b = degree - a;
            for (const auto& [label, symbols] : labelled) {
                SymbolMultiset induced;
                for (const auto& [s, m] : symbols.entries()) {
                    auto result = induce(s, theta - a);
                    for (const auto& [t, mt] : result.symbols.entries())
                        induced.add(t, m * mt);
                }
                page.cells[{a, b}].emplace(label, std::move(induced));
            }
        }
    }
    return page;
}

std::map<std::string, std::vector<Symbol>> family_terms(int theta, int theta_prime,
                                                        CoxeterSlot slot) {
    if (theta_prime < 0 || theta_prime > theta)
        throw std::invalid_argument("family_terms: need 0 <= theta' <= theta");
    const int tp = theta_prime;
    std::map<std::string, std::vector<Symbol>> out;

    if (slot.series == CoxeterSeries::S) {
        const int i = slot.index;
        if (i < 0 || i > tp)
            throw std::invalid_argument("family_terms: S index out of range");
        if (i == tp) {
            auto& s1p = out["S1'"];
            for (int d = 0; d <= theta - tp; ++d)
                s1p.push_back(Symbol::reduce(make_row(0, {tp + 1 + d}), {theta - tp - d}));
            auto& s2p = out["S2'"];
            for (int d = 1; d <= std::min(tp, theta - tp); ++d)
                s2p.push_back(Symbol::reduce({d, tp + 1}, {theta - tp - d}));
            return out;
        }
        auto& s1 = out["S1"];
        for (int d = 0; d <= theta - tp; ++d)
            s1.push_back(Symbol::reduce(make_row(tp - i - 1, {tp + d}),
                                        with(iota_row(1, tp - i - 1), {theta - i - d})));
        auto& s2 = out["S2"];
        for (int d = 1; d <= std::min(i, theta - tp); ++d)
            s2.push_back(Symbol::reduce(make_row(tp - i - 2, {tp - i - 1 + d, tp}),
                                        with(iota_row(1, tp - i - 1), {theta - i - d})));
        if (tp != theta)
            out["S Exc 1"].push_back(
                Symbol::reduce(make_row(tp - i, {theta}), iota_row(1, tp - i + 1)));
        if (tp != theta && tp != theta - 1 && theta <= tp + i + 1)
            out["S Exc 2"].push_back(Symbol::reduce(
                make_row(tp - i - 1, {theta - i - 1, tp + 1}), iota_row(1, tp - i + 1)));
        return out;
    }

    const int j = slot.index;
    if (j < 0 || j > tp - 2)
        throw std::invalid_argument("family_terms: T index out of range");
    if (j + 2 == tp) {
        auto& t1p = out["T1'"];
        for (int d = 0; d <= theta - tp; ++d)
            t1p.push_back(Symbol::reduce(make_row(2, {tp + 1 + d}), {theta - tp - d}));
        auto& t2p = out["T2'"];
        for (int d = 1; d <= std::min(tp - 2, theta - tp); ++d)
            t2p.push_back(Symbol::reduce(with({0, 1}, {2 + d, tp + 1}), {theta - tp - d}));
        return out;
    }
    auto& t1 = out["T1"];
    for (int d = 0; d <= theta - tp; ++d)
        t1.push_back(Symbol::reduce(make_row(tp - j - 1, {tp + d}),
                                    with(iota_row(1, tp - j - 3), {theta - j - 2 - d})));
    auto& t2 = out["T2"];
    for (int d = 1; d <= std::min(j, theta - tp); ++d)
        t2.push_back(Symbol::reduce(make_row(tp - j - 2, {tp - j - 1 + d, tp}),
                                    with(iota_row(1, tp - j - 3), {theta - j - 2 - d})));
    if (tp != theta)
        out["T Exc 1"].push_back(
            Symbol::reduce(make_row(tp - j, {theta}), iota_row(1, tp - j - 1)));
    if (tp != theta && tp != theta - 1 && theta <= tp + j + 1)
        out["T Exc 2"].push_back(Symbol::reduce(
            make_row(tp - j - 1, {theta - j - 1, tp + 1}), iota_row(1, tp - j - 1)));
    return out;
}

FamilyReport verify_families(int theta) {
    FamilyReport report{theta, {}};
    for (int tp = 0; tp <= theta; ++tp) {
        auto syms = coxeter_symbols(tp);
        std::vector<CoxeterSlot> slots;
        for (int i = 0; i <= tp; ++i)
            slots.push_back({CoxeterSeries::S, i});
        for (int j = 0; j <= tp - 2; ++j)
            slots.push_back({CoxeterSeries::T, j});
        for (const auto& slot : slots) {
            const Symbol& base = slot.series == CoxeterSeries::S
                                     ? syms.S[static_cast<size_t>(slot.index)]
                                     : syms.T[static_cast<size_t>(slot.index)];
            auto families = family_terms(theta, tp, slot);
            SymbolMultiset family_union;
            bool disjoint = true;
            for (const auto& [tag, members] : families)
                for (const Symbol& s : members) {
                    if (family_union.contains(s))
                        disjoint = false;
                    family_union.add(s);
                }
            auto induced = induce(base, theta - tp);
            std::ostringstream where;
            where << "theta=" << theta << " theta'=" << tp << " "
                  << (slot.series == CoxeterSeries::S ? "S(" : "T(") << slot.index << ")";
            if (!disjoint)
                report.mismatches.push_back(where.str() + ": families are not disjoint");
            if (!(family_union == induced.symbols))
                report.mismatches.push_back(where.str() + ": families " + family_union.str() +
                                            " != induction " + induced.symbols.str());
        }
    }
    return report;
}

namespace {

SymbolMultiset multiset_minus(const SymbolMultiset& a, const SymbolMultiset& b) {
    SymbolMultiset out;
    for (const auto& [s, m] : a.entries()) {
        long keep = m - b.mult(s);
        if (keep > 0)
            out.add(s, keep);
    }
    return out;
}

}  // namespace

const CellBounds* BoundsReport::cell(int degree, const EigenvalueLabel& label) const {
    auto it = cells.find({degree, label});
    return it == cells.end() ? nullptr : &it->second;
}

bool BoundsReport::has_guaranteed_nonpurity_witness() const {
    for (const auto& [key, bounds] : cells) {
        if (bounds.guaranteed.empty())
            continue;
        // |eigenvalue| = q^exponent; purity in degree k would force 2e = k
        if (2 * key.second.exponent != key.first)
            return true;
    }
    return false;
}

BoundsReport survival_bounds(int theta, SurvivalOptions opts) {
    SpectralPage page = e1_page(theta);
    BoundsReport report;
    report.theta = theta;

    // degeneration precondition: row b may only carry +q^b and -q^{b+1}
    for (const auto& [pos, labelled] : page.cells)
        for (const auto& [label, ms] : labelled) {
            bool ok = (label.sign == EigenvalueLabel::Plus && label.exponent == pos.second) ||
                      (label.sign == EigenvalueLabel::Minus && label.exponent == pos.second + 1);
            if (!ok)
                throw std::logic_error("row eigenvalue disjointness violated; not assembling");
            if (!ms.multiplicity_free())
                throw std::logic_error("first-page cell is not multiplicity-free");
        }

    for (int b = 0; b <= theta; ++b) {
        std::vector<EigenvalueLabel> labels = {EigenvalueLabel::plus(b)};
        if (b + 2 <= theta)
            labels.push_back(EigenvalueLabel::minus(b + 1));
        for (const EigenvalueLabel& label : labels) {
            int a_first = label.sign == EigenvalueLabel::Plus ? b : b + 2;
            std::map<int, SymbolMultiset> content;
            for (int a = a_first; a <= theta; ++a) {
                const SymbolMultiset* ms = page.cell(a, b, label);
                content[a] = ms ? *ms : SymbolMultiset();
            }
            std::map<int, SymbolMultiset> candidates = content;  // minus forced kills
            std::map<int, SymbolMultiset> sources = content;     // possible images rightwards
            bool h0_applied = false;

            if (opts.sharpen_h0 && b == 0 && label == EigenvalueLabel::plus(0) && theta >= 1) {
                // H^0 is the trivial representation, so the first differential
                // kills exactly the non-trivial part of cell 0 inside cell 1.
                SymbolMultiset trivial_only;
                trivial_only.add(Symbol::trivial(theta));
                SymbolMultiset forced_out = multiset_minus(content[0], trivial_only);
                SymbolMultiset dead1;
                for (const auto& [s, m] : content[1].entries())
                    if (forced_out.contains(s))
                        dead1.add(s, m);
                candidates[1] = multiset_minus(content[1], dead1);
                sources[1] = candidates[1];
                h0_applied = true;
            }

            for (int a = a_first; a <= theta; ++a) {
                CellBounds bounds;
                bounds.a = a;
                bounds.b = b;
                if (h0_applied && a == 0) {
                    bounds.guaranteed.add(Symbol::trivial(theta));
                    bounds.exact = true;
                } else {
                    bool skip_left = h0_applied && a == 1;  // image from cell 0 fully known
                    for (const auto& [s, m] : candidates[a].entries()) {
                        bool left = !skip_left && a - 1 >= a_first && sources[a - 1].contains(s);
                        bool right = a + 1 <= theta && candidates[a + 1].contains(s);
                        if (left || right)
                            bounds.ambiguous.add(s, m);
                        else
                            bounds.guaranteed.add(s, m);
                    }
                    bounds.exact = bounds.ambiguous.empty();
                }
                bounds.beyond_theorem =
                    a != theta &&
                    ((label.sign == EigenvalueLabel::Plus && a == b + 1 && b >= 1) ||
                     (label.sign == EigenvalueLabel::Minus && a == b + 3));
                report.cells.emplace(std::make_pair(a + b, label), std::move(bounds));
            }
        }
    }

    if (opts.sharpen_corners) {
        // the two resolved corners of the page; the matcher must agree
        auto check_corner = [&](int degree, const EigenvalueLabel& label, const Symbol& expect) {
            const CellBounds* c = report.cell(degree, label);
            if (!c || !c->exact || c->guaranteed.distinct_count() != 1 ||
                !c->guaranteed.contains(expect))
                throw std::logic_error("corner cell failed to resolve to its known value");
        };
        check_corner(2 * theta, EigenvalueLabel::plus(theta), Symbol::trivial(theta));
        if (theta >= 2)
            check_corner(2 * theta - 2, EigenvalueLabel::minus(theta - 1),
                         Symbol::reduce({0, 1, theta}, {}));
    }
    return report;
}

std::vector<WeightRow> weight_table(int theta, SurvivalOptions opts) {
    BoundsReport report = survival_bounds(theta, opts);
    std::vector<WeightRow> rows;
    for (const auto& [key, bounds] : report.cells) {
        const auto& [degree, label] = key;
        // admissible eigenvalue window for this degree
        int lo = degree - std::min(degree, theta);
        int hi = degree - (degree + 1) / 2;
        bool in_window = label.sign == EigenvalueLabel::Plus
                             ? (label.exponent >= lo && label.exponent <= hi)
                             : (label.exponent - 1 >= lo && label.exponent - 1 <= hi - 1);
        if (!in_window)
            throw std::logic_error("eigenvalue label outside the admissible window");
        RatPoly min_dim = bounds.guaranteed.total_degree();
        RatPoly max_dim = min_dim + bounds.ambiguous.total_degree();
        rows.push_back({degree, label, std::move(min_dim), std::move(max_dim), bounds.exact});
    }
    return rows;
}

bool EulerReport::pass() const {
    for (const auto& row : rows)
        if (!row.ok)
            return false;
    return true;
}

EulerReport euler_check(int theta, SurvivalOptions opts) {
    SpectralPage page = e1_page(theta);
    BoundsReport bounds = survival_bounds(theta, opts);
    EulerReport report;
    report.theta = theta;

    for (int b = 0; b <= theta; ++b) {
        std::vector<EigenvalueLabel> labels = {EigenvalueLabel::plus(b)};
        if (b + 2 <= theta)
            labels.push_back(EigenvalueLabel::minus(b + 1));
        for (const EigenvalueLabel& label : labels) {
            EulerRow row{b, label, RatPoly(), RatPoly(), RatPoly(), true, true};
            RatPoly guaranteed_alt, amb_odd, amb_even;
            for (int a = b; a <= theta; ++a) {
                // signs normalized to the row start, so an exact lone cell
                // contributes its dimension positively
                Rat sign((a - b) % 2 == 0 ? 1 : -1);
                if (const SymbolMultiset* ms = page.cell(a, b, label))
                    row.e1_alternating = row.e1_alternating + ms->total_degree() * sign;
                if (const CellBounds* c = bounds.cell(a + b, label)) {
                    guaranteed_alt = guaranteed_alt + c->guaranteed.total_degree() * sign;
                    if ((a - b) % 2 == 0)
                        amb_even = amb_even + c->ambiguous.total_degree();
                    else
                        amb_odd = amb_odd + c->ambiguous.total_degree();
                    if (!c->exact)
                        row.row_exact = false;
                }
            }
            row.bounds_low = guaranteed_alt - amb_odd;
            row.bounds_high = guaranteed_alt + amb_even;
            if (row.row_exact) {
                row.ok = row.e1_alternating == guaranteed_alt;
            } else {
                for (long q0 : {2L, 3L, 5L}) {
                    Rat v = row.e1_alternating.eval(Int(q0));
                    if (v < row.bounds_low.eval(Int(q0)) || v > row.bounds_high.eval(Int(q0)))
                        row.ok = false;
                }
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace symcox
