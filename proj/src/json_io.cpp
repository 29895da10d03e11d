#include "symcox/json_io.hpp"

namespace symcox {

Json poly_to_json(const RatPoly& p) {
    Json arr = Json::array();
    for (const Rat& c : p.coeffs())
        arr.push_back(rat_to_string(c));
    return arr;
}

RatPoly poly_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("polynomial JSON must be an array of strings");
    std::vector<Rat> coeffs;
    for (const auto& item : j)
        coeffs.push_back(rat_from_string(item.get<std::string>()));
    return RatPoly(std::move(coeffs));
}

Json symbol_to_json(const Symbol& s) {
    return Json{{"X", s.X()}, {"Y", s.Y()}};
}

Symbol symbol_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("X") || !j.contains("Y"))
        throw std::invalid_argument("symbol JSON must be {\"X\":[...],\"Y\":[...]}");
    Row X = j.at("X").get<Row>();
    Row Y = j.at("Y").get<Row>();
    return Symbol::reduce(std::move(X), std::move(Y));
}

Json multiset_to_json(const SymbolMultiset& ms) {
    Json arr = Json::array();
    for (const auto& [s, m] : ms.entries())
        arr.push_back(Json{{"symbol", symbol_to_json(s)}, {"mult", m}});
    return arr;
}

SymbolMultiset multiset_from_json(const Json& j) {
    SymbolMultiset ms;
    for (const auto& item : j)
        ms.add(symbol_from_json(item.at("symbol")), item.at("mult").get<long>());
    return ms;
}

namespace {

Json cell_symbols(const SymbolMultiset& ms) {
    Json arr = Json::array();
    for (const auto& [s, m] : ms.entries())
        for (long i = 0; i < m; ++i)
            arr.push_back(symbol_to_json(s));
    return arr;
}

}  // namespace

Json graded_to_json(const GradedRep& g) {
    Json arr = Json::array();
    for (const auto& [degree, labelled] : g.by_degree) {
        Json cells = Json::array();
        for (const auto& [label, ms] : labelled)
            cells.push_back(Json{{"eigenvalue", label.str()}, {"symbols", cell_symbols(ms)}});
        arr.push_back(Json{{"degree", degree}, {"cells", cells}});
    }
    return arr;
}

Json page_to_json(const SpectralPage& page) {
    Json grid = Json::array();
    for (const auto& [pos, labelled] : page.cells) {
        Json cells = Json::array();
        for (const auto& [label, ms] : labelled)
            cells.push_back(Json{{"eigenvalue", label.str()}, {"symbols", cell_symbols(ms)}});
        grid.push_back(Json{{"a", pos.first}, {"b", pos.second}, {"cells", cells}});
    }
    return Json{{"theta", page.theta}, {"grid", grid}};
}

Json bounds_to_json(const BoundsReport& report) {
    Json groups = Json::array();
    int current_degree = -1;
    for (const auto& [key, bounds] : report.cells) {
        const auto& [degree, label] = key;
        if (groups.empty() || degree != current_degree) {
            groups.push_back(Json{{"degree", degree}, {"cells", Json::array()}});
            current_degree = degree;
        }
        groups.back()["cells"].push_back(Json{{"eigenvalue", label.str()},
                                              {"guaranteed", cell_symbols(bounds.guaranteed)},
                                              {"ambiguous", cell_symbols(bounds.ambiguous)},
                                              {"exact", bounds.exact},
                                              {"beyond_theorem", bounds.beyond_theorem}});
    }
    return Json{{"theta", report.theta}, {"groups", groups}};
}

Json rz_page_to_json(const CaseSpec& c, const std::vector<RZPageTerm>& grid) {
    Json cells = Json::array();
    for (const auto& term : grid) {
        Json cell{{"a", term.a}, {"b", term.b}, {"mult", term.multiplicity.get_str()}};
        if (term.multiplicity != 0) {
            cell["inducing_theta"] = term.inducing_theta;
            cell["frobenius_scalar"] =
                std::string(term.scalar_sign < 0 ? "-" : "+") + "p^" + std::to_string(term.scalar_exp);
        }
        cells.push_back(cell);
    }
    return Json{{"n", c.n},
                {"case", split_case_name(c.split_case)},
                {"p", c.p.get_str()},
                {"cells", cells}};
}

}  // namespace symcox
