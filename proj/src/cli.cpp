#include "symcox/cli.hpp"

#include <CLI11.hpp>

#ifdef SYMCOX_HAVE_OPENMP
#include <omp.h>
#endif

#include "symcox/json_io.hpp"

namespace symcox::cli {

namespace {

enum class Format { Json, Csv, Pretty };

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "pretty") return Format::Pretty;
    throw CLI::ValidationError("--format", "expected json, csv or pretty");
}

std::string csv_quote(const std::string& s) {
    return "\"" + s + "\"";
}

std::string row_text(const Row& row) {
    std::string out;
    for (size_t i = 0; i < row.size(); ++i)
        out += (i ? " " : "") + std::to_string(row[i]);
    return out;
}

void print_multiset(const SymbolMultiset& ms, Format format, std::ostream& out) {
    switch (format) {
        case Format::Json:
            out << multiset_to_json(ms).dump() << "\n";
            break;
        case Format::Csv:
            out << "X,Y,mult\n";
            for (const auto& [s, m] : ms.entries())
                out << csv_quote(row_text(s.X())) << "," << csv_quote(row_text(s.Y())) << ","
                    << m << "\n";
            break;
        case Format::Pretty:
            for (const auto& [s, m] : ms.entries()) {
                out << s.str();
                if (m != 1)
                    out << " x" << m;
                out << "\n";
            }
            break;
    }
}

CaseSpec case_from_flags(int n, std::string case_name, const std::string& p_str) {
    Int p;
    if (p.set_str(p_str, 10) != 0)
        throw std::invalid_argument("malformed prime: '" + p_str + "'");
    if (case_name.empty()) {
        if (n % 2 == 0)
            throw std::invalid_argument("even n requires --case even-split or even-nonsplit");
        case_name = "odd";
    }
    return CaseSpec(n, split_case_from_name(case_name), p);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact symbol calculus for symplectic unipotent characters"};
    app.require_subcommand(1);
    std::string format_name = "pretty";
    int jobs = 0;
    app.add_option("--format", format_name, "output format: json, csv or pretty")
        ->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for parameter sweeps (0 = library default)");

    // symbols --rank T
    int rank = 0;
    auto* cmd_symbols = app.add_subcommand("symbols", "enumerate reduced symbols of a rank");
    cmd_symbols->add_option("--rank", rank, "rank")->required();

    // degree --symbol JSON [--at q0]
    std::string symbol_json;
    std::string at_str;
    auto* cmd_degree = app.add_subcommand("degree", "generic degree of a unipotent character");
    cmd_degree->add_option("--symbol", symbol_json, "symbol as {\"X\":[...],\"Y\":[...]}")
        ->required();
    cmd_degree->add_option("--at", at_str, "evaluate at an integer q0 >= 2");

    // induce / restrict --symbol JSON --by a
    int by = 0;
    auto* cmd_induce = app.add_subcommand("induce", "Harish-Chandra induction by GL(a)");
    cmd_induce->add_option("--symbol", symbol_json, "symbol JSON")->required();
    cmd_induce->add_option("--by", by, "a >= 0")->required();
    auto* cmd_restrict = app.add_subcommand("restrict", "Harish-Chandra restriction by GL(a)");
    cmd_restrict->add_option("--symbol", symbol_json, "symbol JSON")->required();
    cmd_restrict->add_option("--by", by, "0 <= a <= rank")->required();

    // coxeter --k K [--verify]
    int coxeter_k = 0;
    bool verify = false;
    auto* cmd_coxeter = app.add_subcommand("coxeter", "graded Coxeter variety cohomology");
    cmd_coxeter->add_option("--k", coxeter_k, "symplectic rank k")->required();
    cmd_coxeter->add_flag("--verify", verify, "check the restriction recursion at k");

    // stratum-page / stratum-bounds / weight-table --theta T
    int theta = 0;
    bool no_sharpen = false;
    auto* cmd_page = app.add_subcommand("stratum-page", "first page of the stratification sequence");
    cmd_page->add_option("--theta", theta, "stratum rank")->required();
    auto* cmd_bounds = app.add_subcommand("stratum-bounds", "survival bounds for the abutment");
    cmd_bounds->add_option("--theta", theta, "stratum rank")->required();
    cmd_bounds->add_flag("--no-sharpen", no_sharpen, "generic matcher only");
    auto* cmd_weights = app.add_subcommand("weight-table", "Frobenius weight table");
    cmd_weights->add_option("--theta", theta, "stratum rank")->required();

    // count --kind ... --dim ... --r ... --p ... [--brute]
    std::string kind_name, p_str;
    int dim = 0, count_r = 0;
    bool brute = false;
    auto* cmd_count = app.add_subcommand("count", "isotropic subspace count");
    cmd_count->add_option("--kind", kind_name, "symplectic | orthogonal-odd | orthogonal-even-split | orthogonal-even-nonsplit")
        ->required();
    cmd_count->add_option("--dim", dim, "dimension")->required();
    cmd_count->add_option("--r", count_r, "isotropic dimension")->required();
    cmd_count->add_option("--p", p_str, "odd prime")->required();
    cmd_count->add_flag("--brute", brute, "also run the brute-force oracle");

    // incidence --n N [--case C] --p P --theta T --theta-prime U --direction below|above
    int n = 0, theta_prime = 0;
    std::string case_name, direction_name;
    auto* cmd_incidence = app.add_subcommand("incidence", "stratum incidence count");
    cmd_incidence->add_option("--n", n, "hermitian dimension")->required();
    cmd_incidence->add_option("--case", case_name, "odd | even-split | even-nonsplit");
    cmd_incidence->add_option("--p", p_str, "odd prime")->required();
    cmd_incidence->add_option("--theta", theta, "fixed stratum theta")->required();
    cmd_incidence->add_option("--theta-prime", theta_prime, "counted stratum theta'")->required();
    cmd_incidence->add_option("--direction", direction_name, "below | above")->required();

    // nu --n N [--case C] --p P
    auto* cmd_nu = app.add_subcommand("nu", "cover multiplicity nu");
    cmd_nu->add_option("--n", n, "hermitian dimension")->required();
    cmd_nu->add_option("--case", case_name, "odd | even-split | even-nonsplit");
    cmd_nu->add_option("--p", p_str, "odd prime")->required();

    // rz-page --n N [--case C] --p P
    auto* cmd_rz = app.add_subcommand("rz-page", "Cech first page for theta_max = 1");
    cmd_rz->add_option("--n", n, "hermitian dimension")->required();
    cmd_rz->add_option("--case", case_name, "odd | even-split | even-nonsplit");
    cmd_rz->add_option("--p", p_str, "odd prime")->required();

    // global flags may follow the subcommand
    for (CLI::App* sub : app.get_subcommands(nullptr))
        sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("symcox");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        Format format = parse_format(format_name);
#ifdef SYMCOX_HAVE_OPENMP
        if (jobs > 0)
            omp_set_num_threads(jobs);
#else
        (void)jobs;
#endif

        if (cmd_symbols->parsed()) {
            auto symbols = symbols_of_rank(rank);
            if (format == Format::Json) {
                Json arr = Json::array();
                for (const auto& s : symbols)
                    arr.push_back(symbol_to_json(s));
                out << arr.dump() << "\n";
            } else if (format == Format::Csv) {
                out << "X,Y\n";
                for (const auto& s : symbols)
                    out << csv_quote(row_text(s.X())) << "," << csv_quote(row_text(s.Y())) << "\n";
            } else {
                // two-row matrix layout
                for (const auto& s : symbols)
                    out << s.two_row_str() << "\n\n";
            }
            return 0;
        }

        if (cmd_degree->parsed()) {
            Symbol s = symbol_from_json(Json::parse(symbol_json));
            RatPoly deg = unipotent_degree(s);
            if (!at_str.empty()) {
                Int q0;
                if (q0.set_str(at_str, 10) != 0)
                    throw std::invalid_argument("malformed q0: '" + at_str + "'");
                if (q0 < 2)
                    throw std::invalid_argument("q0 must be >= 2");
                bool prime_power = is_odd_prime_power(q0);
                if (!prime_power)
                    err << "warning: q0 = " << q0.get_str()
                        << " is not an odd prime power; degree statements assume one\n";
                // integrality is a theorem only at prime powers; elsewhere the
                // exact rational value is printed as-is
                std::string value =
                    prime_power ? deg.eval_int(q0).get_str() : rat_to_string(deg.eval(q0));
                if (format == Format::Json)
                    out << Json{{"symbol", symbol_to_json(s)},
                                {"q0", q0.get_str()},
                                {"value", value}}
                               .dump()
                        << "\n";
                else
                    out << value << "\n";
            } else {
                if (format == Format::Json)
                    out << Json{{"symbol", symbol_to_json(s)}, {"degree", poly_to_json(deg)}}.dump()
                        << "\n";
                else
                    out << deg.str() << "\n";
            }
            return 0;
        }

        if (cmd_induce->parsed() || cmd_restrict->parsed()) {
            Symbol s = symbol_from_json(Json::parse(symbol_json));
            HCResult result = cmd_induce->parsed() ? induce(s, by) : restrict(s, by);
            print_multiset(result.symbols, format, out);
            return 0;
        }

        if (cmd_coxeter->parsed()) {
            if (verify) {
                auto report = verify_restriction_recursion(coxeter_k);
                if (report.pass()) {
                    out << "restriction recursion at k=" << coxeter_k << ": pass\n";
                    return 0;
                }
                for (const auto& line : report.mismatches)
                    out << line << "\n";
                return 2;
            }
            GradedRep g = coxeter_graded(coxeter_k);
            if (format == Format::Json) {
                out << graded_to_json(g).dump() << "\n";
            } else {
                for (const auto& [degree, labelled] : g.by_degree)
                    for (const auto& [label, ms] : labelled)
                        out << "H^" << degree << " [" << label.str() << "] " << ms.str() << "\n";
            }
            return 0;
        }

        if (cmd_page->parsed()) {
            SpectralPage page = e1_page(theta);
            if (format == Format::Json) {
                out << page_to_json(page).dump() << "\n";
            } else {
                for (const auto& [pos, labelled] : page.cells)
                    for (const auto& [label, ms] : labelled)
                        out << "E1^{" << pos.first << "," << pos.second << "} [" << label.str()
                            << "] " << ms.str() << "\n";
            }
            return 0;
        }

        if (cmd_bounds->parsed()) {
            SurvivalOptions opts;
            if (no_sharpen) {
                opts.sharpen_h0 = false;
                opts.sharpen_corners = false;
            }
            BoundsReport report = survival_bounds(theta, opts);
            if (format == Format::Json) {
                out << bounds_to_json(report).dump() << "\n";
            } else {
                for (const auto& [key, bounds] : report.cells) {
                    out << "H^" << key.first << " [" << key.second.str() << "] guaranteed "
                        << bounds.guaranteed.str() << " ambiguous " << bounds.ambiguous.str()
                        << (bounds.exact ? " (exact)" : "")
                        << (bounds.beyond_theorem ? " (beyond theorem)" : "") << "\n";
                }
            }
            return 0;
        }

        if (cmd_weights->parsed()) {
            auto rows = weight_table(theta);
            if (format == Format::Json) {
                Json arr = Json::array();
                for (const auto& r : rows)
                    arr.push_back(Json{{"k", r.degree},
                                       {"eigenvalue", r.label.str()},
                                       {"min_dim", poly_to_json(r.min_dim)},
                                       {"max_dim", poly_to_json(r.max_dim)},
                                       {"exact", r.exact}});
                out << arr.dump() << "\n";
            } else {
                out << "k,eigenvalue,min_dim,max_dim,exact\n";
                for (const auto& r : rows)
                    out << r.degree << "," << r.label.str() << "," << csv_quote(r.min_dim.str())
                        << "," << csv_quote(r.max_dim.str()) << ","
                        << (r.exact ? "true" : "false") << "\n";
            }
            return 0;
        }

        if (cmd_count->parsed()) {
            Int p;
            if (p.set_str(p_str, 10) != 0)
                throw std::invalid_argument("malformed prime: '" + p_str + "'");
            FormSpace space(form_kind_from_name(kind_name), dim);
            Int formula = count_isotropic(space, count_r, p);
            std::string brute_str, match_str;
            if (brute) {
                Int oracle = brute_force_isotropic(GramMatrix::standard(space, p), count_r, p);
                brute_str = oracle.get_str();
                match_str = oracle == formula ? "true" : "false";
            }
            if (format == Format::Json) {
                Json o{{"kind", kind_name}, {"d", dim},     {"r", count_r},
                       {"p", p.get_str()},  {"formula", formula.get_str()}};
                if (brute) {
                    o["brute_force"] = brute_str;
                    o["match"] = match_str == "true";
                }
                out << o.dump() << "\n";
            } else if (format == Format::Csv) {
                out << "kind,d,r,p,formula,brute_force,match\n";
                out << kind_name << "," << dim << "," << count_r << "," << p.get_str() << ","
                    << formula.get_str() << "," << brute_str << "," << match_str << "\n";
            } else {
                out << formula.get_str() << "\n";
                if (brute)
                    out << "brute force: " << brute_str << " (" << match_str << ")\n";
            }
            return brute && match_str == "false" ? 2 : 0;
        }

        if (cmd_incidence->parsed()) {
            if (direction_name != "below" && direction_name != "above")
                throw std::invalid_argument("--direction must be below or above");
            CaseSpec c = case_from_flags(n, case_name, p_str);
            Int value = strata_incidence(c, theta, theta_prime,
                                         direction_name == "below" ? IncidenceDirection::Below
                                                                   : IncidenceDirection::Above);
            if (format == Format::Json)
                out << Json{{"count", value.get_str()}}.dump() << "\n";
            else
                out << value.get_str() << "\n";
            return 0;
        }

        if (cmd_nu->parsed()) {
            CaseSpec c = case_from_flags(n, case_name, p_str);
            Int value = nu_multiplicity(c);
            if (format == Format::Json)
                out << Json{{"nu", value.get_str()}}.dump() << "\n";
            else
                out << value.get_str() << "\n";
            return 0;
        }

        if (cmd_rz->parsed()) {
            CaseSpec c = case_from_flags(n, case_name, p_str);
            auto grid = rz_first_page(c);
            if (format == Format::Json) {
                out << rz_page_to_json(c, grid).dump() << "\n";
            } else {
                for (const auto& term : grid) {
                    out << "E1^{" << term.a << "," << term.b << "} ";
                    if (term.multiplicity == 0) {
                        out << "0\n";
                    } else {
                        out << "(c-Ind theta=" << term.inducing_theta << " 1)";
                        if (term.multiplicity != 1)
                            out << "^" << term.multiplicity.get_str();
                        out << " [" << (term.scalar_sign < 0 ? "-" : "") << "p^"
                            << term.scalar_exp << "]\n";
                    }
                }
            }
            return 0;
        }

        err << "error: no subcommand selected\n";
        return 1;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {  // parse and type errors alike
        err << "error: malformed JSON: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace symcox::cli
