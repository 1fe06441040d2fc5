/**
 * qsl2: exact computations around module categories over quantum SL(2):
 * modulated graphs and the trace equation, ADET detection, Temperley-Lieb
 * diagram calculus, preprojective Hilbert series, and the Hopf algebras
 * H(E).
 *
 * Exit codes: 0 accept/consistent, 1 reject/inconsistent, 2 malformed
 * input, 3 compute budget exceeded.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <qsl2/chebyshev.hpp>
#include <qsl2/cyclotomic.hpp>
#include <qsl2/errors.hpp>
#include <qsl2/graph_json.hpp>
#include <qsl2/hopf.hpp>
#include <qsl2/matrix.hpp>
#include <qsl2/modulated_graph.hpp>
#include <qsl2/preprojective.hpp>
#include <qsl2/prime_field.hpp>
#include <qsl2/rational.hpp>
#include <qsl2/rational_function.hpp>
#include <qsl2/scalar_parse.hpp>
#include <qsl2/star_classification.hpp>
#include <qsl2/temperley_lieb.hpp>
#include <qsl2/tl_expr.hpp>

using nlohmann::ordered_json;
using namespace qsl2;

namespace {

std::size_t compute_budget() {
    if (const char* env = std::getenv("QSL2_BUDGET")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 500000;
}

struct Options {
    std::string output = "table";  // or "json"
    bool json() const { return output == "json"; }
};

void emit(const Options& opt, const ordered_json& report, const std::string& table_text) {
    if (opt.json())
        std::cout << report.dump(2) << "\n";
    else
        std::cout << table_text;
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'", 0);
    ordered_json j;
    in >> j;
    return j;
}

FieldSpec resolve_field(const ordered_json& file, const std::string& flag) {
    std::optional<FieldSpec> from_file, from_flag;
    if (file.is_object() && file.contains("field"))
        from_file = parse_field_spec(file["field"].get<std::string>());
    if (!flag.empty()) from_flag = parse_field_spec(flag);
    if (from_file && from_flag && !(*from_file == *from_flag))
        throw ParseError("--field " + from_flag->str() + " conflicts with the file's field " +
                             from_file->str(),
                         0);
    if (from_flag) return *from_flag;
    if (from_file) return *from_file;
    throw ParseError("no field given (use --field or a 'field' key in the input)", 0);
}

template <class F>
int dispatch_field(const FieldSpec& spec, F&& fn) {
    switch (spec.kind) {
        case FieldSpec::Kind::Rational: return fn(Rational(0));
        case FieldSpec::Kind::Fp: return fn(PrimeField(0, spec.p));
        case FieldSpec::Kind::Cyclotomic: return fn(Cyclotomic::zeta(spec.n).zero());
        case FieldSpec::Kind::QVar: return fn(RationalFunction(0));
    }
    return 2;
}

template <class K>
ordered_json residuals_json(const ModulatedGraph<K>& g, const std::vector<K>& residuals) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < residuals.size(); ++i)
        out.push_back({{"vertex", g.vertex_name(i)}, {"residual", residuals[i].str()}});
    return out;
}

ordered_json truncation_json(const GradedTruncation& t) {
    ordered_json out = ordered_json::array();
    for (const auto& m : t.dims) out.push_back(matrix_to_json(m));
    return out;
}

ordered_json series_json(const std::vector<Matrix<Integer>>& h) {
    ordered_json out = ordered_json::array();
    for (const auto& m : h) out.push_back(matrix_to_json(m));
    return out;
}

template <class K>
std::string hopf_element_str(const QuadraticElement<K>& elt, std::size_t n) {
    if (elt.terms.empty()) return "0";
    std::string out;
    for (const auto& [word, c] : elt.terms) {
        if (!out.empty()) out += " + ";
        out += "[" + c.str() + "]";
        for (unsigned letter : word)
            out += " a(" + std::to_string(letter / n) + "," + std::to_string(letter % n) + ")";
        if (word.empty()) out += " 1";
    }
    return out;
}

// ---- subcommand handlers ----

int cmd_classify(const std::string& path, const std::string& field_flag,
                 const std::string& q_text, const Options& opt) {
    const ordered_json file = load_json_file(path);
    const FieldSpec spec = resolve_field(file, field_flag);
    return dispatch_field(spec, [&](auto sample) -> int {
        using K = decltype(sample);
        const auto g = graph_from_json<K>(file, sample);
        const K q = parse_scalar(q_text, sample);
        const auto v = classify(g, q);
        ordered_json report{{"command", "classify"},
                            {"field", spec.str()},
                            {"q", q.str()},
                            {"symmetric", v.symmetric},
                            {"forms_nondegenerate", v.forms_nondegenerate},
                            {"adet_free", v.adet_free},
                            {"star_holds", v.star_holds},
                            {"accept", v.accept()},
                            {"failures", v.failures}};
        std::string text = std::string("verdict: ") + (v.accept() ? "accept" : "reject") + "\n";
        for (const auto& f : v.failures) text += "  reason: " + f + "\n";
        emit(opt, report, text);
        return v.accept() ? 0 : 1;
    });
}

int cmd_star_check(const std::string& path, const std::string& field_flag,
                   const std::string& q_text, const Options& opt) {
    const ordered_json file = load_json_file(path);
    const FieldSpec spec = resolve_field(file, field_flag);
    return dispatch_field(spec, [&](auto sample) -> int {
        using K = decltype(sample);
        const auto g = graph_from_json<K>(file, sample);
        const K q = parse_scalar(q_text, sample);
        const auto r = check_star(g, q);
        ordered_json report{{"command", "star-check"},
                            {"field", spec.str()},
                            {"q", q.str()},
                            {"holds", r.holds},
                            {"residuals", residuals_json(g, r.residuals)}};
        std::string text = std::string("star equation: ") + (r.holds ? "holds" : "fails") + "\n";
        for (std::size_t i = 0; i < r.residuals.size(); ++i)
            text += "  " + g.vertex_name(i) + ": residual " + r.residuals[i].str() + "\n";
        emit(opt, report, text);
        return r.holds ? 0 : 1;
    });
}

int cmd_star_normalize(const std::string& path, const std::string& field_flag,
                       std::uint64_t seed, const Options& opt) {
    const ordered_json file = load_json_file(path);
    const FieldSpec spec = resolve_field(file, field_flag);
    return dispatch_field(spec, [&](auto sample) -> int {
        using K = decltype(sample);
        const auto g = graph_from_json<K>(file, sample);
        const auto d = d_matrix(g);
        const auto eig = nondegenerate_eigenvalue(d, seed);
        ordered_json report{{"command", "star-normalize"}, {"field", spec.str()}};
        if (!eig) {
            report["found"] = false;
            report["note"] =
                "no nondegenerate eigenvalue in the base field; undetermined over this field";
            emit(opt, report, "no nondegenerate eigenvalue found in the base field\n");
            return 1;
        }
        const auto scaled = rescale(g, eig->vec);
        const auto qs = solve_q(eig->lambda);
        report["found"] = true;
        report["lambda"] = eig->lambda.str();
        ordered_json rj = ordered_json::array();
        for (const auto& x : eig->vec) rj.push_back(x.str());
        report["rescaling"] = std::move(rj);
        ordered_json qj = ordered_json::array();
        for (const auto& q : qs.roots) qj.push_back(q.str());
        report["q_candidates"] = std::move(qj);
        if (qs.unresolved) {
            report["unresolved_quadratic"] = to_string(*qs.unresolved, "q");
            ordered_json coeffs = ordered_json::array();
            for (const auto& c : qs.unresolved->coefficients()) coeffs.push_back(c.str());
            report["unresolved_quadratic_coefficients"] = std::move(coeffs);
        }
        report["graph"] = graph_to_json(scaled, spec.str());

        std::string text = "lambda: " + eig->lambda.str() + "\n";
        text += "q candidates:";
        for (const auto& q : qs.roots) text += " " + q.str();
        if (qs.unresolved) text += " (unresolved: " + to_string(*qs.unresolved, "q") + ")";
        text += "\n";
        emit(opt, report, text);
        return 0;
    });
}

int cmd_hilbert(const std::string& path, const std::string& field_flag, unsigned max_degree,
                bool compare_expected, std::uint64_t seed, unsigned trials, const Options& opt) {
    const ordered_json file = load_json_file(path);
    const FieldSpec spec = resolve_field(file, field_flag);
    return dispatch_field(spec, [&](auto sample) -> int {
        using K = decltype(sample);
        const auto g = graph_from_json<K>(file, sample);
        const auto data = flatness_check(g, max_degree, seed, trials, compute_budget());
        ordered_json report{{"command", "hilbert"},
                            {"field", spec.str()},
                            {"max_degree", max_degree},
                            {"seed", seed},
                            {"trials", trials}};
        ordered_json degrees = ordered_json::array();
        for (unsigned n = 0; n <= max_degree; ++n) degrees.push_back(n);
        report["degrees"] = std::move(degrees);
        report["matrices"] = truncation_json(data.dims);
        if (compare_expected) {
            report["expected_comparable"] = data.expected_comparable;
            if (data.expected_comparable) report["expected"] = series_json(data.expected);
        }
        ordered_json redraws = ordered_json::array();
        for (const auto& [s, mismatch] : data.redraws) {
            ordered_json r{{"seed", s}};
            if (mismatch)
                r["first_mismatch"] = *mismatch;
            else
                r["first_mismatch"] = nullptr;
            redraws.push_back(std::move(r));
        }
        report["redraws"] = std::move(redraws);

        bool ok = true;
        std::string verdict;
        if (compare_expected && data.expected_comparable && data.first_expected_mismatch) {
            ok = false;
            verdict = "mismatch with the recurrence at degree " +
                      std::to_string(*data.first_expected_mismatch);
        }
        for (const auto& [s, mismatch] : data.redraws)
            if (mismatch) {
                ok = false;
                verdict = "form dependence at degree " + std::to_string(*mismatch) + " (seed " +
                          std::to_string(s) + ")";
            }
        if (ok) verdict = "consistent to degree " + std::to_string(max_degree);
        report["verdict"] = verdict;

        std::string text = "hilbert series to degree " + std::to_string(max_degree) + "\n";
        for (unsigned n = 0; n <= max_degree; ++n)
            text += "  degree " + std::to_string(n) + ": " +
                    matrix_to_json(data.dims.at(n)).dump() + "\n";
        text += "verdict: " + verdict + "\n";
        emit(opt, report, text);
        return ok ? 0 : 1;
    });
}

int cmd_quad_dual(const std::string& path, const std::string& field_flag, unsigned max_degree,
                  const Options& opt) {
    const ordered_json file = load_json_file(path);
    const FieldSpec spec = resolve_field(file, field_flag);
    return dispatch_field(spec, [&](auto sample) -> int {
        using K = decltype(sample);
        const auto g = graph_from_json<K>(file, sample);
        const auto r = quadratic_dual_dims(g, max_degree, compute_budget());
        ordered_json report{{"command", "quad-dual"},
                            {"field", spec.str()},
                            {"max_degree", max_degree},
                            {"dual_dims", truncation_json(r.dual_dims)},
                            {"primal_dims", truncation_json(r.primal_dims)},
                            {"euler_identity", r.euler_identity_holds}};
        if (r.first_euler_failure) report["first_euler_failure"] = *r.first_euler_failure;
        std::string text = "quadratic dual to degree " + std::to_string(max_degree) + "\n";
        for (unsigned n = 0; n <= max_degree; ++n)
            text += "  degree " + std::to_string(n) + ": " +
                    matrix_to_json(r.dual_dims.at(n)).dump() + "\n";
        text += std::string("euler identity: ") +
                (r.euler_identity_holds ? "holds" : "fails") + "\n";
        emit(opt, report, text);
        return r.euler_identity_holds ? 0 : 1;
    });
}

int cmd_tl(const std::string& expression, const std::string& field_flag,
           const std::string& q_text, const Options& opt) {
    const FieldSpec spec =
        field_flag.empty() ? FieldSpec{FieldSpec::Kind::QVar, 0, 0} : parse_field_spec(field_flag);
    return dispatch_field(spec, [&](auto sample) -> int {
        using K = decltype(sample);
        const K q = parse_scalar(q_text, sample);
        if (q.is_zero()) throw ParseError("q must be nonzero", 0);
        const auto elt = parse_tl_expression(expression, q);
        const std::string rendered = tl_element_str(elt);
        // parse-then-print round-trip, checked on every run
        if (!(parse_tl_expression(rendered, q) == elt))
            throw std::logic_error("printer round-trip failed");
        ordered_json report{{"command", "tl"},
                            {"field", spec.str()},
                            {"q", q.str()},
                            {"expression", expression},
                            {"sources", elt.sources()},
                            {"targets", elt.targets()},
                            {"terms", elt.terms().size()},
                            {"result", rendered}};
        emit(opt, report, rendered + "\n");
        return 0;
    });
}

int cmd_jw(unsigned n, const std::string& field_flag, const std::string& q_text,
           const Options& opt) {
    const FieldSpec spec =
        field_flag.empty() ? FieldSpec{FieldSpec::Kind::QVar, 0, 0} : parse_field_spec(field_flag);
    return dispatch_field(spec, [&](auto sample) -> int {
        using K = decltype(sample);
        const K q = parse_scalar(q_text, sample);
        try {
            const auto p = jones_wenzl(n, q);
            const std::string rendered = tl_element_str(p);
            ordered_json report{{"command", "jw"},     {"n", n},
                                {"field", spec.str()}, {"q", q.str()},
                                {"terms", p.terms().size()}, {"result", rendered}};
            emit(opt, report, rendered + "\n");
            return 0;
        } catch (const QuantumIntegerZero& e) {
            ordered_json report{{"command", "jw"},     {"n", n},
                                {"field", spec.str()}, {"q", q.str()},
                                {"error", e.what()},   {"vanishing_k", e.k}};
            emit(opt, report, std::string(e.what()) + "\n");
            return 1;
        }
    });
}

int cmd_hopf_relations(const std::string& path, const std::string& field_flag,
                       const Options& opt) {
    const ordered_json file = load_json_file(path);
    const FieldSpec spec = resolve_field(file, field_flag);
    return dispatch_field(spec, [&](auto sample) -> int {
        using K = decltype(sample);
        const auto e = matrix_from_json<K>(file.at("entries"), sample);
        const auto h = h_relations(e);
        ordered_json rels = ordered_json::array();
        std::string text = "relations of H(E), n = " + std::to_string(h.n) + "\n";
        for (const auto& rel : h.relations) {
            const std::string s = hopf_element_str(rel, h.n);
            rels.push_back(s);
            text += "  " + s + " = 0\n";
        }
        ordered_json report{{"command", "hopf relations"},
                            {"field", spec.str()},
                            {"n", h.n},
                            {"relations", std::move(rels)}};
        emit(opt, report, text);
        return 0;
    });
}

int cmd_hopf_dims(const std::string& path, const std::string& field_flag, unsigned max_degree,
                  const Options& opt) {
    const ordered_json file = load_json_file(path);
    const FieldSpec spec = resolve_field(file, field_flag);
    return dispatch_field(spec, [&](auto sample) -> int {
        using K = decltype(sample);
        const auto e = matrix_from_json<K>(file.at("entries"), sample);
        const auto dims = filtered_dims(h_relations(e), max_degree, compute_budget());
        ordered_json report{{"command", "hopf dims"},
                            {"field", spec.str()},
                            {"max_degree", max_degree},
                            {"cumulative_dims", dims}};
        std::string text = "cumulative filtered dimensions:";
        for (std::size_t d : dims) text += " " + std::to_string(d);
        emit(opt, report, text + "\n");
        return 0;
    });
}

int cmd_hopf_check(const std::string& path, const std::string& field_flag, const Options& opt) {
    const ordered_json file = load_json_file(path);
    const FieldSpec spec = resolve_field(file, field_flag);
    return dispatch_field(spec, [&](auto sample) -> int {
        using K = decltype(sample);
        const auto e = matrix_from_json<K>(file.at("entries"), sample);
        const auto h = h_relations(e);
        const bool comodule = comodule_map_check(h);
        const bool antipode = antipode_check(h);
        ordered_json report{{"command", "hopf check"},
                            {"field", spec.str()},
                            {"comodule_map", comodule},
                            {"antipode", antipode}};
        std::string text = std::string("comodule map: ") + (comodule ? "ok" : "FAIL") +
                           "\nantipode: " + (antipode ? "ok" : "FAIL") + "\n";
        emit(opt, report, text);
        return comodule && antipode ? 0 : 1;
    });
}

int cmd_hopf_slq2(const std::string& field_flag, const std::string& q_text, const Options& opt) {
    const FieldSpec spec =
        field_flag.empty() ? FieldSpec{FieldSpec::Kind::QVar, 0, 0} : parse_field_spec(field_flag);
    return dispatch_field(spec, [&](auto sample) -> int {
        using K = decltype(sample);
        const K q = parse_scalar(q_text, sample);
        const auto r = slq2_specialization(q);
        ordered_json report{{"command", "hopf slq2"},
                            {"field", spec.str()},
                            {"q", q.str()},
                            {"form", matrix_to_json(r.form)},
                            {"verdict", r.verdict},
                            {"failed_relations", r.failed_relations}};
        std::string text = std::string("slq2 relations: ") +
                           (r.verdict ? "all hold in H(E)" : "FAILED") + "\n";
        for (const auto& f : r.failed_relations) text += "  failed: " + f + "\n";
        emit(opt, report, text);
        return r.verdict ? 0 : 1;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for module categories over quantum SL(2)"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--output", opt.output, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));

    std::string path, field_flag, q_text = "q", expression;
    unsigned max_degree = 6, jw_n = 2;
    std::uint64_t seed = 1;
    unsigned trials = 2;
    bool compare_expected = false;

    auto* classify_cmd = app.add_subcommand("classify", "run the full classification datum")->fallthrough();
    classify_cmd->add_option("graph", path)->required();
    classify_cmd->add_option("--field", field_flag);
    classify_cmd->add_option("--q", q_text)->required();

    auto* star_cmd = app.add_subcommand("star-check", "check the trace equation at q")->fallthrough();
    star_cmd->add_option("graph", path)->required();
    star_cmd->add_option("--field", field_flag);
    star_cmd->add_option("--q", q_text)->required();

    auto* norm_cmd =
        app.add_subcommand("star-normalize", "eigenvalue search + rescale + solve for q")->fallthrough();
    norm_cmd->add_option("graph", path)->required();
    norm_cmd->add_option("--field", field_flag);
    norm_cmd->add_option("--seed", seed);

    auto* hilb_cmd =
        app.add_subcommand("hilbert", "graded dimensions of the preprojective algebra")->fallthrough();
    hilb_cmd->add_option("graph", path)->required();
    hilb_cmd->add_option("--field", field_flag);
    hilb_cmd->add_option("--max-degree", max_degree);
    hilb_cmd->add_flag("--compare-expected", compare_expected);
    hilb_cmd->add_option("--seed", seed);
    hilb_cmd->add_option("--trials", trials);

    auto* dual_cmd = app.add_subcommand("quad-dual", "quadratic dual dimensions and Euler check")->fallthrough();
    dual_cmd->add_option("graph", path)->required();
    dual_cmd->add_option("--field", field_flag);
    dual_cmd->add_option("--max-degree", max_degree);

    auto* tl_cmd = app.add_subcommand("tl", "evaluate a Temperley-Lieb expression")->fallthrough();
    tl_cmd->add_option("expression", expression)->required();
    tl_cmd->add_option("--field", field_flag);
    tl_cmd->add_option("--q", q_text);

    auto* jw_cmd = app.add_subcommand("jw", "Jones-Wenzl projector")->fallthrough();
    jw_cmd->add_option("n", jw_n)->required();
    jw_cmd->add_option("--field", field_flag);
    jw_cmd->add_option("--q", q_text);

    auto* hopf_cmd = app.add_subcommand("hopf", "universal Hopf algebra H(E)")->fallthrough();
    hopf_cmd->require_subcommand(1);
    auto* hrel = hopf_cmd->add_subcommand("relations", "print the defining relations")->fallthrough();
    hrel->add_option("form", path)->required();
    hrel->add_option("--field", field_flag);
    auto* hdims = hopf_cmd->add_subcommand("dims", "filtered dimensions")->fallthrough();
    hdims->add_option("form", path)->required();
    hdims->add_option("--field", field_flag);
    hdims->add_option("--max-degree", max_degree);
    auto* hcheck = hopf_cmd->add_subcommand("check", "comodule-map and antipode identities")->fallthrough();
    hcheck->add_option("form", path)->required();
    hcheck->add_option("--field", field_flag);
    auto* hslq2 = hopf_cmd->add_subcommand("slq2", "quantum SL(2) specialization")->fallthrough();
    hslq2->add_option("--field", field_flag);
    hslq2->add_option("--q", q_text);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify_cmd) return cmd_classify(path, field_flag, q_text, opt);
        if (*star_cmd) return cmd_star_check(path, field_flag, q_text, opt);
        if (*norm_cmd) return cmd_star_normalize(path, field_flag, seed, opt);
        if (*hilb_cmd)
            return cmd_hilbert(path, field_flag, max_degree, compare_expected, seed, trials, opt);
        if (*dual_cmd) return cmd_quad_dual(path, field_flag, max_degree, opt);
        if (*tl_cmd) return cmd_tl(expression, field_flag, q_text, opt);
        if (*jw_cmd) return cmd_jw(jw_n, field_flag, q_text, opt);
        if (*hopf_cmd) {
            if (*hrel) return cmd_hopf_relations(path, field_flag, opt);
            if (*hdims) return cmd_hopf_dims(path, field_flag, max_degree, opt);
            if (*hcheck) return cmd_hopf_check(path, field_flag, opt);
            if (*hslq2) return cmd_hopf_slq2(field_flag, q_text, opt);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
