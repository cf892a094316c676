// Command-line surface for the bounded-flag calculus of the dual
// Landweber-Novikov algebra: structure maps, actions, the
// characteristic-number oracle, verification sweeps and table dumps.
//
// Exit codes: 0 on success (and all-pass verification), 1 on verification
// failure, 2 on usage errors (unknown verbs, malformed literals, bounds
// beyond the configured budgets).

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lnflag/lnflag.hpp"

using namespace lnflag;
using nlohmann::json;

namespace {

constexpr int kMaxAmbient = 12;
constexpr int kMaxGradingBudget = 16;
constexpr int kMaxNBudget = 6;
constexpr int kMaxDegreeBudget = 12;
constexpr int kMaxTrialsBudget = 100000;

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_budget(bool ok, const std::string& what) {
    if (!ok)
        throw BudgetError("bounds too large for the configured budget: " + what);
}

void emit_record(const std::string& operation, const json& input, const json& result) {
    json record{{"input", input}, {"operation", operation}, {"result", result},
                {"status", "ok"}};
    std::cout << record.dump() << "\n";
}

json seq_json(const ExponentSeq& w) { return json(w.entries()); }

struct ActArgs {
    std::string side;
    std::string op_text;
    std::string monomial_text;
    std::string subset_text;
    int ambient = -1;
    bool json_out = false;
};

GPoly run_act(const std::string& side, const ExponentSeq& op, const GPoly& p) {
    if (side == "right")
        return act_right(op, p);
    if (side == "left")
        return act_left(op, p);
    if (side == "tangential")
        return act_left_tangential(op, p);
    if (side == "adjoint")
        return act_adjoint(op, p);
    throw CLI::ValidationError("--side", "unknown side '" + side + "'");
}

int run_verify_suites(const std::vector<std::string>& names, int max_n, int max_grading,
                      int max_degree, int trials, bool json_out) {
    std::vector<VerifyReport> reports;
    for (const std::string& name : names) {
        if (name == "hopf")
            reports.push_back(verify_hopf_axioms(max_grading));
        else if (name == "seriesalg")
            reports.push_back(verify_series(max_degree));
        else if (name == "lambda")
            reports.push_back(verify_lambda(max_grading));
        else if (name == "three-path")
            reports.push_back(verify_three_path(max_n));
        else if (name == "realization")
            reports.push_back(verify_realization(max_n, max_n));
        else if (name == "twisted-classes")
            reports.push_back(verify_twisted_classes(max_n));
        else if (name == "left-closed-form")
            reports.push_back(verify_left_closed_form(max_n, max_n));
        else if (name == "duality")
            reports.push_back(verify_duality(max_n, max_n + 3));
        else if (name == "projection")
            reports.push_back(verify_projection(2 * max_n));
        else if (name == "ring")
            reports.push_back(verify_ring(trials, std::min(max_n, 5), 10));
        else if (name == "actions")
            reports.push_back(verify_actions(std::min(max_grading, 8), max_grading));
        else if (name == "goldens")
            reports.push_back(verify_goldens());
        else
            throw CLI::ValidationError("--suite", "unknown suite '" + name + "'");
    }

    bool all_ok = true;
    for (const VerifyReport& rep : reports) {
        all_ok = all_ok && rep.all_passed();
        if (json_out) {
            for (const VerifyRecord& r : rep.records) {
                json record{{"input", r.input},
                            {"operation", rep.suite + ": " + r.operation},
                            {"result", r.pass ? "equal" : r.detail},
                            {"status", r.pass ? "pass" : "fail"}};
                std::cout << record.dump() << "\n";
            }
        } else {
            std::cout << "suite " << rep.suite << ": " << rep.checked() << " checks, "
                      << rep.failures() << " failures\n";
            for (const VerifyRecord& r : rep.records)
                if (!r.pass)
                    std::cout << "  FAIL " << r.operation << " @ " << r.input << " : "
                              << r.detail << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus for the dual Landweber-Novikov algebra realized on bounded "
                 "flag manifolds"};
    app.require_subcommand(1);

    // --- coproduct ---------------------------------------------------------
    std::string cop_monomial;
    bool cop_json = false;
    CLI::App* cop = app.add_subcommand("coproduct", "coproduct of a monomial b^w");
    cop->add_option("--monomial", cop_monomial, "exponent sequence, e.g. 0,1 for b_2")
        ->required();
    cop->add_flag("--json", cop_json, "emit a structured record");

    // --- antipode ----------------------------------------------------------
    std::string anti_monomial;
    bool anti_json = false;
    CLI::App* anti = app.add_subcommand("antipode", "antipode of a monomial b^w");
    anti->add_option("--monomial", anti_monomial, "exponent sequence")->required();
    anti->add_flag("--json", anti_json, "emit a structured record");

    // --- act ---------------------------------------------------------------
    ActArgs act_args;
    CLI::App* act = app.add_subcommand("act", "apply an operation to a monomial or to the "
                                              "class of a subset");
    act->add_option("--side", act_args.side, "left | right | tangential | adjoint")->required();
    act->add_option("--op", act_args.op_text, "operation index sequence")->required();
    act->add_option("--monomial", act_args.monomial_text, "exponent sequence input");
    act->add_option("--subset", act_args.subset_text, "subset input, e.g. 1,2,4");
    act->add_option("--ambient", act_args.ambient, "ambient n for --subset");
    act->add_flag("--json", act_args.json_out, "emit a structured record");

    // --- char-number -------------------------------------------------------
    std::string cn_subset, cn_left, cn_right;
    int cn_ambient = -1;
    bool cn_json = false;
    CLI::App* cn = app.add_subcommand("char-number",
                                      "characteristic-number evaluation over X_Q");
    cn->add_option("--subset", cn_subset, "subset Q, e.g. 1,2,4")->required();
    cn->add_option("--ambient", cn_ambient, "ambient n")->required();
    cn->add_option("--left", cn_left, "left (tangential) index sequence, default 0");
    cn->add_option("--right", cn_right, "right index sequence, default 0");
    cn->add_flag("--json", cn_json, "emit a structured record");

    // --- geom --------------------------------------------------------------
    std::string geom_what, geom_subset, geom_left, geom_right, geom_op;
    int geom_ambient = -1;
    bool geom_json = false;
    CLI::App* geom = app.add_subcommand("geom", "geometric realizations on X_Q");
    geom->add_option("--what", geom_what,
                     "coproduct | antipode | act-left | act-right | act-both")
        ->required();
    geom->add_option("--subset", geom_subset, "subset Q")->required();
    geom->add_option("--ambient", geom_ambient, "ambient n")->required();
    geom->add_option("--op", geom_op, "index sequence for act-left/act-right");
    geom->add_option("--left", geom_left, "left index sequence for act-both");
    geom->add_option("--right", geom_right, "right index sequence for act-both");
    geom->add_flag("--json", geom_json, "emit a structured record");

    // --- verify ------------------------------------------------------------
    std::vector<std::string> verify_suites;
    int verify_max_n = 4, verify_max_grading = 10, verify_max_degree = 8, verify_trials = 200;
    bool verify_json = false;
    CLI::App* ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("--suite", verify_suites,
                    "hopf | seriesalg | lambda | three-path | realization | twisted-classes | "
                    "left-closed-form | duality | projection | ring | actions | goldens | all")
        ->required();
    ver->add_option("--max-n", verify_max_n, "subset sweep bound (default 4)");
    ver->add_option("--max-grading", verify_max_grading, "grading bound (default 10)");
    ver->add_option("--max-degree", verify_max_degree, "series degree bound (default 8)");
    ver->add_option("--trials", verify_trials, "randomized trials (default 200)");
    ver->add_flag("--json", verify_json, "emit one structured record per check");

    // --- tables ------------------------------------------------------------
    std::string tables_what;
    int tables_grading = 4, tables_n = 2, tables_max_n = 2;
    bool tables_json = false;
    CLI::App* tables = app.add_subcommand("tables", "dump canonical tables");
    tables->add_option("--what", tables_what, "lambda | pushforward | coproduct")->required();
    tables->add_option("--grading", tables_grading, "grading for lambda");
    tables->add_option("--n", tables_n, "ambient n for pushforward");
    tables->add_option("--max-n", tables_max_n, "largest generator for coproduct");
    tables->add_flag("--json", tables_json, "emit structured records");

    try {
        app.parse(argc, argv);

        if (cop->parsed()) {
            ExponentSeq w = parse_exponent_seq(cop_monomial);
            require_budget(w.grading() <= 2 * kMaxAmbient, "monomial grading");
            GTensor t = coproduct(GPoly::monomial(w));
            if (cop_json)
                emit_record("coproduct", {{"monomial", seq_json(w)}}, tensor_to_json(t));
            else
                std::cout << "delta(b^(" << w.str() << ")) = " << render_tensor(t, 'b') << "\n";
            return 0;
        }

        if (anti->parsed()) {
            ExponentSeq w = parse_exponent_seq(anti_monomial);
            require_budget(w.grading() <= 2 * kMaxAmbient, "monomial grading");
            GPoly p = antipode(GPoly::monomial(w));
            if (anti_json)
                emit_record("antipode", {{"monomial", seq_json(w)}}, poly_to_json(p));
            else
                std::cout << "chi(b^(" << w.str() << ")) = " << render_poly(p, 'b') << "\n";
            return 0;
        }

        if (act->parsed()) {
            ExponentSeq op = parse_exponent_seq(act_args.op_text);
            require_budget(op.grading() <= 2 * kMaxAmbient, "operation grading");
            bool from_subset = !act_args.subset_text.empty() || act_args.ambient >= 0;
            GPoly p;
            json input{{"side", act_args.side}, {"op", seq_json(op)}};
            if (from_subset) {
                if (act_args.ambient < 0)
                    throw CLI::ValidationError("--ambient", "required with --subset");
                require_budget(act_args.ambient <= kMaxAmbient, "ambient");
                SubsetQ q = parse_subset(act_args.subset_text, act_args.ambient);
                p = GPoly::monomial(q.type());
                input["subset"] = q.elements();
                input["ambient"] = act_args.ambient;
            } else if (!act_args.monomial_text.empty()) {
                ExponentSeq w = parse_exponent_seq(act_args.monomial_text);
                require_budget(w.grading() <= 2 * kMaxAmbient, "monomial grading");
                p = GPoly::monomial(w);
                input["monomial"] = seq_json(w);
            } else {
                throw CLI::ValidationError("act", "need --monomial or --subset/--ambient");
            }
            GPoly r = run_act(act_args.side, op, p);
            if (act_args.json_out)
                emit_record("act", input, poly_to_json(r));
            else
                std::cout << render_poly(r, from_subset ? 'g' : 'b') << "\n";
            return 0;
        }

        if (cn->parsed()) {
            require_budget(cn_ambient >= 0 && cn_ambient <= kMaxAmbient, "ambient");
            SubsetQ q = parse_subset(cn_subset, cn_ambient);
            ExponentSeq psi = parse_exponent_seq(cn_left);
            ExponentSeq omega = parse_exponent_seq(cn_right);
            require_budget(psi.grading() <= kMaxGradingBudget &&
                               omega.grading() <= kMaxGradingBudget,
                           "operation grading");
            GPoly r = char_number(q, psi, omega);
            if (cn_json)
                emit_record("char-number",
                            {{"subset", q.elements()},
                             {"ambient", cn_ambient},
                             {"left", seq_json(psi)},
                             {"right", seq_json(omega)}},
                            poly_to_json(r));
            else
                std::cout << render_poly(r, 'g') << "\n";
            return 0;
        }

        if (geom->parsed()) {
            require_budget(geom_ambient >= 0 && geom_ambient <= kMaxAmbient, "ambient");
            SubsetQ q = parse_subset(geom_subset, geom_ambient);
            json input{{"what", geom_what}, {"subset", q.elements()}, {"ambient", geom_ambient}};
            if (geom_what == "coproduct") {
                GTensor t = geom_coproduct(q);
                if (geom_json)
                    emit_record("geom", input, tensor_to_json(t));
                else
                    std::cout << render_tensor(t, 'g') << "\n";
                return 0;
            }
            GPoly r;
            if (geom_what == "antipode") {
                r = geom_antipode(q);
            } else if (geom_what == "act-left" || geom_what == "act-right") {
                ExponentSeq op = parse_exponent_seq(geom_op);
                require_budget(op.grading() <= kMaxGradingBudget, "operation grading");
                input["op"] = seq_json(op);
                r = geom_what == "act-left" ? geom_act_left(q, op) : geom_act_right(q, op);
            } else if (geom_what == "act-both") {
                ExponentSeq psi = parse_exponent_seq(geom_left);
                ExponentSeq omega = parse_exponent_seq(geom_right);
                require_budget(psi.grading() <= kMaxGradingBudget &&
                                   omega.grading() <= kMaxGradingBudget,
                               "operation grading");
                input["left"] = seq_json(psi);
                input["right"] = seq_json(omega);
                r = geom_act_both(q, psi, omega);
            } else {
                throw CLI::ValidationError("--what", "unknown table '" + geom_what + "'");
            }
            if (geom_json)
                emit_record("geom", input, poly_to_json(r));
            else
                std::cout << render_poly(r, 'g') << "\n";
            return 0;
        }

        if (ver->parsed()) {
            require_budget(verify_max_n >= 0 && verify_max_n <= kMaxNBudget, "--max-n");
            require_budget(verify_max_grading >= 0 && verify_max_grading <= kMaxGradingBudget,
                           "--max-grading");
            require_budget(verify_max_degree >= 1 && verify_max_degree <= kMaxDegreeBudget,
                           "--max-degree");
            require_budget(verify_trials >= 1 && verify_trials <= kMaxTrialsBudget, "--trials");
            std::vector<std::string> names = verify_suites;
            if (names.size() == 1 && names[0] == "all")
                names = {"hopf",   "seriesalg", "lambda", "three-path", "realization",
                         "twisted-classes", "left-closed-form",    "duality", "projection",     "ring",
                         "actions", "goldens"};
            return run_verify_suites(names, verify_max_n, verify_max_grading, verify_max_degree,
                                     verify_trials, verify_json);
        }

        if (tables->parsed()) {
            if (tables_what == "lambda") {
                require_budget(tables_grading >= 0 && tables_grading <= kMaxGradingBudget,
                               "--grading");
                LambdaMatrix lm = lambda_matrix(tables_grading);
                if (tables_json) {
                    json basis = json::array(), entries = json::array();
                    for (const auto& b : lm.basis)
                        basis.push_back(b.entries());
                    for (const auto& row : lm.entries) {
                        json jrow = json::array();
                        for (const auto& e : row)
                            jrow.push_back(e.str());
                        entries.push_back(jrow);
                    }
                    emit_record("tables", {{"what", "lambda"}, {"grading", tables_grading}},
                                {{"basis", basis}, {"entries", entries}});
                } else {
                    for (std::size_t r = 0; r < lm.basis.size(); ++r) {
                        std::cout << "psi=(" << lm.basis[r].str() << "):";
                        for (const auto& e : lm.entries[r])
                            std::cout << " " << e.str();
                        std::cout << "\n";
                    }
                }
                return 0;
            }
            if (tables_what == "pushforward") {
                require_budget(tables_n >= 0 && tables_n <= kMaxAmbient, "--n");
                FlagContext ctx = FlagContext::bounded_flag(tables_n);
                json rows = json::array();
                for (const SubsetQ& r : all_subsets(tables_n)) {
                    GPoly v = pushforward(FlagElem::monomial(ctx, r));
                    if (tables_json)
                        rows.push_back({{"R", r.elements()}, {"value", poly_to_json(v)}});
                    else
                        std::cout << "pi_!(x^{" << format_subset(r) << "}) = "
                                  << render_poly(v, 'g') << "\n";
                }
                if (tables_json)
                    emit_record("tables", {{"what", "pushforward"}, {"n", tables_n}}, rows);
                return 0;
            }
            if (tables_what == "coproduct") {
                require_budget(tables_max_n >= 1 && tables_max_n <= 10, "--max-n");
                json rows = json::array();
                for (int k = 1; k <= tables_max_n; ++k) {
                    GTensor t = coproduct(GPoly::generator(k));
                    if (tables_json)
                        rows.push_back({{"n", k}, {"value", tensor_to_json(t)}});
                    else
                        std::cout << "delta(b_" << k << ") = " << render_tensor(t, 'b') << "\n";
                }
                if (tables_json)
                    emit_record("tables", {{"what", "coproduct"}, {"max-n", tables_max_n}}, rows);
                return 0;
            }
            throw CLI::ValidationError("--what", "unknown table '" + tables_what + "'");
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
