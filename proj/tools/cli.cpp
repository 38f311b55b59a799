#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cayley/cayley.hpp"

namespace cayley::cli {

namespace {

using json = nlohmann::ordered_json;

struct CommandResult {
    json doc;
    std::string csv;
    std::string text;
    int code = kOk;
};

struct Context {
    const RunConfig& config;
    FieldPtr field;
    OracleOptions options;

    [[nodiscard]] std::uint64_t q() const { return field->order(); }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<int> requested_ranks(const RunConfig& config) {
    if (config.rank == "all") {
        std::vector<int> ranks;
        for (int r = 0; r <= config.n; ++r) ranks.push_back(r);
        return ranks;
    }
    int r = -1;
    try {
        std::size_t used = 0;
        r = std::stoi(config.rank, &used);
        if (used != config.rank.size()) r = -1;
    } catch (const std::exception&) {
        r = -1;
    }
    if (r < 0 || r > config.n) {
        throw UsageError("--rank must be 'all' or an integer in [0, " + std::to_string(config.n) + "]");
    }
    return {r};
}

// ---------------------------------------------------------------- field-info

CommandResult cmd_field_info(const Context& ctx) {
    const Field& f = *ctx.field;
    CommandResult result;
    result.doc["designation"] = f.designation();
    result.doc["p"] = f.characteristic();
    result.doc["k"] = f.degree();
    result.doc["q"] = f.order();
    result.doc["modulus"] = f.modulus().empty() ? json(nullptr) : json(f.modulus());
    result.doc["modulus_string"] = f.modulus().empty() ? json(nullptr) : json(f.modulus_string());

    result.csv = "key,value\np," + std::to_string(f.characteristic()) + "\nk," + std::to_string(f.degree()) +
                 "\nq," + std::to_string(f.order()) + "\nmodulus," + f.modulus_string() + "\n";
    result.text = "GF(" + f.designation() + "): p=" + std::to_string(f.characteristic()) +
                  " k=" + std::to_string(f.degree()) + " q=" + std::to_string(f.order());
    if (!f.modulus().empty()) result.text += " modulus " + f.modulus_string();
    result.text += "\n";
    return result;
}

// -------------------------------------------------------------------- census

CommandResult cmd_census(const Context& ctx) {
    const auto& config = ctx.config;
    const bool want_formula = config.method != "oracle";
    const bool want_oracle = config.method != "formula";
    const bool both = want_formula && want_oracle;

    CommandResult result;
    result.doc = json::array();
    result.csv = "n,q,rank,method,count,agrees\n";
    std::ostringstream text;

    for (const int r : requested_ranks(config)) {
        std::optional<CensusRecord> formula;
        std::optional<CensusRecord> oracle;
        if (want_formula) {
            if (auto count = intersection_formula(r, config.n, ctx.q())) {
                formula = CensusRecord{config.n, ctx.q(), r, CountMethod::formula, *count};
            }
        }
        if (want_oracle) {
            oracle = CensusRecord{config.n, ctx.q(), r, CountMethod::oracle,
                                  intersection_count_oracle(r, config.n, ctx.field, ctx.options)};
        }
        std::optional<bool> agrees;
        if (both && formula && oracle) agrees = formula->count == oracle->count;

        for (const auto* record : {formula ? &*formula : nullptr, oracle ? &*oracle : nullptr}) {
            if (record == nullptr) continue;
            const auto with_agreement = both ? std::optional<std::optional<bool>>(agrees) : std::nullopt;
            result.doc.push_back(json::parse(census_record_json(*record, with_agreement)));
            result.csv += census_record_csv(*record, agrees) + "\n";
            text << "n=" << record->n << " q=" << record->q << " rank=" << record->rank << " "
                 << to_string(record->method) << " " << record->count.str();
            if (agrees) text << (*agrees ? " (agrees)" : " (DISAGREES)");
            text << "\n";
        }
        if (want_formula && !formula) {
            text << "n=" << config.n << " q=" << ctx.q() << " rank=" << r << " formula unavailable\n";
        }
        if (agrees && !*agrees) result.code = kVerificationFailed;
    }
    result.text = text.str();
    return result;
}

// -------------------------------------------------------------------- verify

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string actual;
    std::string detail;
};

CheckOutcome check_equal(std::string name, const BigInt& expected, const BigInt& actual, std::string detail) {
    return {std::move(name), expected == actual, expected.str(), actual.str(), std::move(detail)};
}

std::vector<CheckOutcome> check_unit_shift_criterion(const Context& ctx) {
    const MatrixSpace space(ctx.field, ctx.config.n, ctx.options.budget);
    std::uint64_t mismatches = 0, holding = 0;
    std::string first_mismatch;
    for (const Matrix& a : space) {
        const bool lhs = has_singular_unit_shift(a);
        const bool rhs = unit_shift_column_criterion(a);
        holding += lhs ? 1 : 0;
        if (lhs != rhs) {
            if (mismatches == 0) first_mismatch = a.to_literal();
            ++mismatches;
        }
    }
    std::string detail = std::to_string(space.size()) + " matrices, " + std::to_string(holding) +
                         " invertible with singular A+E11";
    if (mismatches > 0) detail += ", first mismatch " + first_mismatch;
    return {{"lemma27", mismatches == 0, "0 mismatches", std::to_string(mismatches) + " mismatches", detail}};
}

std::vector<CheckOutcome> check_rank_one(const Context& ctx) {
    const int n = ctx.config.n;
    return {check_equal("lemma31", rank_one_intersection(n, ctx.q()),
                        intersection_count_oracle(1, n, ctx.field, ctx.options),
                        "|(E11 + GL) ∩ GL| formula vs enumeration")};
}

std::vector<CheckOutcome> check_rank_two(const Context& ctx) {
    const int n = ctx.config.n;
    if (n < 2) throw UsageError("check lemma32 needs --n >= 2");
    std::vector<CheckOutcome> out;
    out.push_back(check_equal("lemma32", rank_two_intersection(n, ctx.q()),
                              intersection_count_oracle(2, n, ctx.field, ctx.options),
                              "|(diag(1,1,0..) + GL) ∩ GL| formula vs enumeration"));
    if (n >= 3) {
        const auto formula = rank_two_cases_formula(n, ctx.q());
        const auto oracle = rank_two_cases_oracle(n, ctx.field, ctx.options);
        out.push_back(check_equal("lemma32-case1", formula.invertible_block, oracle.invertible_block,
                                  "leading 2x2 block of the inverse has rank 2"));
        out.push_back(check_equal("lemma32-case2", formula.zero_block, oracle.zero_block,
                                  "leading 2x2 block of the inverse is zero"));
        out.push_back(check_equal("lemma32-case3", formula.rank_one_block, oracle.rank_one_block,
                                  "leading 2x2 block of the inverse has rank 1"));
        out.push_back(check_equal("lemma32-case-sum", rank_two_intersection(n, ctx.q()), formula.total(),
                                  "per-case formulas sum to the closed form"));
    }
    return out;
}

std::vector<CheckOutcome> check_recurrence(const Context& ctx) {
    const std::uint64_t q = ctx.q();
    bool ok = derangement_count(0, q) == 1 && derangement_count(1, q) == BigInt(q) - 2;
    std::string detail = "e_0 = 1, e_1 = q - 2";
    BigInt qm = 1;  // q^m
    for (int m = 1; m <= ctx.config.n; ++m) {
        const BigInt prev_qm = qm;
        qm *= q;
        BigInt sign_term = 1;
        for (int i = 0; i < m * (m - 1) / 2; ++i) sign_term *= q;
        const BigInt expected =
            derangement_count(m - 1, q) * (qm - 1) * prev_qm + (m % 2 == 0 ? sign_term : BigInt(-sign_term));
        ok = ok && derangement_count(m, q) == expected;
    }
    detail += ", e_m recurrence for m = 1.." + std::to_string(ctx.config.n);
    return {{"recurrence", ok, "recurrence holds", ok ? "recurrence holds" : "recurrence broken",
             detail + ", e_n = " + derangement_count(ctx.config.n, q).str()}};
}

std::vector<CheckOutcome> check_rank_reduction(const Context& ctx) {
    const auto& config = ctx.config;
    if (config.matrix_a.has_value() != config.matrix_b.has_value()) {
        throw UsageError("--matrix-a and --matrix-b must be given together");
    }
    if (config.matrix_a) {
        const Matrix a = Matrix::from_literal(ctx.field, *config.matrix_a);
        const Matrix b = Matrix::from_literal(ctx.field, *config.matrix_b);
        if (a.size() != config.n || b.size() != config.n) {
            throw UsageError("matrix literals must be " + std::to_string(config.n) + "x" + std::to_string(config.n));
        }
        const auto brute = common_neighbors_bruteforce(a, b, ctx.options);
        const auto by_rank = common_neighbors_by_rank(a, b, ctx.options);
        return {check_equal("rank-reduction", brute, by_rank,
                            "pair " + a.to_literal() + " / " + b.to_literal() + ", rank(A-B) = " +
                                std::to_string(rank(a - b)))};
    }

    const MatrixSpace space(ctx.field, config.n, ctx.options.budget);
    if (space.size() < 2) throw UsageError("rank-reduction needs at least two vertices");
    std::mt19937_64 rng(config.seed);
    std::map<int, std::uint64_t> by_rank_cache;
    std::uint64_t mismatches = 0;
    std::string first_mismatch;
    for (std::uint64_t i = 0; i < config.samples; ++i) {
        const Matrix a = space.at({rng() % space.size()});
        Matrix b = space.at({rng() % space.size()});
        while (b == a) b = space.at({rng() % space.size()});
        const int r = rank(a - b);
        if (!by_rank_cache.contains(r)) by_rank_cache[r] = intersection_count_oracle(r, config.n, ctx.field, ctx.options);
        const auto brute = common_neighbors_bruteforce(a, b, ctx.options);
        if (brute != by_rank_cache[r]) {
            if (mismatches == 0) first_mismatch = a.to_literal() + " / " + b.to_literal();
            ++mismatches;
        }
    }
    std::string detail = std::to_string(config.samples) + " sampled pairs, seed " + std::to_string(config.seed);
    if (mismatches > 0) detail += ", first mismatch " + first_mismatch;
    return {{"rank-reduction", mismatches == 0, "0 mismatches", std::to_string(mismatches) + " mismatches", detail}};
}

CommandResult cmd_verify(const Context& ctx) {
    const auto& name = ctx.config.check;
    using Check = std::function<std::vector<CheckOutcome>(const Context&)>;
    const std::vector<std::pair<std::string, Check>> registry = {
        {"lemma27", check_unit_shift_criterion},
        {"lemma31", check_rank_one},
        {"lemma32", check_rank_two},
        {"recurrence", check_recurrence},
        {"rank-reduction", check_rank_reduction},
    };

    std::vector<CheckOutcome> outcomes;
    bool known = false;
    for (const auto& [check_name, run] : registry) {
        if (name != "all" && name != check_name) continue;
        known = true;
        if (name == "all" && check_name == "lemma32" && ctx.config.n < 2) continue;
        for (auto& o : run(ctx)) outcomes.push_back(std::move(o));
    }
    if (!known) throw UsageError("unknown check '" + name + "'");

    CommandResult result;
    bool all_passed = true;
    json checks = json::array();
    std::ostringstream text;
    result.csv = "check,n,q,passed,expected,actual\n";
    for (const auto& o : outcomes) {
        all_passed = all_passed && o.passed;
        checks.push_back({{"check", o.name},
                          {"passed", o.passed},
                          {"expected", o.expected},
                          {"actual", o.actual},
                          {"detail", o.detail}});
        result.csv += o.name + "," + std::to_string(ctx.config.n) + "," + std::to_string(ctx.q()) + "," +
                      (o.passed ? "true" : "false") + "," + o.expected + "," + o.actual + "\n";
        text << (o.passed ? "PASS " : "FAIL ") << o.name << " n=" << ctx.config.n << " q=" << ctx.q() << ": "
             << (o.passed ? o.actual : "expected " + o.expected + ", got " + o.actual) << " (" << o.detail << ")\n";
    }
    result.doc["n"] = ctx.config.n;
    result.doc["q"] = ctx.q();
    result.doc["checks"] = checks;
    result.doc["passed"] = all_passed;
    result.text = text.str();
    result.code = all_passed ? kOk : kVerificationFailed;
    return result;
}

// ----------------------------------------------------------------------- srg

CommandResult cmd_srg(const Context& ctx) {
    const SrgReport report = srg_decide(ctx.config.n, ctx.field, ctx.options);
    CommandResult result;
    result.doc = json::parse(srg_report_json(report));

    std::ostringstream csv, text;
    csv << "key,value\n"
        << "n," << report.n << "\nq," << report.q << "\norder," << report.order << "\ndegree," << report.degree
        << "\nlambda," << report.lambda << "\n";
    for (const auto& [r, count] : report.mu_by_rank) csv << "mu_" << r << "," << count << "\n";
    csv << "is_srg," << (report.is_srg ? "true" : "false") << "\n";

    text << "Cay(M_" << report.n << "(GF(" << report.field << ")), GL): v=" << report.order
         << " degree=" << report.degree << " lambda=" << report.lambda << "\n";
    for (const auto& [r, count] : report.mu_by_rank) text << "  mu(rank " << r << ") = " << count << "\n";
    text << "  strongly regular: " << (report.is_srg ? "yes" : "no") << "\n";
    if (report.parameters) {
        const auto& p = *report.parameters;
        text << "  parameters (" << p.v << ", " << p.k << ", " << p.lambda << ", " << p.mu << ")\n";
    }
    if (report.witness) {
        const auto& w = *report.witness;
        text << "  witness: rank " << w.rank_a << " gives " << w.count_a << ", rank " << w.rank_b << " gives "
             << w.count_b << "\n";
    }
    if (!report.note.empty()) text << "  note: " << report.note << "\n";
    result.csv = csv.str();
    result.text = text.str();
    return result;
}

// --------------------------------------------------------------- graph-build

CommandResult cmd_graph_build(const Context& ctx) {
    const int n = ctx.config.n;
    const CayleyGraph graph = CayleyGraph::build(n, ctx.field, ctx.options);
    const PairwiseSrgResult pairwise = graph.pairwise_srg();
    const SrgReport report = srg_decide(n, ctx.field, ctx.options);
    const bool agrees = pairwise.is_srg == report.is_srg;

    CommandResult result;
    result.doc["n"] = n;
    result.doc["q"] = ctx.q();
    result.doc["vertices"] = std::to_string(graph.vertex_count());
    result.doc["edges"] = std::to_string(graph.edge_count());
    result.doc["regular"] = pairwise.regular;
    result.doc["degree"] = std::to_string(pairwise.degree);
    result.doc["pairwise"] = {
        {"is_srg", pairwise.is_srg},
        {"lambda", pairwise.lambda ? json(std::to_string(*pairwise.lambda)) : json(nullptr)},
        {"mu", pairwise.mu ? json(std::to_string(*pairwise.mu)) : json(nullptr)},
        {"note", pairwise.note.empty() ? json(nullptr) : json(pairwise.note)},
    };
    result.doc["rank_class_is_srg"] = report.is_srg;
    result.doc["agrees"] = agrees;

    result.csv = "key,value\nvertices," + std::to_string(graph.vertex_count()) + "\nedges," +
                 std::to_string(graph.edge_count()) + "\ndegree," + std::to_string(pairwise.degree) +
                 "\npairwise_is_srg," + (pairwise.is_srg ? "true" : "false") + "\nrank_class_is_srg," +
                 (report.is_srg ? "true" : "false") + "\nagrees," + (agrees ? "true" : "false") + "\n";
    result.text = "explicit graph: " + std::to_string(graph.vertex_count()) + " vertices, " +
                  std::to_string(graph.edge_count()) + " edges, degree " + std::to_string(pairwise.degree) +
                  (pairwise.regular ? "" : " (irregular)") + "\n  pairwise SRG test: " +
                  (pairwise.is_srg ? "yes" : "no") + (pairwise.note.empty() ? "" : " (" + pairwise.note + ")") +
                  "\n  rank-class verdict: " + (report.is_srg ? "yes" : "no") + (agrees ? "" : "  MISMATCH") + "\n";
    result.code = agrees ? kOk : kVerificationFailed;
    return result;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv(kBudgetEnv)) {
        try {
            std::size_t used = 0;
            const auto value = std::stoull(env, &used);
            if (used == std::string(env).size() && value > 0) return value;
        } catch (const std::exception&) {
        }
    }
    return kDefaultBudget;
}

unsigned parse_threads(const std::string& threads) {
    if (threads == "auto") return default_thread_count();
    try {
        std::size_t used = 0;
        const auto value = std::stoul(threads, &used);
        if (used == threads.size() && value >= 1 && value <= 1024) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
    throw UsageError("--threads must be 'auto' or an integer in [1, 1024]");
}

void emit(const CommandResult& result, Output output, std::ostream& out) {
    switch (output) {
        case Output::json:
            out << result.doc.dump(2) << "\n";
            break;
        case Output::csv:
            out << result.csv;
            break;
        case Output::text:
            out << result.text;
            break;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    config.budget = default_budget();

    CLI::App app{"Counting and strong-regularity checks for unitary Cayley graphs of matrix algebras", "cayley"};
    app.require_subcommand(1);

    const std::map<std::string, Output> outputs{{"json", Output::json}, {"csv", Output::csv}, {"text", Output::text}};
    auto add_common = [&](CLI::App* sub, bool needs_n) {
        auto* n_opt = sub->add_option("--n", config.n, "matrix side n")->check(CLI::Range(1, 8));
        if (needs_n) n_opt->required();
        sub->add_option("--field", config.field, "field: prime power q or p^k")->required();
        sub->add_option("--budget", config.budget, "max elements per enumeration (env " + std::string(kBudgetEnv) + ")")
            ->check(CLI::PositiveNumber);
        sub->add_option("--threads", config.threads, "worker threads or 'auto'");
        sub->add_option("--seed", config.seed, "seed for sampled checks");
        sub->add_option("--output", config.output, "json, csv or text")
            ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
    };

    auto* field_info = app.add_subcommand("field-info", "describe GF(q) and its modulus");
    add_common(field_info, false);

    auto* census = app.add_subcommand("census", "closed-form and enumerated counts of (diag(I_r,0) + GL) ∩ GL");
    add_common(census, true);
    census->add_option("--rank", config.rank, "rank r or 'all'");
    census->add_option("--method", config.method, "formula, oracle or both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));

    auto* verify = app.add_subcommand("verify", "check closed forms against enumeration");
    add_common(verify, true);
    verify->add_option("--check", config.check, "lemma27, lemma31, lemma32, recurrence, rank-reduction or all")
        ->check(CLI::IsMember({"lemma27", "lemma31", "lemma32", "recurrence", "rank-reduction", "all"}));
    verify->add_option("--samples", config.samples, "sampled pairs for rank-reduction");
    verify->add_option("--matrix-a", config.matrix_a, "first vertex, e.g. \"1,0;0,1\"");
    verify->add_option("--matrix-b", config.matrix_b, "second vertex");

    auto* srg = app.add_subcommand("srg", "decide strong regularity of Cay(M_n, GL_n)");
    add_common(srg, true);

    auto* graph_build = app.add_subcommand("graph-build", "materialize the graph and test every pair");
    add_common(graph_build, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    const std::map<CLI::App*, std::function<CommandResult(const Context&)>> commands{
        {field_info, cmd_field_info}, {census, cmd_census},          {verify, cmd_verify},
        {srg, cmd_srg},               {graph_build, cmd_graph_build},
    };

    try {
        CLI::App* chosen = app.get_subcommands().front();
        config.command = chosen->get_name();
        Context ctx{config, nullptr, OracleOptions{Budget{config.budget}, parse_threads(config.threads)}};
        ctx.field = parse_field(config.field, ctx.options.budget);
        const CommandResult result = commands.at(chosen)(ctx);
        emit(result, config.output, out);
        return result.code;
    } catch (const BudgetExceeded& e) {
        err << "error: budget exceeded: " << e.what() << " (raise --budget or " << kBudgetEnv << " to at least "
            << e.required() << ")\n";
        return kBudget;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailed;
    }
}

}  // namespace cayley::cli
