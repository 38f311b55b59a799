// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cayley/cayley.hpp"
#include "cli.hpp"

using namespace cayley;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string str(const BigInt& x) { return x.str(); }

Outcome srg_2x2() {
    Outcome o;
    for (std::uint64_t q : {2, 3, 4, 5}) {
        const auto report = srg_decide(2, parse_field(std::to_string(q)));
        const BigInt x = q;
        const SrgParameters expected{x * x * x * x, x * x * x * x - x * x * x - x * x + x,
                                     x * x * x * x - 2 * x * x * x - x * x + 3 * x, x * x * x * x - 2 * x * x * x + x};
        o.expect(report.is_srg && report.parameters && *report.parameters == expected,
                 "q=" + std::to_string(q) + " parameters differ");
    }
    return o;
}

Outcome non_srg_3x3() {
    Outcome o;
    for (std::uint64_t q : {2, 3}) {
        const auto report = srg_decide(3, parse_field(std::to_string(q)));
        const auto mu1 = report.mu_by_rank.at(1);
        const auto mu2 = report.mu_by_rank.at(2);
        const auto f = parse_field(std::to_string(q));
        o.expect(!report.is_srg, "q=" + std::to_string(q) + " reported strongly regular");
        o.expect(BigInt(mu1) == rank_one_intersection(3, q) && mu1 == intersection_count_oracle(1, 3, f),
                 "q=" + std::to_string(q) + " mu_1 mismatch");
        o.expect(BigInt(mu2) == rank_two_intersection(3, q) && mu2 == intersection_count_oracle(2, 3, f),
                 "q=" + std::to_string(q) + " mu_2 mismatch");
        o.expect(mu1 != mu2, "q=" + std::to_string(q) + " mu_1 == mu_2");
    }
    return o;
}

Outcome rank_one() {
    Outcome o;
    for (const auto& [n, q] : std::vector<std::pair<int, std::uint64_t>>{
             {1, 2}, {1, 3}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}}) {
        const auto oracle = intersection_count_oracle(1, n, parse_field(std::to_string(q)));
        const auto formula = rank_one_intersection(n, q);
        o.expect(formula == oracle, "(" + std::to_string(n) + "," + std::to_string(q) + ") formula " + str(formula) +
                                        " oracle " + std::to_string(oracle));
    }
    return o;
}

Outcome rank_two() {
    Outcome o;
    for (const auto& [n, q] : std::vector<std::pair<int, std::uint64_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
        const auto f = parse_field(std::to_string(q));
        const auto oracle = intersection_count_oracle(2, n, f);
        const auto formula = rank_two_intersection(n, q);
        const std::string at = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
        o.expect(formula == oracle, at + " formula " + str(formula) + " oracle " + std::to_string(oracle));
        if (n >= 3) {
            const auto by_formula = rank_two_cases_formula(n, q);
            const auto by_oracle = rank_two_cases_oracle(n, f);
            o.expect(by_formula == by_oracle, at + " case split differs");
            o.expect(by_formula.total() == formula && by_oracle.total() == oracle, at + " case sum differs");
        }
    }
    return o;
}

Outcome recurrence() {
    Outcome o;
    for (const auto& [n, q] : std::vector<std::pair<int, std::uint64_t>>{
             {1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}, {3, 3}, {1, 4}, {2, 4}, {1, 5}, {2, 5}}) {
        const auto formula = derangement_count(n, q);
        const auto oracle = derangement_oracle(n, parse_field(std::to_string(q)));
        o.expect(formula == oracle, "(" + std::to_string(n) + "," + std::to_string(q) + ") formula " + str(formula) +
                                        " oracle " + std::to_string(oracle));
    }
    return o;
}

Outcome rank_class_law() {
    Outcome o;
    for (std::uint64_t q : {2, 3}) {
        const auto f = parse_field(std::to_string(q));
        const MatrixSpace space(f, 2);
        std::vector<std::uint64_t> by_rank(3);
        for (int r = 1; r <= 2; ++r) by_rank[r] = intersection_count_oracle(r, 2, f);
        std::uint64_t pairs = 0, mismatches = 0;
        for (std::uint64_t i = 0; i < space.size(); ++i) {
            const Matrix a = space.at({i});
            for (std::uint64_t j = 0; j < space.size(); ++j) {
                if (i == j) continue;
                const Matrix b = space.at({j});
                ++pairs;
                mismatches += common_neighbors_bruteforce(a, b) != by_rank[rank(a - b)] ? 1 : 0;
            }
        }
        o.expect(pairs == space.size() * (space.size() - 1), "pair count");
        o.expect(mismatches == 0, "n=2 q=" + std::to_string(q) + ": " + std::to_string(mismatches) + " mismatches");
    }
    const auto f = parse_field("2");
    const MatrixSpace space(f, 3);
    std::vector<std::uint64_t> by_rank(4);
    for (int r = 1; r <= 3; ++r) by_rank[r] = intersection_count_oracle(r, 3, f);
    std::mt19937_64 rng(20240611);
    std::uint64_t checked = 0, mismatches = 0;
    while (checked < 1000) {
        const std::uint64_t i = rng() % space.size();
        const std::uint64_t j = rng() % space.size();
        if (i == j) continue;
        const Matrix a = space.at({i});
        const Matrix b = space.at({j});
        ++checked;
        mismatches += common_neighbors_bruteforce(a, b) != by_rank[rank(a - b)] ? 1 : 0;
    }
    o.expect(mismatches == 0, "n=3 q=2: " + std::to_string(mismatches) + " mismatches");
    return o;
}

Outcome unit_shift() {
    Outcome o;
    for (const auto& [n, q] : std::vector<std::pair<int, std::uint64_t>>{{2, 2}, {2, 3}, {3, 2}}) {
        std::uint64_t mismatches = 0;
        for (const Matrix& a : MatrixSpace(parse_field(std::to_string(q)), n)) {
            mismatches += has_singular_unit_shift(a) != unit_shift_column_criterion(a) ? 1 : 0;
        }
        o.expect(mismatches == 0, "(" + std::to_string(n) + "," + std::to_string(q) + "): " +
                                      std::to_string(mismatches) + " mismatches");
    }
    return o;
}

Outcome degree_and_lambda() {
    Outcome o;
    for (const auto& [n, q] : std::vector<std::pair<int, std::uint64_t>>{{2, 2}, {2, 3}, {3, 2}}) {
        const auto f = parse_field(std::to_string(q));
        const std::string at = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
        const auto reg = regularity_check(n, f);
        o.expect(BigInt(reg.degree) == gl_order(n, q), at + " degree " + std::to_string(reg.degree));
        const Matrix zero(f, n);
        const auto lambda = common_neighbors_bruteforce(zero, Matrix::identity(f, n));
        o.expect(BigInt(lambda) == derangement_count(n, q), at + " lambda " + std::to_string(lambda));
    }
    return o;
}

Outcome explicit_graph() {
    Outcome o;
    std::vector<std::pair<int, std::uint64_t>> cases{{2, 2}, {2, 3}};
    for (std::uint64_t q : {2, 3, 4, 5}) cases.emplace_back(1, q);
    for (const auto& [n, q] : cases) {
        const auto f = parse_field(std::to_string(q));
        const std::string at = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
        const auto pairwise = CayleyGraph::build(n, f).pairwise_srg();
        const auto decided = srg_decide(n, f);
        o.expect(pairwise.is_srg == decided.is_srg, at + " verdicts differ");
        if (pairwise.is_srg && decided.parameters) {
            const auto& p = *decided.parameters;
            o.expect(BigInt(pairwise.degree) == p.k && pairwise.lambda && BigInt(*pairwise.lambda) == p.lambda &&
                         pairwise.mu && BigInt(*pairwise.mu) == p.mu,
                     at + " parameters differ");
        }
    }
    return o;
}

Outcome determinism() {
    Outcome o;
    const std::vector<std::vector<std::string>> commands{
        {"field-info", "--field", "3^2"},
        {"census", "--n", "3", "--field", "3", "--rank", "all", "--method", "both"},
        {"verify", "--check", "all", "--n", "3", "--field", "2", "--seed", "17"},
        {"verify", "--check", "rank-reduction", "--n", "2", "--field", "5", "--seed", "3", "--samples", "50"},
        {"srg", "--n", "3", "--field", "3"},
        {"srg", "--n", "2", "--field", "4"},
        {"graph-build", "--n", "2", "--field", "3"},
    };
    for (const auto& base : commands) {
        std::vector<std::string> outputs;
        for (const char* threads : {"1", "4", "1", "auto"}) {
            auto args = base;
            args.insert(args.end(), {"--threads", threads});
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            o.expect(code == 0, base[0] + " exited " + std::to_string(code));
            outputs.push_back(out.str());
        }
        for (const auto& s : outputs) o.expect(s == outputs.front(), base[0] + " output differs between runs");
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"strongly regular parameters for n=2, q in {2,3,4,5}", srg_2x2},
        {"n=3 is not strongly regular, q in {2,3}", non_srg_3x3},
        {"rank-one intersection formula matches oracle", rank_one},
        {"rank-two intersection formula, case split matches oracle", rank_two},
        {"derangement recurrence matches oracle", recurrence},
        {"common neighbors depend only on rank(A-B)", rank_class_law},
        {"unit-shift singularity criterion, exhaustive", unit_shift},
        {"degree = |GL_n| and adjacent pairs share e_n neighbors", degree_and_lambda},
        {"explicit graph agrees with rank-class verdict", explicit_graph},
        {"CLI output is deterministic across runs and thread counts", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        failures += outcome.ok ? 0 : 1;
        std::cout << (outcome.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
        if (!outcome.ok) std::cout << " (" << outcome.detail << ")";
        std::cout << '\n';
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
