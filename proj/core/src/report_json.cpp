#include "cayley/report_json.hpp"

#include <json.hpp>

namespace cayley {

namespace {

using json = nlohmann::ordered_json;

std::string decimal(const BigInt& v) { return v.str(); }
std::string decimal(std::uint64_t v) { return std::to_string(v); }

}  // namespace

std::string census_record_json(const CensusRecord& record, std::optional<std::optional<bool>> agrees) {
    json j;
    j["n"] = record.n;
    j["q"] = record.q;
    j["rank"] = record.rank;
    j["method"] = to_string(record.method);
    j["count"] = decimal(record.count);
    if (agrees) j["agrees"] = agrees->has_value() ? json(**agrees) : json(nullptr);
    return j.dump();
}

std::string census_record_csv(const CensusRecord& record, std::optional<bool> agrees) {
    std::string row = std::to_string(record.n) + "," + std::to_string(record.q) + "," +
                      std::to_string(record.rank) + "," + to_string(record.method) + "," +
                      decimal(record.count) + ",";
    if (agrees) row += *agrees ? "true" : "false";
    return row;
}

std::string srg_report_json(const SrgReport& report) {
    json j;
    j["n"] = report.n;
    j["q"] = report.q;
    j["order"] = decimal(report.order);
    j["degree"] = decimal(report.degree);
    j["lambda"] = decimal(report.lambda);
    json mu = json::object();
    for (const auto& [r, count] : report.mu_by_rank) mu[std::to_string(r)] = decimal(count);
    j["mu_by_rank"] = mu;
    j["is_srg"] = report.is_srg;
    if (report.parameters) {
        const auto& p = *report.parameters;
        j["parameters"] = json::array({decimal(p.v), decimal(p.k), decimal(p.lambda), decimal(p.mu)});
    } else {
        j["parameters"] = nullptr;
    }
    if (report.witness) {
        const auto& w = *report.witness;
        j["witness"] = {{"rank_pair", json::array({w.rank_a, w.rank_b})},
                        {"counts", json::array({decimal(w.count_a), decimal(w.count_b)})},
                        {"matrices", json::array({w.matrix_a, w.matrix_b})}};
    } else {
        j["witness"] = nullptr;
    }
    j["note"] = report.note.empty() ? json(nullptr) : json(report.note);
    return j.dump();
}

}  // namespace cayley
