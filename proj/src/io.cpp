#include "pap/io.hpp"

namespace pap {

using nlohmann::json;

json to_json(const Triangle& t) {
    json rows = json::array();
    for (const auto& row : t.rows) rows.push_back(row);
    return json{{"name", t.name}, {"min_n", t.min_n}, {"rows", rows}};
}

json to_json(const ClassCounts& c) {
    return json{{"n", c.n},
                {"k", c.k},
                {"total", c.total},
                {"even", c.even_count},
                {"odd", c.odd_count},
                {"pap_even", c.pap_even},
                {"pap_odd", c.pap_odd},
                {"npap_even", c.npap_even},
                {"npap_odd", c.npap_odd}};
}

json to_json(const OrbitRecord& rec) {
    json j{{"operator", to_string(rec.op)},
           {"period", rec.period},
           {"members", rec.members},
           {"canonical_count", rec.canonical_count}};
    if (rec.divisor_d) {
        j["divisor_d"] = *rec.divisor_d;
    } else {
        j["divisor_d"] = nullptr;
    }
    return j;
}

json to_json(const OrbitCensus& census) {
    json alpha = json::object();
    for (const auto& [d, count] : census.alpha) {
        alpha[std::to_string(d)] = count;
    }
    json orbits = json::array();
    for (const OrbitCensusEntry& entry : census.orbits) {
        json o = to_json(entry.record);
        o["n"] = census.n;
        o["k"] = census.k;
        o["representative"] = entry.representative.str();
        orbits.push_back(std::move(o));
    }
    return json{{"n", census.n},
                {"k", census.k},
                {"side", to_string(census.side)},
                {"alpha", alpha},
                {"orbits", orbits}};
}

json to_json(const VerificationReport& report) {
    json params = json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    json counterexamples = json::array();
    for (const Counterexample& ce : report.counterexamples) {
        counterexamples.push_back(json{{"clause", ce.clause},
                                       {"item", ce.item},
                                       {"observed", ce.observed},
                                       {"expected", ce.expected}});
    }
    json subchecks = json::array();
    for (const SubCheck& sc : report.subchecks) {
        subchecks.push_back(json{{"name", sc.name}, {"scanned", sc.scanned}, {"failures", sc.failures}});
    }
    json j{{"name", report.name},
           {"params", params},
           {"scanned", report.scanned},
           {"pass", report.pass},
           {"vacuous", report.vacuous},
           {"total_counterexamples", report.total_counterexamples},
           {"counterexamples", counterexamples},
           {"subchecks", subchecks},
           {"millis", report.millis}};
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

std::string to_csv(const Triangle& t) {
    std::string out = "n,k,value\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const int n = t.min_n + static_cast<int>(i);
        for (std::size_t k = 0; k < t.rows[i].size(); ++k) {
            out += std::to_string(n) + ',' + std::to_string(k) + ',' +
                   std::to_string(t.rows[i][k]) + '\n';
        }
    }
    return out;
}

std::string class_counts_csv(const std::vector<ClassCounts>& counts) {
    std::string out = "n,k,total,even,odd,pap_even,pap_odd,npap_even,npap_odd\n";
    for (const ClassCounts& c : counts) {
        out += std::to_string(c.n) + ',' + std::to_string(c.k) + ',' + std::to_string(c.total) + ',' +
               std::to_string(c.even_count) + ',' + std::to_string(c.odd_count) + ',' +
               std::to_string(c.pap_even) + ',' + std::to_string(c.pap_odd) + ',' +
               std::to_string(c.npap_even) + ',' + std::to_string(c.npap_odd) + '\n';
    }
    return out;
}

std::string to_csv(const OrbitCensus& census) {
    std::string out = "n,k,side,d,alpha\n";
    for (const auto& [d, count] : census.alpha) {
        out += std::to_string(census.n) + ',' + std::to_string(census.k) + ',' +
               to_string(census.side) + ',' + std::to_string(d) + ',' + std::to_string(count) + '\n';
    }
    return out;
}

}  // namespace pap
