#include "truthdisc/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "truthdisc/errors.hpp"

namespace truthdisc {

namespace csv {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(ch);
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

std::string join_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n") != std::string::npos) {
            out.push_back('"');
            for (char ch : f) {
                if (ch == '"') out += "\"\"";
                else out.push_back(ch);
            }
            out.push_back('"');
        } else {
            out += f;
        }
    }
    return out;
}

}  // namespace csv

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    return out;
}

}  // namespace

std::vector<Claim> load_claims(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<Claim> claims;
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        auto fields = csv::split_row(line);
        if (!saw_header) {
            saw_header = true;
            if (fields == std::vector<std::string>{"claim_id", "source_id", "data_item_id",
                                                   "value"}) {
                continue;  // header row
            }
        }
        if (fields.size() != 4) {
            throw ParseError(lineno, "expected 4 fields, got " + std::to_string(fields.size()));
        }
        claims.push_back(Claim{fields[0], fields[1], fields[2], canonical_value(fields[3])});
    }
    if (claims.empty()) throw EmptyDatasetError();
    {
        std::unordered_set<std::string> seen;
        for (const Claim& c : claims) {
            if (!seen.insert(c.claim_id).second) throw DuplicateClaimError(c.claim_id);
        }
    }
    return claims;
}

void save_claims(const std::vector<Claim>& claims, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "claim_id,source_id,data_item_id,value\n";
    for (const Claim& c : claims) {
        out << csv::join_row({c.claim_id, c.source_id, c.data_item_id, c.value}) << "\n";
    }
}

GroundTruth load_ground_truth(const std::string& path) {
    std::ifstream in = open_input(path);
    GroundTruth gt;
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        auto fields = csv::split_row(line);
        if (!saw_header) {
            saw_header = true;
            if (fields == std::vector<std::string>{"data_item_id", "true_value"}) continue;
        }
        if (fields.size() != 2) {
            throw ParseError(lineno, "expected 2 fields, got " + std::to_string(fields.size()));
        }
        gt[fields[0]].insert(canonical_value(fields[1]));
    }
    if (gt.empty()) throw EmptyGoldStandardError();
    return gt;
}

void save_ground_truth(const GroundTruth& gt, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "data_item_id,true_value\n";
    for (const auto& [item, values] : gt) {
        for (const auto& v : values) out << csv::join_row({item, v}) << "\n";
    }
}

std::vector<std::string> unclaimed_gold_items(const GroundTruth& gt, const IndexedDataset& ds) {
    std::vector<std::string> out;
    for (const auto& [item, values] : gt) {
        if (ds.find_item(item) < 0) out.push_back(item);
    }
    return out;
}

ScenarioConfig load_scenario_config(const std::string& path) {
    std::ifstream in = open_input(path);
    ScenarioConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (!value.empty() && value.back() == '\r') value.pop_back();
        if (key == "sources") cfg.n_sources = std::stoi(value);
        else if (key == "items") cfg.n_items = std::stoi(value);
        else if (key == "cov") cfg.cov = coverage_from_string(value);
        else if (key == "conf") cfg.conf = conflict_from_string(value);
        else if (key == "gt") cfg.gt = truth_from_string(value);
        else if (key == "max_distinct") cfg.max_distinct = std::stoi(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else throw ParseError(lineno, "unknown key: " + key);
    }
    cfg.validate();
    return cfg;
}

void save_scenario_config(const ScenarioConfig& cfg, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "sources=" << cfg.n_sources << "\n"
        << "items=" << cfg.n_items << "\n"
        << "cov=" << to_string(cfg.cov) << "\n"
        << "conf=" << to_string(cfg.conf) << "\n"
        << "gt=" << to_string(cfg.gt) << "\n"
        << "max_distinct=" << cfg.max_distinct << "\n"
        << "seed=" << cfg.seed << "\n";
}

std::map<std::pair<std::string, std::string>, double> load_certainty_matrix(
    const std::string& path) {
    std::ifstream in = open_input(path);
    std::map<std::pair<std::string, std::string>, double> w;
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        auto fields = csv::split_row(line);
        if (!saw_header) {
            saw_header = true;
            if (fields == std::vector<std::string>{"source_id", "data_item_id", "certainty"})
                continue;
        }
        if (fields.size() != 3) throw ParseError(lineno, "expected 3 fields");
        w[{fields[0], fields[1]}] = std::stod(fields[2]);
    }
    return w;
}

void save_dependence_matrix(const DependenceMatrix& dep, const IndexedDataset& ds,
                            const std::string& path) {
    std::ofstream out = open_output(path);
    out << "source_i,source_j,probability\n";
    for (int i = 0; i < dep.source_count(); ++i) {
        for (int j = i + 1; j < dep.source_count(); ++j) {
            out << csv::join_row({ds.sources()[i].id, ds.sources()[j].id,
                                  std::to_string(dep(i, j))})
                << "\n";
        }
    }
}

void save_scenario_metadata(const ScenarioMetadata& meta, const std::string& path) {
    nlohmann::json j;
    j["coverage"] = meta.coverage;
    j["truth_quota"] = meta.truth_quota;
    j["achieved_true"] = meta.achieved_true;
    j["requested_distinct"] = meta.requested_distinct;
    j["achieved_distinct"] = meta.achieved_distinct;
    j["items_with_shortfall"] = meta.items_with_shortfall;
    j["quota_slips"] = meta.quota_slips;
    j["mean_true_rate"] = meta.mean_true_rate;
    std::ofstream out = open_output(path);
    out << j.dump(2) << "\n";
}

}  // namespace truthdisc
