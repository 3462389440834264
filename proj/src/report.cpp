#include "evdeg/report.hpp"

#include "json.hpp"

namespace evdeg {
namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out += c;
        }
    }
    out += '"';
    return out;
}

}  // namespace

std::string report_json(const Report& rep) {
    using json = nlohmann::ordered_json;
    json root;
    root["suite"] = rep.suite;
    root["seed"] = rep.seed;

    json results = json::array();
    for (const IdentityResult& r : rep.results) {
        const IdentityInfo& info = identity_info(r.id);
        json row;
        row["id"] = info.name;
        json inputs = json::array();
        inputs.push_back(r.input_g);
        if (info.binary) inputs.push_back(r.input_h);
        row["inputs"] = std::move(inputs);
        row["applicable"] = r.applicable;
        if (!r.applicable) row["reason"] = r.reason;
        row["direct"] = r.direct;
        row["stated"] = r.stated;
        if (r.derived) row["derived"] = *r.derived;
        row["stated_match"] = r.stated_match;
        if (r.derived_match) row["derived_match"] = *r.derived_match;
        results.push_back(std::move(row));
    }
    root["results"] = std::move(results);

    // Per-identity tallies in registry order, restricted to ids that appear.
    json summary = json::object();
    for (const IdentityInfo& info : identity_registry()) {
        long long pass = 0, fail = 0, skip = 0;
        bool seen = false;
        for (const IdentityResult& r : rep.results) {
            if (r.id != info.id) continue;
            seen = true;
            if (!r.applicable) {
                ++skip;
            } else if (r.passes()) {
                ++pass;
            } else {
                ++fail;
            }
        }
        if (!seen) continue;
        json cell;
        cell["pass"] = pass;
        cell["fail"] = fail;
        cell["skip"] = skip;
        summary[info.name] = std::move(cell);
    }
    root["summary"] = std::move(summary);
    return root.dump(2) + "\n";
}

std::string report_csv(const Report& rep) {
    std::string out =
        "id,input_g,input_h,applicable,reason,direct,stated,derived,stated_match,derived_match\n";
    for (const IdentityResult& r : rep.results) {
        out += csv_field(identity_info(r.id).name);
        out += ',';
        out += csv_field(r.input_g);
        out += ',';
        out += csv_field(r.input_h);
        out += ',';
        out += r.applicable ? "true" : "false";
        out += ',';
        out += csv_field(r.reason);
        out += ',';
        out += std::to_string(r.direct);
        out += ',';
        out += std::to_string(r.stated);
        out += ',';
        if (r.derived) out += std::to_string(*r.derived);
        out += ',';
        out += r.stated_match ? "true" : "false";
        out += ',';
        if (r.derived_match) out += (*r.derived_match ? "true" : "false");
        out += '\n';
    }
    return out;
}

}  // namespace evdeg
