#include "core/serialize.hpp"

#include "core/errors.hpp"

namespace spt {
namespace {

nlohmann::ordered_json ids_json(const VertexSet& s) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (uint32_t v : s.elements()) arr.push_back(v);
    return arr;
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

} // namespace

std::string coord_label(const Spider& s, uint32_t v) {
    Coordinate c = s.coordinate_of(v);
    if (c.is_head()) return "v0";
    return "v" + std::to_string(c.leg) + "," + std::to_string(c.height);
}

std::string star_table_tsv(const StarTable& table, const Spider* s) {
    std::string out = "# t=" + std::to_string(table.t) + " total=" + std::to_string(table.total) +
                      "\nvertex\tcoord\tcount\n";
    for (uint32_t v = 0; v < table.counts.size(); ++v) {
        out += std::to_string(v);
        out += '\t';
        out += s ? coord_label(*s, v) : "-";
        out += '\t';
        out += std::to_string(table.counts[v]);
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json star_table_json(const StarTable& table, const Spider* s) {
    nlohmann::ordered_json j;
    j["t"] = table.t;
    j["total"] = table.total;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (uint32_t v = 0; v < table.counts.size(); ++v) {
        nlohmann::ordered_json row;
        row["vertex"] = v;
        row["coord"] = s ? coord_label(*s, v) : "-";
        row["count"] = table.counts[v];
        rows.push_back(std::move(row));
    }
    j["vertices"] = std::move(rows);
    return j;
}

std::string report_line(const InjectionReport& report) {
    std::string out = report.verified() ? "PASS" : "FAIL";
    out += " theorem=" + std::to_string(report.theorem);
    out += " spider=" + report.spider;
    out += " t=" + std::to_string(report.t);
    out += " i=" + std::to_string(report.i);
    out += " j=" + std::to_string(report.j);
    out += " domain=" + std::to_string(report.domain_size);
    out += " image=" + std::to_string(report.image_size);
    out += " violations=" + std::to_string(report.violations.size());
    return out;
}

nlohmann::ordered_json report_json(const InjectionReport& report) {
    nlohmann::ordered_json j;
    j["theorem"] = report.theorem;
    j["spider"] = report.spider;
    j["t"] = report.t;
    j["i"] = report.i;
    j["j"] = report.j;
    j["domain_size"] = report.domain_size;
    j["image_size"] = report.image_size;
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (const Violation& v : report.violations) {
        nlohmann::ordered_json item;
        item["input"] = ids_json(v.input);
        item["kind"] = violation_kind_name(v.kind);
        violations.push_back(std::move(item));
    }
    j["violations"] = std::move(violations);
    return j;
}

std::string verdict_line(const EkrVerdict& verdict, const std::string& instance_label) {
    std::string out = instance_label;
    out += " t=" + std::to_string(verdict.t);
    out += " mu=" + std::to_string(verdict.mu);
    out += " alpha=" + std::to_string(verdict.alpha);
    out += " max_intersecting=" + std::to_string(verdict.max_intersecting);
    out += " max_star=" + std::to_string(verdict.max_star);
    out += " is_t_ekr=" + bool_word(verdict.is_t_ekr);
    out += " in_range=" + bool_word(verdict.in_conjecture_range);
    return out;
}

nlohmann::ordered_json verdict_json(const EkrVerdict& verdict, const std::string& tree_source) {
    nlohmann::ordered_json j;
    j["tree_source"] = tree_source;
    j["t"] = verdict.t;
    j["mu"] = verdict.mu;
    j["alpha"] = verdict.alpha;
    j["max_intersecting"] = verdict.max_intersecting;
    nlohmann::ordered_json witness = nlohmann::ordered_json::array();
    for (const VertexSet& s : verdict.witness) witness.push_back(ids_json(s));
    j["witness"] = std::move(witness);
    j["max_star"] = verdict.max_star;
    j["argmax_vertices"] = verdict.argmax_vertices;
    j["is_t_ekr"] = verdict.is_t_ekr;
    j["in_conjecture_range"] = verdict.in_conjecture_range;
    return j;
}

std::string scan_entry_line(const ScanEntry& entry, const std::string& instance_label) {
    if (entry.budget_exceeded)
        return "BUDGET " + instance_label + " t=" + std::to_string(entry.t) +
               " note=" + entry.note;
    const EkrVerdict& v = *entry.verdict;
    // REPORTABLE is reserved for conjecture-range failures; outside the range a
    // non-EKR verdict is expected behaviour, not a finding.
    std::string status = v.is_t_ekr ? "OK" : (v.in_conjecture_range ? "REPORTABLE" : "NOT_EKR");
    return status + " " + verdict_line(v, instance_label);
}

nlohmann::ordered_json scan_entry_json(const ScanEntry& entry, const std::string& tree_source) {
    nlohmann::ordered_json j;
    j["tree_source"] = tree_source;
    j["t"] = entry.t;
    if (entry.budget_exceeded) {
        j["status"] = "budget_exceeded";
        j["note"] = entry.note;
    } else {
        j["status"] = entry.verdict->is_t_ekr
                          ? "ok"
                          : (entry.verdict->in_conjecture_range ? "reportable" : "not_ekr");
        j["verdict"] = verdict_json(*entry.verdict, tree_source);
    }
    return j;
}

} // namespace spt
