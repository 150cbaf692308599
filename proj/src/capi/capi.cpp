#include "spidertrees/spidertrees.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "core/catalog.hpp"
#include "core/ekr.hpp"
#include "core/enumeration.hpp"
#include "core/errors.hpp"
#include "core/injections.hpp"
#include "core/serialize.hpp"
#include "core/spider.hpp"
#include "core/tree.hpp"

struct st_spider {
    spt::Spider value;
};
struct st_tree {
    spt::Tree value;
};
struct st_star_table {
    spt::StarTable value;
};
struct st_report_list {
    std::vector<spt::InjectionReport> value;
};
struct st_ekr_verdict {
    spt::EkrVerdict value;
};
struct st_scan_list {
    std::vector<spt::ScanEntry> value;
};
struct st_catalog {
    std::vector<std::string> descriptors;
};

namespace {

thread_local std::string g_last_error;

st_status code_of(spt::ErrorCode code) {
    switch (code) {
        case spt::ErrorCode::invalid_argument: return ST_ERROR_INVALID_ARGUMENT;
        case spt::ErrorCode::io_error: return ST_ERROR_IO;
        case spt::ErrorCode::overflow: return ST_ERROR_OVERFLOW;
        case spt::ErrorCode::budget_exceeded: return ST_ERROR_BUDGET_EXCEEDED;
        case spt::ErrorCode::impossible_case: return ST_ERROR_IMPOSSIBLE_CASE;
        case spt::ErrorCode::internal_assertion: return ST_ERROR_INTERNAL;
    }
    return ST_ERROR_INTERNAL;
}

template <typename F>
st_status guarded(F&& body) {
    try {
        g_last_error.clear();
        body();
        return ST_OK;
    } catch (const spt::Error& e) {
        g_last_error = e.what();
        return code_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ST_ERROR_INTERNAL;
    }
}

st_status invalid(const char* message) {
    g_last_error = message;
    return ST_ERROR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

spt::SearchBudget make_budget(uint64_t family, uint64_t nodes) {
    spt::SearchBudget budget;
    if (family) budget.max_family = family;
    if (nodes) budget.max_nodes = nodes;
    return budget;
}

st_scan_status status_of(const spt::ScanEntry& entry) {
    if (entry.budget_exceeded) return ST_SCAN_BUDGET;
    if (entry.verdict->is_t_ekr) return ST_SCAN_OK;
    return entry.verdict->in_conjecture_range ? ST_SCAN_REPORTABLE : ST_SCAN_NOT_EKR;
}

bool report_index_ok(const st_report_list* list, size_t index) {
    return index < list->value.size();
}

} // namespace

extern "C" {

const char* st_last_error_message(void) { return g_last_error.c_str(); }

void st_string_free(char* s) { std::free(s); }

/* ---------------- spiders ---------------- */

st_status st_spider_from_descriptor(const char* descriptor, st_spider** out) {
    if (!descriptor || !out) return invalid("descriptor and out must be non-null");
    *out = nullptr;
    return guarded([&] { *out = new st_spider{spt::Spider::from_descriptor(descriptor)}; });
}

st_status st_spider_from_legs(const uint32_t* legs, size_t leg_count, st_spider** out) {
    if (!legs || !out) return invalid("legs and out must be non-null");
    *out = nullptr;
    return guarded([&] {
        *out = new st_spider{spt::Spider::make(std::vector<uint32_t>(legs, legs + leg_count))};
    });
}

void st_spider_free(st_spider* s) { delete s; }

st_status st_spider_descriptor(const st_spider* s, char** out) {
    if (!s || !out) return invalid("spider and out must be non-null");
    *out = nullptr;
    return guarded([&] { *out = dup_string(s->value.descriptor()); });
}

st_status st_spider_leg_count(const st_spider* s, uint32_t* out) {
    if (!s || !out) return invalid("spider and out must be non-null");
    return guarded([&] { *out = s->value.leg_count(); });
}

st_status st_spider_leg_length(const st_spider* s, uint32_t leg, uint32_t* out) {
    if (!s || !out) return invalid("spider and out must be non-null");
    return guarded([&] { *out = s->value.leg_length(leg); });
}

st_status st_spider_vertex_count(const st_spider* s, uint32_t* out) {
    if (!s || !out) return invalid("spider and out must be non-null");
    return guarded([&] { *out = s->value.n(); });
}

st_status st_spider_vertex_id(const st_spider* s, uint32_t leg, uint32_t height, uint32_t* out) {
    if (!s || !out) return invalid("spider and out must be non-null");
    return guarded([&] { *out = s->value.vertex_id({leg, height}); });
}

st_status st_spider_coordinate_of(const st_spider* s, uint32_t vertex, uint32_t* leg,
                                  uint32_t* height) {
    if (!s || !leg || !height) return invalid("spider, leg and height must be non-null");
    return guarded([&] {
        spt::Coordinate c = s->value.coordinate_of(vertex);
        *leg = c.leg;
        *height = c.height;
    });
}

st_status st_spider_ordered(const st_spider* s, st_spider** out) {
    if (!s || !out) return invalid("spider and out must be non-null");
    *out = nullptr;
    return guarded([&] { *out = new st_spider{s->value.ordered()}; });
}

st_status st_spider_in_spider_order(const st_spider* s, int* out) {
    if (!s || !out) return invalid("spider and out must be non-null");
    return guarded([&] { *out = s->value.in_spider_order() ? 1 : 0; });
}

st_status st_spider_order_descriptor(const char* descriptor, char** out) {
    if (!descriptor || !out) return invalid("descriptor and out must be non-null");
    *out = nullptr;
    return guarded([&] {
        *out = dup_string(spt::format_descriptor(spt::spider_order(spt::parse_descriptor(descriptor))));
    });
}

st_status st_spider_tree(const st_spider* s, st_tree** out) {
    if (!s || !out) return invalid("spider and out must be non-null");
    *out = nullptr;
    return guarded([&] { *out = new st_tree{s->value.tree()}; });
}

/* ---------------- trees ---------------- */

st_status st_tree_from_file(const char* path, st_tree** out) {
    if (!path || !out) return invalid("path and out must be non-null");
    *out = nullptr;
    return guarded([&] { *out = new st_tree{spt::Tree::load(path)}; });
}

st_status st_tree_from_edges(uint32_t n, const uint32_t* endpoints, size_t edge_count,
                             st_tree** out) {
    if (!out || (edge_count > 0 && !endpoints))
        return invalid("endpoints and out must be non-null");
    *out = nullptr;
    return guarded([&] {
        std::vector<std::pair<uint32_t, uint32_t>> edges;
        edges.reserve(edge_count);
        for (size_t e = 0; e < edge_count; ++e)
            edges.emplace_back(endpoints[2 * e], endpoints[2 * e + 1]);
        *out = new st_tree{spt::Tree::from_edges(n, edges)};
    });
}

void st_tree_free(st_tree* t) { delete t; }

st_status st_tree_vertex_count(const st_tree* t, uint32_t* out) {
    if (!t || !out) return invalid("tree and out must be non-null");
    return guarded([&] { *out = t->value.n(); });
}

st_status st_tree_alpha(const st_tree* t, uint32_t* out) {
    if (!t || !out) return invalid("tree and out must be non-null");
    return guarded([&] { *out = spt::alpha(t->value); });
}

st_status st_tree_mu(const st_tree* t, uint32_t* out) {
    if (!t || !out) return invalid("tree and out must be non-null");
    return guarded([&] { *out = spt::mu(t->value); });
}

st_status st_tree_is_independent(const st_tree* t, const uint32_t* vertices, size_t count,
                                 int* out) {
    if (!t || !out || (count > 0 && !vertices))
        return invalid("tree, vertices and out must be non-null");
    return guarded([&] {
        spt::VertexSet s(t->value.n());
        for (size_t p = 0; p < count; ++p) s.set(vertices[p]);
        *out = t->value.is_independent(s) ? 1 : 0;
    });
}

/* ---------------- star tables ---------------- */

st_status st_star_table_compute(const st_tree* t, uint32_t set_size, st_star_table** out) {
    if (!t || !out) return invalid("tree and out must be non-null");
    *out = nullptr;
    return guarded([&] { *out = new st_star_table{spt::star_sizes(t->value, set_size)}; });
}

void st_star_table_free(st_star_table* table) { delete table; }

st_status st_star_table_t(const st_star_table* table, uint32_t* out) {
    if (!table || !out) return invalid("table and out must be non-null");
    return guarded([&] { *out = table->value.t; });
}

st_status st_star_table_total(const st_star_table* table, uint64_t* out) {
    if (!table || !out) return invalid("table and out must be non-null");
    return guarded([&] { *out = table->value.total; });
}

st_status st_star_table_count(const st_star_table* table, uint32_t vertex, uint64_t* out) {
    if (!table || !out) return invalid("table and out must be non-null");
    return guarded([&] {
        if (vertex >= table->value.counts.size())
            spt::fail(spt::ErrorCode::invalid_argument,
                      "vertex out of range: " + std::to_string(vertex));
        *out = table->value.counts[vertex];
    });
}

st_status st_star_table_render(const st_star_table* table, const st_spider* spider,
                               st_format format, char** out) {
    if (!table || !out) return invalid("table and out must be non-null");
    *out = nullptr;
    return guarded([&] {
        const spt::Spider* s = spider ? &spider->value : nullptr;
        if (s && table->value.counts.size() != s->n())
            spt::fail(spt::ErrorCode::invalid_argument,
                      "table and spider have different vertex counts");
        if (format == ST_FORMAT_TSV)
            *out = dup_string(spt::star_table_tsv(table->value, s));
        else if (format == ST_FORMAT_JSON)
            *out = dup_string(spt::star_table_json(table->value, s).dump(2));
        else
            spt::fail(spt::ErrorCode::invalid_argument, "unknown render format");
    });
}

/* ---------------- theorem verification ---------------- */

st_status st_verify_theorems(const st_spider* s, int theorem, uint32_t t_lo, uint32_t t_hi,
                             st_report_list** out) {
    if (!s || !out) return invalid("spider and out must be non-null");
    if (theorem < 0 || theorem > 3) return invalid("theorem must be 0 (all), 1, 2 or 3");
    if (t_lo < 1 || t_lo > t_hi) return invalid("need 1 <= t_lo <= t_hi");
    *out = nullptr;
    return guarded([&] {
        auto list = new st_report_list{};
        auto append = [&](std::vector<spt::InjectionReport> reports) {
            for (auto& r : reports) list->value.push_back(std::move(r));
        };
        if (theorem == 0 || theorem == 1)
            for (uint32_t t = t_lo; t <= t_hi; ++t) append(spt::verify_theorem_1(s->value, t));
        if (theorem == 0 || theorem == 2)
            for (uint32_t t = t_lo; t <= t_hi; ++t) append(spt::verify_theorem_2(s->value, t));
        if (theorem == 0 || theorem == 3) {
            spt::Spider ordered =
                s->value.in_spider_order() ? s->value : s->value.ordered();
            for (uint32_t t = t_lo; t <= t_hi; ++t) append(spt::verify_theorem_3(ordered, t));
        }
        *out = list;
    });
}

void st_report_list_free(st_report_list* list) { delete list; }

st_status st_report_list_size(const st_report_list* list, size_t* out) {
    if (!list || !out) return invalid("list and out must be non-null");
    return guarded([&] { *out = list->value.size(); });
}

st_status st_report_list_verified(const st_report_list* list, size_t index, int* out) {
    if (!list || !out) return invalid("list and out must be non-null");
    if (!report_index_ok(list, index)) return invalid("report index out of range");
    return guarded([&] { *out = list->value[index].verified() ? 1 : 0; });
}

st_status st_report_list_line(const st_report_list* list, size_t index, char** out) {
    if (!list || !out) return invalid("list and out must be non-null");
    if (!report_index_ok(list, index)) return invalid("report index out of range");
    *out = nullptr;
    return guarded([&] { *out = dup_string(spt::report_line(list->value[index])); });
}

st_status st_report_list_json(const st_report_list* list, char** out) {
    if (!list || !out) return invalid("list and out must be non-null");
    *out = nullptr;
    return guarded([&] {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& report : list->value) arr.push_back(spt::report_json(report));
        *out = dup_string(arr.dump(2));
    });
}

/* ---------------- EKR ---------------- */

st_status st_ekr_check(const st_tree* t, uint32_t set_size, uint64_t budget_family,
                       uint64_t budget_nodes, st_ekr_verdict** out) {
    if (!t || !out) return invalid("tree and out must be non-null");
    *out = nullptr;
    return guarded([&] {
        *out = new st_ekr_verdict{
            spt::ekr_check(t->value, set_size, make_budget(budget_family, budget_nodes))};
    });
}

void st_ekr_verdict_free(st_ekr_verdict* v) { delete v; }

st_status st_ekr_verdict_is_t_ekr(const st_ekr_verdict* v, int* out) {
    if (!v || !out) return invalid("verdict and out must be non-null");
    return guarded([&] { *out = v->value.is_t_ekr ? 1 : 0; });
}

st_status st_ekr_verdict_in_range(const st_ekr_verdict* v, int* out) {
    if (!v || !out) return invalid("verdict and out must be non-null");
    return guarded([&] { *out = v->value.in_conjecture_range ? 1 : 0; });
}

st_status st_ekr_verdict_line(const st_ekr_verdict* v, const char* instance_label, char** out) {
    if (!v || !instance_label || !out)
        return invalid("verdict, instance_label and out must be non-null");
    *out = nullptr;
    return guarded([&] { *out = dup_string(spt::verdict_line(v->value, instance_label)); });
}

st_status st_ekr_verdict_json(const st_ekr_verdict* v, const char* tree_source, char** out) {
    if (!v || !tree_source || !out)
        return invalid("verdict, tree_source and out must be non-null");
    *out = nullptr;
    return guarded([&] { *out = dup_string(spt::verdict_json(v->value, tree_source).dump(2)); });
}

st_status st_ekr_range_scan(const st_tree* t, uint64_t budget_family, uint64_t budget_nodes,
                            st_scan_list** out) {
    if (!t || !out) return invalid("tree and out must be non-null");
    *out = nullptr;
    return guarded([&] {
        *out = new st_scan_list{
            spt::holroyd_talbot_scan(t->value, make_budget(budget_family, budget_nodes))};
    });
}

st_status st_ekr_over_range(const st_tree* t, uint32_t t_lo, uint32_t t_hi,
                            uint64_t budget_family, uint64_t budget_nodes, st_scan_list** out) {
    if (!t || !out) return invalid("tree and out must be non-null");
    *out = nullptr;
    return guarded([&] {
        *out = new st_scan_list{
            spt::ekr_over_range(t->value, t_lo, t_hi, make_budget(budget_family, budget_nodes))};
    });
}

void st_scan_list_free(st_scan_list* list) { delete list; }

st_status st_scan_list_size(const st_scan_list* list, size_t* out) {
    if (!list || !out) return invalid("list and out must be non-null");
    return guarded([&] { *out = list->value.size(); });
}

st_status st_scan_list_status(const st_scan_list* list, size_t index, int* out) {
    if (!list || !out) return invalid("list and out must be non-null");
    if (index >= list->value.size()) return invalid("scan index out of range");
    return guarded([&] { *out = status_of(list->value[index]); });
}

st_status st_scan_list_line(const st_scan_list* list, size_t index, const char* instance_label,
                            char** out) {
    if (!list || !instance_label || !out)
        return invalid("list, instance_label and out must be non-null");
    if (index >= list->value.size()) return invalid("scan index out of range");
    *out = nullptr;
    return guarded(
        [&] { *out = dup_string(spt::scan_entry_line(list->value[index], instance_label)); });
}

st_status st_scan_list_json(const st_scan_list* list, size_t index, const char* tree_source,
                            char** out) {
    if (!list || !tree_source || !out)
        return invalid("list, tree_source and out must be non-null");
    if (index >= list->value.size()) return invalid("scan index out of range");
    *out = nullptr;
    return guarded(
        [&] { *out = dup_string(spt::scan_entry_json(list->value[index], tree_source).dump()); });
}

/* ---------------- centers ---------------- */

st_status st_best_center(const st_tree* t, uint32_t set_size, uint64_t* max_star,
                         uint32_t** argmax, size_t* argmax_count, int* any_leaf) {
    if (!t || !max_star || !argmax || !argmax_count || !any_leaf)
        return invalid("all out parameters must be non-null");
    *argmax = nullptr;
    *argmax_count = 0;
    return guarded([&] {
        spt::CenterReport report = spt::best_center_report(t->value, set_size);
        *max_star = report.max_star;
        *any_leaf = report.any_leaf ? 1 : 0;
        if (!report.argmax_vertices.empty()) {
            auto* ids = static_cast<uint32_t*>(
                std::malloc(report.argmax_vertices.size() * sizeof(uint32_t)));
            if (!ids) throw std::bad_alloc();
            std::memcpy(ids, report.argmax_vertices.data(),
                        report.argmax_vertices.size() * sizeof(uint32_t));
            *argmax = ids;
            *argmax_count = report.argmax_vertices.size();
        }
    });
}

void st_ids_free(uint32_t* ids) { std::free(ids); }

/* ---------------- catalog ---------------- */

st_status st_catalog_create(uint32_t max_n, st_catalog** out) {
    if (!out) return invalid("out must be non-null");
    *out = nullptr;
    return guarded([&] {
        auto* c = new st_catalog{};
        for (const auto& legs : spt::spider_catalog(max_n))
            c->descriptors.push_back(spt::format_descriptor(legs));
        *out = c;
    });
}

void st_catalog_free(st_catalog* c) { delete c; }

st_status st_catalog_size(const st_catalog* c, size_t* out) {
    if (!c || !out) return invalid("catalog and out must be non-null");
    return guarded([&] { *out = c->descriptors.size(); });
}

st_status st_catalog_descriptor(const st_catalog* c, size_t index, char** out) {
    if (!c || !out) return invalid("catalog and out must be non-null");
    if (index >= c->descriptors.size()) return invalid("catalog index out of range");
    *out = nullptr;
    return guarded([&] { *out = dup_string(c->descriptors[index]); });
}

} /* extern "C" */
