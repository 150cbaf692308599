// Command-line front end. Everything goes through the public C API; no core
// headers are included here.

#include "spidertrees/spidertrees.h"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace {

int exit_code_for(st_status status) {
    switch (status) {
        case ST_OK:
            return 0;
        case ST_ERROR_INVALID_ARGUMENT:
        case ST_ERROR_IO:
            return 2;
        case ST_ERROR_OVERFLOW:
        case ST_ERROR_BUDGET_EXCEEDED:
            return 3;
        default:
            return 1; // impossible-case / internal: the machinery itself failed
    }
}

[[noreturn]] void die(st_status status) {
    std::cerr << "error: " << st_last_error_message() << "\n";
    std::exit(exit_code_for(status));
}

[[noreturn]] void die_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(2);
}

void check(st_status status) {
    if (status != ST_OK) die(status);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    st_string_free(s);
    return out;
}

struct SpiderFree {
    void operator()(st_spider* p) const { st_spider_free(p); }
};
struct TreeFree {
    void operator()(st_tree* p) const { st_tree_free(p); }
};
struct TableFree {
    void operator()(st_star_table* p) const { st_star_table_free(p); }
};
struct ReportsFree {
    void operator()(st_report_list* p) const { st_report_list_free(p); }
};
struct ScanFree {
    void operator()(st_scan_list* p) const { st_scan_list_free(p); }
};
struct CatalogFree {
    void operator()(st_catalog* p) const { st_catalog_free(p); }
};

using SpiderPtr = std::unique_ptr<st_spider, SpiderFree>;
using TreePtr = std::unique_ptr<st_tree, TreeFree>;
using TablePtr = std::unique_ptr<st_star_table, TableFree>;
using ReportsPtr = std::unique_ptr<st_report_list, ReportsFree>;
using ScanPtr = std::unique_ptr<st_scan_list, ScanFree>;
using CatalogPtr = std::unique_ptr<st_catalog, CatalogFree>;

SpiderPtr make_spider(const std::string& descriptor) {
    st_spider* raw = nullptr;
    check(st_spider_from_descriptor(descriptor.c_str(), &raw));
    return SpiderPtr(raw);
}

TreePtr tree_of(const st_spider* spider) {
    st_tree* raw = nullptr;
    check(st_spider_tree(spider, &raw));
    return TreePtr(raw);
}

TreePtr load_tree(const std::string& path) {
    st_tree* raw = nullptr;
    check(st_tree_from_file(path.c_str(), &raw));
    return TreePtr(raw);
}

// One resolved input source. `source` is the normalized descriptor or the
// file path; `label` prefixes verdict lines.
struct Input {
    SpiderPtr spider; // null when the input was a tree file
    TreePtr tree;
    std::string source;
    std::string label;
};

Input resolve_input(bool spider_given, const std::string& descriptor, bool tree_given,
                    const std::string& tree_path) {
    if (spider_given == tree_given) die_usage("give exactly one of --spider and --tree");
    Input in;
    if (spider_given) {
        in.spider = make_spider(descriptor);
        char* d = nullptr;
        check(st_spider_descriptor(in.spider.get(), &d));
        in.source = take_string(d);
        in.label = "spider=" + in.source;
        in.tree = tree_of(in.spider.get());
    } else {
        in.tree = load_tree(tree_path);
        in.source = tree_path;
        in.label = "tree=" + tree_path;
    }
    return in;
}

struct TRange {
    uint32_t lo = 0;
    uint32_t hi = 0;
};

bool parse_u32(std::string_view text, uint32_t& value) {
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc() && ptr == last;
}

TRange parse_t_range(const std::string& text) {
    TRange r;
    bool ok = false;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        ok = parse_u32(text, r.lo);
        r.hi = r.lo;
    } else {
        ok = parse_u32(std::string_view(text).substr(0, dots), r.lo) &&
             parse_u32(std::string_view(text).substr(dots + 2), r.hi);
    }
    if (!ok || r.lo < 1 || r.hi < r.lo)
        die_usage("invalid t value '" + text + "' (use N or A..B with 1 <= A <= B)");
    return r;
}

void emit(std::string text, const std::string& out_path) {
    if (!text.empty() && text.back() != '\n') text += '\n';
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) die_usage("cannot open output file '" + out_path + "'");
    file << text;
    file.flush();
    if (!file) die_usage("failed writing output file '" + out_path + "'");
}

struct VerdictCounts {
    size_t verdicts = 0;
    size_t ok = 0;
    size_t not_ekr = 0;
    size_t reportable = 0;
    size_t budget_exceeded = 0;
};

// Renders one scan list into `text` (lines or JSONL) and tallies statuses.
// Returns ST_OK or the first API failure; never exits, so it is safe to call
// from scan worker threads.
st_status append_verdicts(const st_scan_list* scan, const std::string& label,
                          const std::string& source, st_format format, std::string& text,
                          VerdictCounts& counts) {
    size_t n = 0;
    st_status status = st_scan_list_size(scan, &n);
    if (status != ST_OK) return status;
    for (size_t i = 0; i < n; ++i) {
        int entry_status = 0;
        status = st_scan_list_status(scan, i, &entry_status);
        if (status != ST_OK) return status;
        ++counts.verdicts;
        switch (entry_status) {
            case ST_SCAN_OK:
                ++counts.ok;
                break;
            case ST_SCAN_REPORTABLE:
                ++counts.reportable;
                break;
            case ST_SCAN_NOT_EKR:
                ++counts.not_ekr;
                break;
            default:
                ++counts.budget_exceeded;
                break;
        }
        char* rendered = nullptr;
        if (format == ST_FORMAT_TSV)
            status = st_scan_list_line(scan, i, label.c_str(), &rendered);
        else
            status = st_scan_list_json(scan, i, source.c_str(), &rendered);
        if (status != ST_OK) return status;
        text += take_string(rendered);
        text += '\n';
    }
    return ST_OK;
}

std::string footer(size_t instances, const VerdictCounts& c) {
    return "# instances=" + std::to_string(instances) + " verdicts=" + std::to_string(c.verdicts) +
           " ok=" + std::to_string(c.ok) + " not_ekr=" + std::to_string(c.not_ekr) +
           " reportable=" + std::to_string(c.reportable) +
           " budget_exceeded=" + std::to_string(c.budget_exceeded) + "\n";
}

int run_stars(bool spider_given, const std::string& descriptor, bool tree_given,
              const std::string& tree_path, const std::string& t_text, st_format format,
              const std::string& out_path) {
    TRange range = parse_t_range(t_text);
    if (range.lo != range.hi) die_usage("stars takes a single t, not a range");
    Input in = resolve_input(spider_given, descriptor, tree_given, tree_path);
    st_star_table* raw_table = nullptr;
    check(st_star_table_compute(in.tree.get(), range.lo, &raw_table));
    TablePtr table(raw_table);
    char* rendered = nullptr;
    check(st_star_table_render(table.get(), in.spider.get(), format, &rendered));
    emit(take_string(rendered), out_path);
    return 0;
}

int run_verify(const std::string& descriptor, const std::string& theorem_text,
               const std::string& t_text, st_format format, const std::string& out_path) {
    TRange range = parse_t_range(t_text);
    int theorem = theorem_text == "all" ? 0 : std::stoi(theorem_text);
    SpiderPtr spider = make_spider(descriptor);
    st_report_list* raw_reports = nullptr;
    check(st_verify_theorems(spider.get(), theorem, range.lo, range.hi, &raw_reports));
    ReportsPtr reports(raw_reports);

    size_t count = 0;
    check(st_report_list_size(reports.get(), &count));
    std::string lines;
    size_t verified_count = 0;
    for (size_t i = 0; i < count; ++i) {
        char* line = nullptr;
        check(st_report_list_line(reports.get(), i, &line));
        lines += take_string(line);
        lines += '\n';
        int verified = 0;
        check(st_report_list_verified(reports.get(), i, &verified));
        if (verified) ++verified_count;
    }
    bool all_verified = verified_count == count;
    lines += "# reports=" + std::to_string(count) + " verified=" +
             std::to_string(verified_count) + " violations=" +
             std::to_string(count - verified_count) + '\n';
    std::cout << lines;
    if (!out_path.empty() || format == ST_FORMAT_JSON) {
        char* json = nullptr;
        check(st_report_list_json(reports.get(), &json));
        emit(take_string(json), out_path);
    }
    return all_verified ? 0 : 1;
}

int run_ekr(bool spider_given, const std::string& descriptor, bool tree_given,
            const std::string& tree_path, const std::string& t_text, uint64_t budget_family,
            uint64_t budget_nodes, st_format format, const std::string& out_path) {
    TRange range = parse_t_range(t_text);
    Input in = resolve_input(spider_given, descriptor, tree_given, tree_path);
    st_scan_list* raw_scan = nullptr;
    check(st_ekr_over_range(in.tree.get(), range.lo, range.hi, budget_family, budget_nodes,
                            &raw_scan));
    ScanPtr scan(raw_scan);
    std::string text;
    VerdictCounts counts;
    check(append_verdicts(scan.get(), in.label, in.source, format, text, counts));
    if (format == ST_FORMAT_TSV) text += footer(1, counts);
    emit(std::move(text), out_path);
    return 0;
}

// One scan instance: a catalog descriptor or a tree file.
struct ScanInstance {
    bool is_spider = false;
    std::string source; // descriptor or file path
};

struct ScanResult {
    st_status failed = ST_OK;
    std::string error;
    std::string text;
    VerdictCounts counts;
};

ScanResult scan_one(const ScanInstance& instance, uint64_t budget_family, uint64_t budget_nodes,
                    st_format format) {
    ScanResult result;
    auto record = [&](st_status status) {
        if (status != ST_OK && result.failed == ST_OK) {
            result.failed = status;
            result.error = st_last_error_message();
        }
        return status == ST_OK;
    };

    TreePtr tree;
    std::string label;
    if (instance.is_spider) {
        st_spider* raw_spider = nullptr;
        if (!record(st_spider_from_descriptor(instance.source.c_str(), &raw_spider)))
            return result;
        SpiderPtr spider(raw_spider);
        st_tree* raw_tree = nullptr;
        if (!record(st_spider_tree(spider.get(), &raw_tree))) return result;
        tree.reset(raw_tree);
        label = "spider=" + instance.source;
    } else {
        st_tree* raw_tree = nullptr;
        if (!record(st_tree_from_file(instance.source.c_str(), &raw_tree))) return result;
        tree.reset(raw_tree);
        label = "tree=" + instance.source;
    }

    st_scan_list* raw_scan = nullptr;
    if (!record(st_ekr_range_scan(tree.get(), budget_family, budget_nodes, &raw_scan)))
        return result;
    ScanPtr scan(raw_scan);
    record(append_verdicts(scan.get(), label, instance.source, format, result.text,
                           result.counts));
    return result;
}

int run_scan(bool max_n_given, uint32_t max_n, bool dir_given, const std::string& tree_dir,
             uint64_t budget_family, uint64_t budget_nodes, st_format format,
             const std::string& out_path, uint32_t threads) {
    if (max_n_given == dir_given) die_usage("give exactly one of --max-n and --tree-dir");

    std::vector<ScanInstance> instances;
    if (max_n_given) {
        st_catalog* raw_catalog = nullptr;
        check(st_catalog_create(max_n, &raw_catalog));
        CatalogPtr catalog(raw_catalog);
        size_t count = 0;
        check(st_catalog_size(catalog.get(), &count));
        for (size_t i = 0; i < count; ++i) {
            char* descriptor = nullptr;
            check(st_catalog_descriptor(catalog.get(), i, &descriptor));
            instances.push_back({true, take_string(descriptor)});
        }
    } else {
        std::error_code ec;
        std::filesystem::directory_iterator it(tree_dir, ec);
        if (ec) die_usage("cannot read directory '" + tree_dir + "': " + ec.message());
        std::vector<std::string> paths;
        for (const auto& entry : it)
            if (entry.is_regular_file()) paths.push_back(entry.path().string());
        std::sort(paths.begin(), paths.end());
        for (auto& path : paths) instances.push_back({false, std::move(path)});
    }

    std::vector<ScanResult> results(instances.size());
    size_t workers = std::min<size_t>(threads == 0 ? 1 : threads, instances.size());
    if (workers <= 1) {
        for (size_t i = 0; i < instances.size(); ++i)
            results[i] = scan_one(instances[i], budget_family, budget_nodes, format);
    } else {
        // Results are buffered per instance and emitted in catalog order below,
        // so completion order does not affect the output.
        std::atomic<size_t> next{0};
        auto work = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= instances.size()) return;
                results[i] = scan_one(instances[i], budget_family, budget_nodes, format);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& worker : pool) worker.join();
    }

    std::string text;
    VerdictCounts totals;
    for (const auto& result : results) {
        if (result.failed != ST_OK) {
            std::cerr << "error: " << result.error << "\n";
            return exit_code_for(result.failed);
        }
        text += result.text;
        totals.verdicts += result.counts.verdicts;
        totals.ok += result.counts.ok;
        totals.not_ekr += result.counts.not_ekr;
        totals.reportable += result.counts.reportable;
        totals.budget_exceeded += result.counts.budget_exceeded;
    }
    if (format == ST_FORMAT_TSV) text += footer(instances.size(), totals);
    emit(std::move(text), out_path);
    return 0;
}

int run_order(const std::string& descriptor) {
    char* ordered = nullptr;
    check(st_spider_order_descriptor(descriptor.c_str(), &ordered));
    std::cout << take_string(ordered) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independent-set star counts, injection checks, and EKR scans on spider trees"};
    app.require_subcommand(1);

    std::string descriptor, tree_path, t_text, out_path, tree_dir;
    std::string format_text = "tsv";
    std::string theorem_text = "all";
    uint64_t budget_family = 0;
    uint64_t budget_nodes = 0;
    uint32_t max_n = 0;
    uint32_t threads = 1;

    auto format_option = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_text, "Output format")
            ->check(CLI::IsMember({"tsv", "json"}))
            ->capture_default_str();
    };
    auto out_option = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "Write output to this file instead of stdout");
    };
    auto budget_options = [&](CLI::App* cmd) {
        cmd->add_option("--budget-family", budget_family,
                        "Family-size cap for intersecting-family search (0 = default)");
        cmd->add_option("--budget-nodes", budget_nodes,
                        "Search-node cap for intersecting-family search (0 = default)");
    };

    CLI::App* stars = app.add_subcommand("stars", "Per-vertex star-count table for size-t sets");
    auto* stars_spider = stars->add_option("--spider", descriptor, "Spider descriptor, e.g. 3,1,2");
    auto* stars_tree = stars->add_option("--tree", tree_path, "Tree edge-list file");
    stars_spider->excludes(stars_tree);
    stars->add_option("--t", t_text, "Set size t")->required();
    format_option(stars);
    out_option(stars);

    CLI::App* verify = app.add_subcommand("verify", "Check the star injections over a t range");
    verify->add_option("--spider", descriptor, "Spider descriptor")->required();
    verify->add_option("--theorem", theorem_text, "Which map family to check")
        ->check(CLI::IsMember({"1", "2", "3", "all"}))
        ->capture_default_str();
    verify->add_option("--t", t_text, "Set size t or range A..B")->required();
    format_option(verify);
    out_option(verify);

    CLI::App* ekr = app.add_subcommand("ekr", "Compare max intersecting family against max star");
    auto* ekr_spider = ekr->add_option("--spider", descriptor, "Spider descriptor");
    auto* ekr_tree = ekr->add_option("--tree", tree_path, "Tree edge-list file");
    ekr_spider->excludes(ekr_tree);
    ekr->add_option("--t", t_text, "Set size t or range A..B")->required();
    budget_options(ekr);
    format_option(ekr);
    out_option(ekr);

    CLI::App* scan = app.add_subcommand("scan", "EKR scan over a spider catalog or tree files");
    auto* scan_max = scan->add_option("--max-n", max_n, "All spiders with at most this many vertices");
    auto* scan_dir = scan->add_option("--tree-dir", tree_dir, "Directory of tree edge-list files");
    scan_max->excludes(scan_dir);
    scan->add_option("--threads", threads, "Worker threads")->capture_default_str();
    budget_options(scan);
    format_option(scan);
    out_option(scan);

    CLI::App* order = app.add_subcommand("order", "Print the spider-order normalization of a descriptor");
    order->add_option("--spider", descriptor, "Spider descriptor")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    st_format format = format_text == "json" ? ST_FORMAT_JSON : ST_FORMAT_TSV;
    if (app.got_subcommand(stars))
        return run_stars(stars_spider->count() > 0, descriptor, stars_tree->count() > 0, tree_path,
                         t_text, format, out_path);
    if (app.got_subcommand(verify))
        return run_verify(descriptor, theorem_text, t_text, format, out_path);
    if (app.got_subcommand(ekr))
        return run_ekr(ekr_spider->count() > 0, descriptor, ekr_tree->count() > 0, tree_path,
                       t_text, budget_family, budget_nodes, format, out_path);
    if (app.got_subcommand(scan))
        return run_scan(scan_max->count() > 0, max_n, scan_dir->count() > 0, tree_dir,
                        budget_family, budget_nodes, format, out_path, threads);
    return run_order(descriptor);
}
