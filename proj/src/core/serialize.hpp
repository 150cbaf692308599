#ifndef SPT_SERIALIZE_HPP
#define SPT_SERIALIZE_HPP

#include <string>

#include "json.hpp"

#include "core/ekr.hpp"
#include "core/enumeration.hpp"
#include "core/injections.hpp"
#include "core/spider.hpp"

namespace spt {

// "v0" for the head, "v2,1" for v_{2,1}.
std::string coord_label(const Spider& s, uint32_t v);

// TSV table: a "# t=.. total=.." comment, a vertex/coord/count header, one
// row per vertex in id order. coord is "-" when no spider structure is given.
std::string star_table_tsv(const StarTable& table, const Spider* s);
nlohmann::ordered_json star_table_json(const StarTable& table, const Spider* s);

// "PASS theorem=1 spider=3,2 t=2 i=1 j=1 domain=3 image=3 violations=0"
std::string report_line(const InjectionReport& report);
nlohmann::ordered_json report_json(const InjectionReport& report);

// instance_label identifies the input, e.g. "spider=2,1" or "tree=twigs.txt".
std::string verdict_line(const EkrVerdict& verdict, const std::string& instance_label);
nlohmann::ordered_json verdict_json(const EkrVerdict& verdict, const std::string& tree_source);

// "OK"/"REPORTABLE"/"NOT_EKR"/"BUDGET" line for one scan entry.
std::string scan_entry_line(const ScanEntry& entry, const std::string& instance_label);
nlohmann::ordered_json scan_entry_json(const ScanEntry& entry, const std::string& tree_source);

} // namespace spt

#endif // SPT_SERIALIZE_HPP
