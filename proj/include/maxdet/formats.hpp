#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "maxdet/growth.hpp"
#include "maxdet/matrix.hpp"
#include "maxdet/oracle.hpp"

namespace maxdet {

// Wire formats. Serialized output never contains wall-clock values, so runs
// with identical flags are byte-identical.
//
//   jsonl  one record per line:
//          {"n":3,"det":2,"rows":["101","110","011"],"policy":"first","tie_count":1}
//   csv    header "n,det"; one row per record; no matrices
//   paper  plain text block: line 1 "n det", then n rows of n characters in
//          {0,1}; blocks separated by a blank line

enum class RecordFormat { kJsonl, kCsv, kPaper };

// Flag-string mapping: "jsonl" | "csv" | "paper".
RecordFormat record_format_from_name(const std::string& name);
std::string record_format_name(RecordFormat fmt);

struct RunRecord {
    int n = 0;
    std::int64_t det = 0;
    std::vector<std::string> rows;  // '0'/'1' strings
    std::string policy;
    std::int64_t tie_count = 1;
    std::chrono::system_clock::time_point timestamp;  // in-memory only
};

RunRecord make_run_record(const GrowthNode& node, const std::string& policy);

std::string to_jsonl(const RunRecord& rec);                 // single line, no newline
RunRecord run_record_from_jsonl(const std::string& line);   // validates det

std::string to_paper_block(const RunRecord& rec);           // "n det\nrows...\n"
std::vector<RunRecord> run_records_from_paper(const std::string& text);

std::string csv_header();                                   // "n,det"
std::string to_csv_row(const RunRecord& rec);

// Streams records in the chosen format (csv includes its header).
void write_records(std::ostream& os, const std::vector<RunRecord>& records, RecordFormat fmt);

// Matrix input for --from PATH: either a paper-style block (first non-blank
// line contains whitespace: "n det" header, then n rows) or bare row lines.
BinaryMatrix parse_matrix_file(const std::string& path);
BinaryMatrix parse_matrix_text(const std::string& text);

// Oracle records. Witness rows use '0'/'1' for the 0/1 alphabet and '+'/'-'
// for the +-1 alphabet. elapsed is deliberately absent.
std::string to_jsonl(const OracleReport& report);
std::string to_text(const OracleReport& report);
std::string to_jsonl(const RelationReport& report);
std::string to_text(const RelationReport& report);

std::vector<std::string> witness_rows(const OracleReport& report);

}  // namespace maxdet
