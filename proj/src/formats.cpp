#include "maxdet/formats.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "maxdet/errors.hpp"
#include "maxdet/exact_linalg.hpp"

namespace maxdet {

namespace {

using ordered_json = nlohmann::ordered_json;

void validate_record(const RunRecord& rec, const char* origin) {
    BinaryMatrix m = BinaryMatrix::from_rows(rec.rows);
    if (m.size() != rec.n)
        throw InputError(std::string(origin) + ": row count does not match n");
    if (det_bareiss(m) != rec.det)
        throw InputError(std::string(origin) + ": determinant does not match matrix");
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace

RecordFormat record_format_from_name(const std::string& name) {
    if (name == "jsonl") return RecordFormat::kJsonl;
    if (name == "csv") return RecordFormat::kCsv;
    if (name == "paper") return RecordFormat::kPaper;
    throw InputError("unknown format '" + name + "' (expected jsonl, csv, or paper)");
}

std::string record_format_name(RecordFormat fmt) {
    switch (fmt) {
        case RecordFormat::kJsonl: return "jsonl";
        case RecordFormat::kCsv: return "csv";
        case RecordFormat::kPaper: return "paper";
    }
    return "jsonl";
}

RunRecord make_run_record(const GrowthNode& node, const std::string& policy) {
    return {node.depth(), node.det,       node.matrix.row_strings(),
            policy,       node.tie_count, std::chrono::system_clock::now()};
}

std::string to_jsonl(const RunRecord& rec) {
    ordered_json j;
    j["n"] = rec.n;
    j["det"] = rec.det;
    j["rows"] = rec.rows;
    j["policy"] = rec.policy;
    j["tie_count"] = rec.tie_count;
    return j.dump();
}

RunRecord run_record_from_jsonl(const std::string& line) {
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const ordered_json::parse_error& e) {
        throw InputError(std::string("bad jsonl record: ") + e.what());
    }
    RunRecord rec;
    try {
        rec.n = j.at("n").get<int>();
        rec.det = j.at("det").get<std::int64_t>();
        rec.rows = j.at("rows").get<std::vector<std::string>>();
        rec.policy = j.at("policy").get<std::string>();
        rec.tie_count = j.at("tie_count").get<std::int64_t>();
    } catch (const ordered_json::exception& e) {
        throw InputError(std::string("bad jsonl record: ") + e.what());
    }
    validate_record(rec, "jsonl");
    return rec;
}

std::string to_paper_block(const RunRecord& rec) {
    std::string out = std::to_string(rec.n) + " " + std::to_string(rec.det) + "\n";
    for (const std::string& row : rec.rows) {
        out += row;
        out += '\n';
    }
    return out;
}

std::vector<RunRecord> run_records_from_paper(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    std::vector<RunRecord> records;
    std::size_t i = 0;
    while (i < lines.size()) {
        if (is_blank(lines[i])) {
            ++i;
            continue;
        }
        std::istringstream header(lines[i]);
        int n = 0;
        std::int64_t det = 0;
        if (!(header >> n >> det) || n < 1)
            throw InputError("bad block header '" + lines[i] + "' (expected \"n det\")");
        std::string trailing;
        if (header >> trailing) throw InputError("bad block header '" + lines[i] + "'");
        ++i;
        RunRecord rec;
        rec.n = n;
        rec.det = det;
        for (int r = 0; r < n; ++r, ++i) {
            if (i >= lines.size() || is_blank(lines[i]))
                throw InputError("block truncated: expected " + std::to_string(n) + " rows");
            rec.rows.push_back(lines[i]);
        }
        validate_record(rec, "paper block");
        records.push_back(std::move(rec));
    }
    return records;
}

std::string csv_header() { return "n,det"; }

std::string to_csv_row(const RunRecord& rec) {
    return std::to_string(rec.n) + "," + std::to_string(rec.det);
}

void write_records(std::ostream& os, const std::vector<RunRecord>& records, RecordFormat fmt) {
    switch (fmt) {
        case RecordFormat::kJsonl:
            for (const RunRecord& rec : records) os << to_jsonl(rec) << '\n';
            break;
        case RecordFormat::kCsv:
            os << csv_header() << '\n';
            for (const RunRecord& rec : records) os << to_csv_row(rec) << '\n';
            break;
        case RecordFormat::kPaper:
            for (const RunRecord& rec : records) os << to_paper_block(rec) << '\n';
            break;
    }
}

BinaryMatrix parse_matrix_text(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    std::vector<std::string> body;
    for (const std::string& line : lines)
        if (!is_blank(line)) body.push_back(line);
    if (body.empty()) throw InputError("matrix input is empty");

    if (body.front().find_first_of(" \t") != std::string::npos) {
        // Header form: the remaining lines after "n det" are the rows.
        std::vector<RunRecord> records = run_records_from_paper(text);
        if (records.empty()) throw InputError("matrix input is empty");
        return BinaryMatrix::from_rows(records.front().rows);
    }
    return BinaryMatrix::from_rows(body);
}

BinaryMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open matrix file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_matrix_text(buf.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::vector<std::string> witness_rows(const OracleReport& report) {
    std::vector<std::string> rows;
    const int n = report.witness.size();
    rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::string row(static_cast<std::size_t>(n), '?');
        for (int j = 0; j < n; ++j) {
            const std::int64_t v = report.witness.at(i, j);
            row[j] = report.alphabet == EntryAlphabet::kZeroOne ? static_cast<char>('0' + v)
                                                                : (v > 0 ? '+' : '-');
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string to_jsonl(const OracleReport& report) {
    ordered_json j;
    j["op"] = report.alphabet == EntryAlphabet::kZeroOne ? "dn" : "mn";
    j["n"] = report.n;
    j["value"] = report.value;
    j["witness"] = witness_rows(report);
    j["search_space"] = report.search_space;
    if (report.alphabet == EntryAlphabet::kPlusMinus) j["normalized"] = report.normalized;
    return j.dump();
}

std::string to_text(const OracleReport& report) {
    std::string out = report.alphabet == EntryAlphabet::kZeroOne ? "dn" : "mn";
    out += " n=" + std::to_string(report.n) + " value=" + std::to_string(report.value);
    out += " witness=";
    const std::vector<std::string> rows = witness_rows(report);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ',';
        out += rows[i];
    }
    out += " search_space=" + std::to_string(report.search_space);
    if (report.alphabet == EntryAlphabet::kPlusMinus)
        out += report.normalized ? " normalized=true" : " normalized=false";
    return out;
}

std::string to_jsonl(const RelationReport& report) {
    ordered_json j;
    j["op"] = "relation";
    j["n"] = report.n;
    j["m_value"] = report.m_value;
    j["d_value"] = report.d_value;
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["holds"] = report.holds;
    return j.dump();
}

std::string to_text(const RelationReport& report) {
    return "relation n=" + std::to_string(report.n) + (report.holds ? " holds: " : " FAILS: ") +
           std::to_string(report.lhs) + " vs 2^" + std::to_string(report.n - 1) + " * " +
           std::to_string(report.d_value) + " = " + std::to_string(report.rhs);
}

}  // namespace maxdet
