// SPDX-License-Identifier: Apache-2.0
#include "verisum/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace verisum {

namespace {

const char* const kCsvHeader = "check,instance,modulus,lhs,rhs,pass";

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\r\n") == std::string::npos) {
        return raw;
    }
    std::string quoted = "\"";
    for (char ch : raw) {
        if (ch == '"') {
            quoted += '"';
        }
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

// Splits one CSV record; the reports written here never embed line breaks.
std::vector<std::string> split_csv_record(const std::string& line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (in_quotes) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            in_quotes = true;
        } else if (ch == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (in_quotes) {
        throw std::invalid_argument("from_csv: unterminated quote on line " +
                                    std::to_string(line_no));
    }
    fields.push_back(std::move(cur));
    return fields;
}

bool parse_bool(const std::string& s, const char* where, std::size_t line_no) {
    if (s == "true") {
        return true;
    }
    if (s == "false") {
        return false;
    }
    throw std::invalid_argument(std::string(where) + ": bad boolean \"" + s + "\" on line " +
                                std::to_string(line_no));
}

}  // namespace

std::string to_json_lines(const std::vector<CheckOutcome>& outcomes) {
    std::string out;
    for (const CheckOutcome& o : outcomes) {
        nlohmann::ordered_json j;
        j["check"] = o.check;
        j["instance"] = o.instance;
        j["modulus"] = o.modulus;
        j["lhs"] = o.lhs;
        j["rhs"] = o.rhs;
        j["pass"] = o.pass;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::vector<CheckOutcome> from_json_lines(const std::string& text) {
    std::vector<CheckOutcome> out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument("from_json_lines: line " + std::to_string(line_no) + ": " +
                                        e.what());
        }
        CheckOutcome o;
        try {
            o.check = j.at("check").get<std::string>();
            o.instance = j.at("instance").get<std::string>();
            o.modulus = j.at("modulus").get<std::string>();
            o.lhs = j.at("lhs").get<std::string>();
            o.rhs = j.at("rhs").get<std::string>();
            o.pass = j.at("pass").get<bool>();
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("from_json_lines: line " + std::to_string(line_no) + ": " +
                                        e.what());
        }
        out.push_back(std::move(o));
    }
    return out;
}

std::string to_csv(const std::vector<CheckOutcome>& outcomes) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const CheckOutcome& o : outcomes) {
        out += csv_field(o.check);
        out += ',';
        out += csv_field(o.instance);
        out += ',';
        out += csv_field(o.modulus);
        out += ',';
        out += csv_field(o.lhs);
        out += ',';
        out += csv_field(o.rhs);
        out += ',';
        out += o.pass ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::vector<CheckOutcome> from_csv(const std::string& text) {
    std::vector<CheckOutcome> out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line_no == 1) {
            if (line != kCsvHeader) {
                throw std::invalid_argument("from_csv: unexpected header \"" + line + "\"");
            }
            continue;
        }
        const std::vector<std::string> fields = split_csv_record(line, line_no);
        if (fields.size() != 6) {
            throw std::invalid_argument("from_csv: expected 6 fields on line " +
                                        std::to_string(line_no) + ", got " +
                                        std::to_string(fields.size()));
        }
        CheckOutcome o;
        o.check = fields[0];
        o.instance = fields[1];
        o.modulus = fields[2];
        o.lhs = fields[3];
        o.rhs = fields[4];
        o.pass = parse_bool(fields[5], "from_csv", line_no);
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace verisum
