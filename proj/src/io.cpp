#include "fpade/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fpade/errors.hpp"

namespace fpade {

std::string fmt_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string fmt_int(long long x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw DomainError("a table needs at least one column");
}

void Table::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns_.size())
        throw DomainError("row width does not match the column count");
    rows_.push_back(std::move(cells));
}

void Table::set_meta(const std::string& key, const std::string& value) {
    for (auto& kv : meta_)
        if (kv.first == key) {
            kv.second = value;
            return;
        }
    meta_.emplace_back(key, value);
}

std::string Table::to_csv() const {
    std::vector<std::pair<std::string, std::string>> meta = meta_;
    std::sort(meta.begin(), meta.end());
    std::string out;
    for (const auto& kv : meta) out += "# " + kv.first + "=" + kv.second + "\n";
    for (size_t i = 0; i < columns_.size(); ++i) {
        if (i) out += ",";
        out += columns_[i];
    }
    out += "\n";
    for (const auto& row : rows_) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += row[i];
        }
        out += "\n";
    }
    return out;
}

namespace {

std::string json_token(const std::string& s) {
    if (is_numeric_token(s)) return s;
    return "\"" + json_escape(s) + "\"";
}

}  // namespace

std::string Table::to_json() const {
    std::vector<std::pair<std::string, std::string>> meta = meta_;
    std::sort(meta.begin(), meta.end());
    std::string out = "{\"columns\":[";
    for (size_t i = 0; i < columns_.size(); ++i) {
        if (i) out += ",";
        out += "\"" + json_escape(columns_[i]) + "\"";
    }
    out += "],\"meta\":{";
    for (size_t i = 0; i < meta.size(); ++i) {
        if (i) out += ",";
        out += "\"" + json_escape(meta[i].first) + "\":" + json_token(meta[i].second);
    }
    out += "},\"rows\":[";
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += ",";
        out += "[";
        for (size_t i = 0; i < rows_[r].size(); ++i) {
            if (i) out += ",";
            out += json_token(rows_[r][i]);
        }
        out += "]";
    }
    out += "]}\n";
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

bool is_numeric_token(const std::string& s) {
    if (s.empty()) return false;
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(first, last, value);
    return res.ec == std::errc() && res.ptr == last && std::isfinite(value);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << content;
    if (!out) throw ConfigError("cannot write file: " + path);
}

}  // namespace fpade
