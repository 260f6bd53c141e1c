#ifndef FPADE_IO_HPP
#define FPADE_IO_HPP

#include <complex>
#include <string>
#include <vector>

namespace fpade {

// 17-significant-digit, locale-free formatting via std::to_chars; exact
// round trip for binary64, '.' decimal point everywhere.
std::string fmt_double(double x);
std::string fmt_int(long long x);

// A rectangular result table whose cells are already-formatted tokens.
// Serialization is deterministic: fixed column order, LF line endings, and
// in JSON sorted object keys with numeric tokens emitted unquoted.
class Table {
  public:
    explicit Table(std::vector<std::string> columns);

    void add_row(std::vector<std::string> cells);
    // Key/value metadata block (seed, set, labels); keys are sorted on output.
    void set_meta(const std::string& key, const std::string& value);

    std::size_t row_count() const { return rows_.size(); }
    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

    // Header line then rows, comma-separated.  Metadata becomes leading
    // "# key=value" comment lines.
    std::string to_csv() const;
    // {"columns":[...], "meta":{...}, "rows":[[...], ...]}
    std::string to_json() const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<std::vector<std::string>> rows_;
};

// JSON string escaping for the hand-rolled writers.
std::string json_escape(const std::string& s);

// True when the token parses fully as a finite decimal number (such tokens
// are emitted unquoted in JSON).
bool is_numeric_token(const std::string& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace fpade

#endif
