#pragma once

#include <string>
#include <vector>

namespace ftn {

/// Shortest round-trip decimal representation ('.' decimal point, locale free).
std::string format_double(double v);

/// Minimal CSV table: mandatory header, LF line endings.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> cells);
    std::string to_string() const;
    void write_file(const std::string& path) const;

    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

    static CsvTable read_file(const std::string& path);
    static CsvTable parse(const std::string& text);

    /// Column index by name; throws if absent.
    size_t column(const std::string& name) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace ftn
