#include "ftn/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ftn {

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size())
        throw std::invalid_argument("csv: row width does not match header");
    rows_.push_back(std::move(cells));
}

std::string CsvTable::to_string() const {
    std::string out;
    auto join = [&out](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    join(header_);
    for (const auto& r : rows_) join(r);
    return out;
}

void CsvTable::write_file(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("csv: cannot open for writing: " + path);
    f << to_string();
    if (!f) throw std::runtime_error("csv: write failed: " + path);
}

static std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

CsvTable CsvTable::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
    CsvTable t(split_line(line));
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        t.add_row(split_line(line));
    }
    return t;
}

CsvTable CsvTable::read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("csv: cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

size_t CsvTable::column(const std::string& name) const {
    for (size_t i = 0; i < header_.size(); ++i)
        if (header_[i] == name) return i;
    throw std::runtime_error("csv: no such column: " + name);
}

}  // namespace ftn
