#include "sqcomp/report.hpp"

#include <cstdio>
#include <sstream>

namespace sqcomp {

std::string format_real(double value) {
    if (value == 0.0)
        value = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string format_real(long double value) {
    if (value == 0.0L)
        value = 0.0L;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg", value);
    return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size())
        throw PreconditionError("csv row has " + std::to_string(cells.size()) + " cells, header has " +
                                std::to_string(header_.size()));
    rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
    std::ostringstream out;
    auto emit = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    emit(header_);
    for (const auto& row : rows_)
        emit(row);
    return out.str();
}

void StructuredText::add(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
}

void StructuredText::add_array(const std::string& key, const std::vector<std::string>& values) {
    std::string joined = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            joined += ", ";
        joined += values[i];
    }
    joined += "]";
    entries_.emplace_back(key, std::move(joined));
}

void StructuredText::add_array(const std::string& key, const std::vector<u64>& values) {
    std::vector<std::string> text;
    text.reserve(values.size());
    for (u64 v : values)
        text.push_back(std::to_string(v));
    add_array(key, text);
}

std::string StructuredText::str() const {
    std::string out;
    for (const auto& [key, value] : entries_)
        out += key + ": " + value + "\n";
    return out;
}

}  // namespace sqcomp
