#pragma once

// Output formatting shared by every emitter: CSV with a header row, and a
// line-oriented structured text of `key: value` and `key: [a, b, ...]`.
// Reals are printed with 12 significant digits so output is reproducible.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sqcomp/int_math.hpp"

namespace sqcomp {

std::string format_real(double value);
std::string format_real(long double value);

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    // Throws PreconditionError if the width differs from the header.
    void add_row(std::vector<std::string> cells);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

class StructuredText {
public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    void add(const std::string& key, double value) { add(key, format_real(value)); }
    void add(const std::string& key, u64 value) { add(key, std::to_string(value)); }
    void add(const std::string& key, i64 value) { add(key, std::to_string(value)); }
    void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
    void add_array(const std::string& key, const std::vector<std::string>& values);
    void add_array(const std::string& key, const std::vector<u64>& values);

    std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace sqcomp
