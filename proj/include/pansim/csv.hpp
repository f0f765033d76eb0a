#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "pansim/common.hpp"

namespace pansim {

// Minimal strict CSV: no quoting, no embedded commas; every data file this
// project reads or writes is plain numeric/identifier columns.
struct CsvTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t column_index(const std::string& col) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == col)
                return i;
        throw ValidationError(name + ": missing required column '" + col + "'");
    }

    void require_columns(const std::vector<std::string>& required) const {
        for (const auto& c : required)
            column_index(c);
    }
};

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ','))
        out.push_back(field);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

inline CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open '" + path + "'");
    CsvTable table;
    table.name = path;
    std::string line;
    if (!std::getline(in, line))
        throw ValidationError(path + ": empty file");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    table.columns = split_csv_line(line);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        auto fields = split_csv_line(line);
        if (fields.size() != table.columns.size())
            throw ValidationError(path + ": row " + std::to_string(table.rows.size() + 2) +
                                  " has " + std::to_string(fields.size()) + " fields, expected " +
                                  std::to_string(table.columns.size()));
        table.rows.push_back(std::move(fields));
    }
    return table;
}

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns)
        : out_(path), n_cols_(columns.size()) {
        if (!out_)
            throw ValidationError("cannot write '" + path + "'");
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i)
                out_ << ',';
            out_ << columns[i];
        }
        out_ << '\n';
    }

    void write_row(const std::vector<std::string>& fields) {
        if (fields.size() != n_cols_)
            throw ValidationError("CsvWriter: field count mismatch");
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i)
                out_ << ',';
            out_ << fields[i];
        }
        out_ << '\n';
    }

private:
    std::ofstream out_;
    std::size_t n_cols_;
};

}  // namespace pansim
