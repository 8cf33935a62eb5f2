#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "qlass/data.hpp"
#include "qlass/errors.hpp"

namespace qlass::data {

namespace {

// Splits one CSV record. Supports double-quoted fields with "" escapes.
std::vector<std::string> split_record(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool parse_double(const std::string& s, double& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stod(t, &pos);
    } catch (...) {
        return false;
    }
    return pos == t.size();
}

std::string escape_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

}  // namespace

Dataset load_csv(const std::string& path, const std::vector<ColumnSpec>& spec) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::io_error, "cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) raise(ErrorCode::empty_dataset, path + " is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const std::vector<std::string> header = split_record(line);
    std::unordered_map<std::string, std::size_t> col_index;
    for (std::size_t i = 0; i < header.size(); ++i) col_index[trim(header[i])] = i;

    std::vector<std::size_t> source_index(spec.size());
    for (std::size_t c = 0; c < spec.size(); ++c) {
        const auto it = col_index.find(spec[c].name);
        if (it == col_index.end())
            raise(ErrorCode::missing_column, "column '" + spec[c].name +
                                                 "' not found in " + path);
        source_index[c] = it->second;
    }

    Dataset ds;
    ds.cols.resize(spec.size());
    for (std::size_t c = 0; c < spec.size(); ++c) ds.cols[c].spec = spec[c];

    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_record(line);
        for (std::size_t c = 0; c < spec.size(); ++c) {
            const std::string raw = source_index[c] < fields.size()
                                        ? fields[source_index[c]]
                                        : std::string();
            const std::string cell = trim(raw);
            Column& col = ds.cols[c];
            if (col.is_text()) {
                col.text.push_back(cell);  // "" = missing
            } else if (cell.empty()) {
                col.numeric.push_back(std::numeric_limits<double>::quiet_NaN());
            } else {
                double v;
                if (!parse_double(cell, v))
                    raise(ErrorCode::parse_error,
                          "row " + std::to_string(row) + ", column '" +
                              spec[c].name + "': cannot parse '" + cell + "'");
                col.numeric.push_back(v);
            }
        }
        ++row;
    }
    if (row < 2)
        raise(ErrorCode::empty_dataset,
              path + ": need at least 2 data rows, got " + std::to_string(row));
    return ds;
}

void write_assembled_csv(const Dataset& ds, const std::string& label_column,
                         const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(ErrorCode::io_error, "cannot write " + path);

    for (std::size_t j = 0; j < ds.feature_names.size(); ++j) {
        if (j) out << ',';
        out << escape_field(ds.feature_names[j]);
    }
    out << ',' << escape_field(label_column) << '\n';

    char buf[40];
    for (std::size_t i = 0; i < ds.features.rows; ++i) {
        for (std::size_t j = 0; j < ds.features.cols; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", ds.features.at(i, j));
            if (j) out << ',';
            out << buf;
        }
        out << ',' << ds.labels[i] << '\n';
    }
    if (!out) raise(ErrorCode::io_error, "short write to " + path);
}

Dataset read_assembled_csv(const std::string& path,
                           const std::string& label_column,
                           const std::vector<std::string>& class_names) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::io_error, "cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) raise(ErrorCode::empty_dataset, path + " is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> header = split_record(line);
    if (header.empty() || trim(header.back()) != label_column)
        raise(ErrorCode::parse_error,
              path + ": expected trailing label column '" + label_column + "'");
    header.pop_back();

    Dataset ds;
    for (auto& h : header) ds.feature_names.push_back(trim(h));
    const std::size_t d = ds.feature_names.size();
    std::vector<double> values;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_record(line);
        if (fields.size() != d + 1)
            raise(ErrorCode::parse_error,
                  path + ": row " + std::to_string(rows) + " has " +
                      std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(d + 1));
        for (std::size_t j = 0; j < d; ++j) {
            double v;
            if (!parse_double(fields[j], v))
                raise(ErrorCode::parse_error,
                      path + ": row " + std::to_string(rows) + ", column '" +
                          ds.feature_names[j] + "'");
            values.push_back(v);
        }
        double lbl;
        if (!parse_double(fields[d], lbl))
            raise(ErrorCode::parse_error,
                  path + ": row " + std::to_string(rows) + " label");
        ds.labels.push_back(static_cast<int>(lbl));
        ++rows;
    }

    ds.features = Matrix(rows, d);
    ds.features.data = std::move(values);
    ds.class_names = class_names;
    return ds;
}

}  // namespace qlass::data
