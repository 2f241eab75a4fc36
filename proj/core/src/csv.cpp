#include "slog/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace slog {

std::string format_double(double value) {
    char buf[40];
    // %.17g always round-trips; shorten when fewer digits already do.
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
        double parsed = 0.0;
        std::from_chars(buf, buf + std::char_traits<char>::length(buf), parsed);
        if (parsed == value) break;
    }
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const Matrix& values) {
    if (static_cast<Index>(header.size()) != values.cols()) {
        throw DimensionMismatch("csv header size != column count");
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (j > 0) out << ',';
        out << header[j];
    }
    out << '\n';
    for (Index i = 0; i < values.rows(); ++i) {
        for (Index j = 0; j < values.cols(); ++j) {
            if (j > 0) out << ',';
            out << format_double(values(i, j));
        }
        out << '\n';
    }
    if (!out) throw IoError("write to '" + path + "' failed");
}

void write_vector_csv(const std::string& path, const std::string& name, const Vector& values) {
    write_csv(path, {name}, values);
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");

    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw IoError("'" + path + "' is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    {
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) table.header.push_back(field);
    }
    const std::size_t ncols = table.header.size();
    if (ncols == 0) throw IoError("'" + path + "' has an empty header");

    std::vector<double> data;
    Index nrows = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t col = 0;
        const char* ptr = line.data();
        const char* end = ptr + line.size();
        while (true) {
            const char* comma = ptr;
            while (comma != end && *comma != ',') ++comma;
            double value = 0.0;
            auto [parse_end, ec] = std::from_chars(ptr, comma, value);
            if (ec != std::errc() || parse_end != comma) {
                throw IoError("'" + path + "': bad numeric field in row " +
                              std::to_string(nrows + 1));
            }
            data.push_back(value);
            ++col;
            if (comma == end) break;
            ptr = comma + 1;
            if (ptr == end) throw IoError("'" + path + "': trailing comma in row " +
                                          std::to_string(nrows + 1));
        }
        if (col != ncols) {
            throw IoError("'" + path + "': row " + std::to_string(nrows + 1) + " has " +
                          std::to_string(col) + " fields, expected " + std::to_string(ncols));
        }
        ++nrows;
    }
    table.values.resize(nrows, static_cast<Index>(ncols));
    for (Index i = 0; i < nrows; ++i) {
        for (Index j = 0; j < static_cast<Index>(ncols); ++j) {
            table.values(i, j) = data[static_cast<std::size_t>(i) * ncols +
                                      static_cast<std::size_t>(j)];
        }
    }
    return table;
}

Matrix read_matrix_csv(const std::string& path) { return read_csv(path).values; }

Vector read_vector_csv(const std::string& path) {
    CsvTable table = read_csv(path);
    if (table.values.cols() != 1) {
        throw IoError("'" + path + "' should have exactly one column");
    }
    return table.values.col(0);
}

std::vector<std::string> design_header(Index p) {
    std::vector<std::string> header;
    header.reserve(static_cast<std::size_t>(p));
    for (Index j = 0; j < p; ++j) header.push_back("x" + std::to_string(j + 1));
    return header;
}

}  // namespace slog
