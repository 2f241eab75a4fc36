#pragma once

#include <string>
#include <vector>

#include "slog/problem.hpp"

namespace slog {

// Shortest representation that round-trips a double exactly (17 significant
// digits at most).
std::string format_double(double value);

struct CsvTable {
    std::vector<std::string> header;
    Matrix values;
};

// All files carry a single header row. Missing or non-numeric fields are a
// hard error (IoError).
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const Matrix& values);
void write_vector_csv(const std::string& path, const std::string& name, const Vector& values);

CsvTable read_csv(const std::string& path);
Matrix read_matrix_csv(const std::string& path);
Vector read_vector_csv(const std::string& path);

// Header x1..xp used for design matrices.
std::vector<std::string> design_header(Index p);

}  // namespace slog
