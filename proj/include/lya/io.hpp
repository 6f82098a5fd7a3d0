#pragma once

#include "lya/algebra.hpp"
#include "lya/matrix.hpp"
#include "lya/report.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lya {

struct ProblemFile {
    LYAlgebra algebra;
    std::vector<std::string> basis;
    std::optional<Representation> representation;
    std::optional<Matrix> op;
    std::vector<Matrix> deformation;
    std::optional<Vector> wedge_element;  // over the wedge basis of g
};

// Throws ParseError (with line and column when the JSON itself is malformed).
ProblemFile parse_problem(const std::string& text);
nlohmann::json problem_to_json(const ProblemFile& p);

nlohmann::json scalar_json(const Scalar& s);
nlohmann::json vector_json(const Vector& v);
nlohmann::json matrix_json(const Matrix& a);
Matrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols, const std::string& where);

nlohmann::json report_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string report_text(const Report& r);

}  // namespace lya
