#ifndef FCIT_PROBLEM_IO_HPP
#define FCIT_PROBLEM_IO_HPP

#include <filesystem>
#include <string>

#include "fcit/problem.hpp"

namespace fcit {

/// Parses a problem document. Malformed JSON or missing/mistyped fields
/// throw ParseError naming the location; inconsistent content (dimension
/// mismatches, invalid start/goal) throws SemanticError naming the field.
ProblemDef parse_problem(const std::string& text, const std::string& origin);

/// Loads and fully validates a problem file.
ProblemDef load_problem(const std::filesystem::path& path);

/// Serializes a problem to the document format accepted by load_problem.
std::string problem_to_json(const ProblemDef& problem);

void save_problem(const ProblemDef& problem, const std::filesystem::path& path);

}  // namespace fcit

#endif  // FCIT_PROBLEM_IO_HPP
