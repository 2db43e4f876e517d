#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xmodcat/verification.hpp"

namespace xmodcat {

inline constexpr const char* kToolName = "xmodcat";
inline constexpr const char* kToolVersion = "0.1.0";

// The on-disk description of a crossed module: Cayley tables with the
// identity at index 0, the right action as one permutation of X2 per X1
// element, and the boundary as an array of X1 indices.
struct XModDocument {
  std::string name;
  std::vector<std::vector<int>> x1_table;
  std::vector<std::vector<int>> x2_table;
  std::vector<std::vector<int>> action;  // action[g][m] = m^g
  std::vector<int> boundary;
};

// Throws SyntaxError (with the 1-based line) on malformed JSON and
// ShapeError (naming the field) on structural problems.
XModDocument parse_document(const std::string& text);
std::string serialize_document(const XModDocument& doc);

XPtr build_crossed_module(const XModDocument& doc);
XModDocument document_from_crossed_module(const CrossedModule& x, const std::string& name);

// Machine-readable reports; byte-identical for identical inputs and seeds.
std::string data_report(const std::string& raw_text, std::uint64_t seed, double tol);
std::string gx_report(const std::string& raw_text, std::uint64_t seed);
std::string modularize_report(const std::string& raw_text, std::uint64_t seed, double tol);

}  // namespace xmodcat
