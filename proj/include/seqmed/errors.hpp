#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace seqmed {

// Structural problems in input data (monotonicity, coding). CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, std::vector<int> indices = {})
      : std::runtime_error(what), indices(std::move(indices)) {}
  std::vector<int> indices;
};

// An empty or degenerate conditioning stratum. CLI exit code 3.
class PositivityError : public std::runtime_error {
 public:
  PositivityError(const std::string& what, std::string stratum = "")
      : std::runtime_error(what), stratum(std::move(stratum)) {}
  std::string stratum;
};

// Schema/file problems (missing column, bad cell, malformed config).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace seqmed
