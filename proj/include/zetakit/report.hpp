#pragma once

#include <optional>
#include <string>

#include "zetakit/numeric.hpp"

namespace zetakit {

// One CLI/verification result. Decimal strings round-trip to the stored
// values at context precision; lhs/rhs are present on two-route checks.
struct Report {
  enum class Status { ok, mismatch, error };

  std::string query;
  std::string value = "0";
  std::string error_bound = "0";
  long terms_used = 0;
  long precision_bits = 0;
  Status status = Status::ok;
  std::optional<std::string> lhs;
  std::optional<std::string> rhs;

  // Single-line JSON object with exactly the schema fields.
  std::string json_line() const;
};

const char* status_name(Report::Status s);

}  // namespace zetakit
