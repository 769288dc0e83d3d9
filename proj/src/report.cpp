#include "zetakit/report.hpp"

#include "json.hpp"

namespace zetakit {

const char* status_name(Report::Status s) {
  switch (s) {
    case Report::Status::ok: return "ok";
    case Report::Status::mismatch: return "mismatch";
    case Report::Status::error: return "error";
  }
  return "?";
}

std::string Report::json_line() const {
  nlohmann::json j;
  j["query"] = query;
  j["value"] = value;
  j["error_bound"] = error_bound;
  j["terms_used"] = terms_used;
  j["precision_bits"] = precision_bits;
  j["status"] = status_name(status);
  if (lhs) j["lhs"] = *lhs;
  if (rhs) j["rhs"] = *rhs;
  return j.dump();
}

}  // namespace zetakit
