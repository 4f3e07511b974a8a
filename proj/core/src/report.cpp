#include "hopfq/report.hpp"

namespace hopfq {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

bool Report::passed() const {
  for (const auto& c : checks) {
    if (c.status != Status::Pass) return false;
  }
  return true;
}

Check& Report::add(std::string id, std::size_t residual_terms, std::string witness, std::size_t cases) {
  Check c;
  c.id = std::move(id);
  c.residual_terms = residual_terms;
  c.status = residual_terms == 0 ? Status::Pass : Status::Fail;
  c.witness = std::move(witness);
  c.cases = cases;
  checks.push_back(std::move(c));
  return checks.back();
}

Check& Report::add_expect_nonzero(std::string id, std::size_t observed_terms, std::string witness) {
  Check& c = add(std::move(id), observed_terms == 0 ? 1 : 0, std::move(witness), 1);
  if (observed_terms != 0) {
    c.witness = "residual has " + std::to_string(observed_terms) + " nonzero terms" +
                (c.witness.empty() ? "" : ": " + c.witness);
  } else if (c.witness.empty()) {
    c.witness = "residual unexpectedly vanished";
  }
  return c;
}

Check& Report::add_error(std::string id, std::string message) {
  Check c;
  c.id = std::move(id);
  c.status = Status::Error;
  c.residual_terms = 1;
  c.witness = std::move(message);
  checks.push_back(std::move(c));
  return checks.back();
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    checks.push_back(c);
    if (!prefix.empty()) checks.back().id = prefix + c.id;
  }
}

const Check* Report::find(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace hopfq
