#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hopfq {

enum class Status { Pass, Fail, Error };

std::string_view to_string(Status s) noexcept;

/// One verified claim. residual_terms counts the nonzero terms of the
/// residual of the asserted identity; the check passes iff it is zero.
struct Check {
  std::string id;
  Status status = Status::Pass;
  std::size_t residual_terms = 0;
  std::string witness;
  std::size_t cases = 0;
};

struct Report {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  double elapsed_ms = 0.0;

  bool passed() const;
  /// Records a check from a residual count and first-failure witness.
  Check& add(std::string id, std::size_t residual_terms, std::string witness = {}, std::size_t cases = 0);
  /// Records a check that is expected to find a nonzero residual: passes iff
  /// `observed_terms` is nonzero. The observed residual goes into the witness.
  Check& add_expect_nonzero(std::string id, std::size_t observed_terms, std::string witness = {});
  Check& add_error(std::string id, std::string message);
  void append(const Report& other, const std::string& prefix = {});
  const Check* find(const std::string& id) const;
};

/// Accumulates residual terms over many cases, remembering the first failure.
class Tally {
 public:
  void record(std::size_t residual_terms, const std::string& witness) {
    ++cases_;
    if (residual_terms == 0) return;
    if (residual_ == 0) witness_ = witness;
    residual_ += residual_terms;
  }
  void record_case() { ++cases_; }
  std::size_t residual() const noexcept { return residual_; }
  const std::string& witness() const noexcept { return witness_; }
  std::size_t cases() const noexcept { return cases_; }
  Check& into(Report& r, std::string id) const { return r.add(std::move(id), residual_, witness_, cases_); }

 private:
  std::size_t residual_ = 0;
  std::size_t cases_ = 0;
  std::string witness_;
};

}  // namespace hopfq
