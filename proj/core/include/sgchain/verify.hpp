#ifndef SGCHAIN_VERIFY_HPP_
#define SGCHAIN_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sgchain {

enum class SuiteKind { PaperFinite, PaperInfinite, All };

enum class Verdict { Pass, Fail, Skip };

struct CheckRecord {
  std::string id;
  std::string anchor;  // the law the check verifies, stated mathematically
  std::string instance;
  Verdict verdict;
  std::string witness;  // populated on Fail
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<CheckRecord> checks;
  std::size_t passed = 0, failed = 0, skipped = 0;
  // wall time is reported on stderr by the CLI; it never enters the JSON,
  // which stays byte-identical across runs
  double wall_seconds = 0.0;

  bool all_pass() const { return failed == 0; }
};

struct VerifyOptions {
  SuiteKind suite = SuiteKind::All;
  std::uint64_t seed = 42;
  std::size_t count = 100;  // random transformation semigroups to sweep
  // harness self-test: corrupt one table entry of the given zoo instance
  // and make sure the suite notices
  std::optional<std::size_t> mutate_index;
};

VerificationReport run_verify(VerifyOptions const& options);

std::string verify_report_json(VerificationReport const& report);

}  // namespace sgchain

#endif  // SGCHAIN_VERIFY_HPP_
