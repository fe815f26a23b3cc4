#ifndef SGCHAIN_REPORT_HPP_
#define SGCHAIN_REPORT_HPP_

#include <optional>
#include <string>

#include "sgchain/ideals.hpp"
#include "sgchain/instance.hpp"

namespace sgchain {

// JSON reports for the CLI.  All output is deterministic for a given
// (spec, flags) pair: keys are emitted in a fixed order and no timing or
// environment data is included.

std::string analyze_report(InstanceSpec const& spec,
                           std::string const& instance_name);

std::string green_report(InstanceSpec const& spec,
                         std::string const& instance_name);

std::string socle_report_json(InstanceSpec const& spec,
                              std::string const& instance_name, Side side);

struct ChainsOptions {
  std::optional<std::size_t> antichain_target;
  std::optional<std::size_t> chain_target;
  std::size_t radius_words = 12;
  std::size_t radius_magnitude = 100;
  bool kernel_only = false;
};

std::string chains_report(InstanceSpec const& spec,
                          std::string const& instance_name,
                          ChainsOptions const& options);

struct RewriteOptions {
  std::optional<std::string> reduce_word;
  bool complete = false;
  std::optional<std::size_t> normal_forms;
};

std::string rewrite_report(InstanceSpec const& spec,
                           std::string const& instance_name,
                           RewriteOptions const& options);

}  // namespace sgchain

#endif  // SGCHAIN_REPORT_HPP_
