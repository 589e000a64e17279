#pragma once

#include <string>
#include <vector>

#include "o2est/interval.hpp"

namespace o2est {

// One certified inequality chain from the paper, evaluated in exact
// rational / interval arithmetic.  `pass` means hi(lhs) <= lo(rhs) at the
// worst sampled parameter binding.
struct LedgerEntry {
  enum class Status { Pass, Fail, Conditional };

  std::string id;
  std::string description;
  std::string anchor;  // where the chain lives in the source material
  Status status = Status::Fail;
  IntervalScalar lhs;    // worst-case left side
  IntervalScalar rhs;    // corresponding right side
  IntervalScalar slack;  // rhs - lhs at the worst case
  std::string note;      // worst binding, thresholds, symbolic reductions
};

std::vector<std::string> ledger_ids();

/// Evaluate one catalog entry.  Unknown ids raise InputError.
/// `refined_pi` swaps in the 30-digit pi enclosure (used by the
/// refinement-monotonicity property test).
LedgerEntry verify_entry(const std::string& id, bool refined_pi = false);

std::vector<LedgerEntry> verify_all_entries(bool refined_pi = false);

const char* to_string(LedgerEntry::Status s);

}  // namespace o2est
