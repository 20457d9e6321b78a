#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace tambara {

// Outcome of a battery of identity checks, keyed by identity name. Failures
// never throw; each identity keeps a count and the first few witnesses.
class Report {
 public:
  struct Entry {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<std::string> witnesses;
  };

  explicit Report(std::size_t max_witnesses = 3) : max_witnesses_(max_witnesses) {}

  // Registers an identity so that it shows up even when nothing is checked.
  void declare(const std::string& identity) { entries_[identity]; }

  template <class Witness>
  void record(const std::string& identity, bool holds, Witness&& witness) {
    Entry& entry = entries_[identity];
    ++entry.checked;
    if (!holds) {
      ++entry.failed;
      if (entry.witnesses.size() < max_witnesses_) {
        entry.witnesses.push_back(witness());
      }
    }
  }

  void merge(const Report& other);

  bool passed() const;
  std::size_t failure_count() const;
  std::vector<std::string> failed_identities() const;
  const std::map<std::string, Entry>& entries() const noexcept { return entries_; }

  // One line per identity, "PASS name (checked N)" or "FAIL name (k of N)"
  // followed by indented witnesses.
  std::string to_string() const;

 private:
  std::size_t max_witnesses_;
  std::map<std::string, Entry> entries_;
};

}  // namespace tambara
