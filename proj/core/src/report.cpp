#include "tambara/report.hpp"

#include <algorithm>
#include <sstream>

namespace tambara {

void Report::merge(const Report& other) {
  for (const auto& [identity, theirs] : other.entries_) {
    Entry& ours = entries_[identity];
    ours.checked += theirs.checked;
    ours.failed += theirs.failed;
    ours.witnesses.insert(ours.witnesses.end(), theirs.witnesses.begin(), theirs.witnesses.end());
    std::sort(ours.witnesses.begin(), ours.witnesses.end());
    if (ours.witnesses.size() > max_witnesses_) {
      ours.witnesses.resize(max_witnesses_);
    }
  }
}

bool Report::passed() const { return failure_count() == 0; }

std::size_t Report::failure_count() const {
  std::size_t total = 0;
  for (const auto& entry : entries_) {
    total += entry.second.failed;
  }
  return total;
}

std::vector<std::string> Report::failed_identities() const {
  std::vector<std::string> out;
  for (const auto& [identity, entry] : entries_) {
    if (entry.failed != 0) {
      out.push_back(identity);
    }
  }
  return out;
}

std::string Report::to_string() const {
  std::ostringstream out;
  for (const auto& [identity, entry] : entries_) {
    if (entry.failed == 0) {
      out << "PASS " << identity << " (checked " << entry.checked << ")\n";
      continue;
    }
    out << "FAIL " << identity << " (" << entry.failed << " of " << entry.checked << ")\n";
    for (const auto& witness : entry.witnesses) {
      out << "  " << witness << "\n";
    }
  }
  return out.str();
}

}  // namespace tambara
