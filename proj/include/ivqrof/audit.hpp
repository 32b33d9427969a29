#ifndef IVQROF_AUDIT_HPP_
#define IVQROF_AUDIT_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace ivqrof {

struct AuditEntry {
  std::string stage;
  std::string kind;
  std::string detail;

  friend bool operator==(const AuditEntry&, const AuditEntry&) = default;
};

struct AuditLog {
  std::vector<AuditEntry> entries;
  std::uint64_t roundoff_clamps = 0;
  std::uint64_t wide_clamps = 0;

  void add(std::string stage, std::string kind, std::string detail) {
    entries.push_back({std::move(stage), std::move(kind), std::move(detail)});
  }

  friend bool operator==(const AuditLog&, const AuditLog&) = default;
};

}  // namespace ivqrof

#endif
