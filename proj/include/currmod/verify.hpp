#ifndef CURRMOD_VERIFY_HPP
#define CURRMOD_VERIFY_HPP

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace currmod {

/// One verification check; throws on failure with a diagnostic message.
struct NamedCheck {
  std::string name;
  std::function<void()> run;
};

/// A numbered acceptance criterion with its wall-clock budget in seconds.
struct Criterion {
  int id;
  std::string summary;
  double budget_seconds;
  std::vector<NamedCheck> checks;
};

/// Criteria 1..9. (Criterion 10, byte-determinism of the CLI, is driven by
/// the acceptance binary since it spawns processes.)
std::vector<Criterion> acceptance_criteria();

/// Additional fast module invariants included in `verify`.
std::vector<NamedCheck> extra_invariants();

/// Runs every criterion check plus the extra invariants, printing one
/// "ok"/"FAIL" line per check. Returns false if anything failed.
bool run_verification(std::ostream& out);

} // namespace currmod

#endif
