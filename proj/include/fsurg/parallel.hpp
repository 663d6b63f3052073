#pragma once

namespace fsurg {

enum class ExecMode { serial, parallel };

// OpenMP thread budget, capped by FAREY_SURGERY_THREADS when set.
int effective_thread_count() noexcept;

}  // namespace fsurg
