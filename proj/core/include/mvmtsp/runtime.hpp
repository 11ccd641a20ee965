#pragma once

namespace mvmtsp {

// Worker-thread allowance: MVMTSP_THREADS if set to a positive integer,
// otherwise the hardware concurrency (at least 1).
int thread_cap();

}  // namespace mvmtsp
