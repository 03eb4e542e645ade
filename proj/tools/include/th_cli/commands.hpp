#pragma once

namespace th::cli {

/// Parses and runs one th invocation. Exit codes: 0 success, 1 when a
/// checked property is false (not dense, not a transversal, not
/// concentrated, extraction failed, sweep disagreement), 2 on input errors.
int run(int argc, const char* const* argv);

}  // namespace th::cli
