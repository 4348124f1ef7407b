#pragma once

namespace variform::cli {

enum ExitCode : int { exit_pass = 0, exit_check_failed = 1, exit_input_error = 2, exit_numeric_error = 3 };

/// Entry point of the `variform` executable.
int main(int argc, char** argv);

}  // namespace variform::cli
