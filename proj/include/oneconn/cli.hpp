#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "oneconn/types.hpp"

namespace oneconn::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalidEmbedding = 2;
constexpr int kPrecondition = 3;
constexpr int kMismatch = 4;

int exit_code_for(Errc code);

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oneconn::cli
