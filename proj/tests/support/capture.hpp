#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

// Drives the installed CLI binary through a shell. The harness exports the
// binary location in CHEBFACT_CLI (see tests/CMakeLists.txt).
namespace cli_harness {

inline std::string binary_path() {
    const char* p = std::getenv("CHEBFACT_CLI");
    if (p == nullptr || *p == '\0')
        throw std::runtime_error("CHEBFACT_CLI is not set; run through ctest");
    return p;
}

struct RunResult {
    int status = -1;
    std::string out;
};

inline RunResult run_raw(const std::string& command) {
    RunResult r;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int rc = ::pclose(pipe);
    r.status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    return r;
}

// stdout only; stderr discarded
inline RunResult run_cli(const std::string& args) {
    return run_raw(binary_path() + " " + args + " 2>/dev/null");
}

// stdout and stderr interleaved
inline RunResult run_cli_merged(const std::string& args) {
    return run_raw(binary_path() + " " + args + " 2>&1");
}

}  // namespace cli_harness
