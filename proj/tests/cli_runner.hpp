#ifndef REDCYC_TESTS_CLI_RUNNER_HPP
#define REDCYC_TESTS_CLI_RUNNER_HPP

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

struct CliResult {
    int code = -1;
    std::string out;
};

/// Runs the CLI with the given arguments (shell syntax), capturing stdout.
inline CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(REDCYC_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

#endif
