#ifndef ZGAME_TEST_SUBPROCESS_HPP
#define ZGAME_TEST_SUBPROCESS_HPP

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

struct CommandResult {
    int exit_code = -1;
    std::string out;  // captured stdout
};

inline CommandResult run_command(const std::string& cmd) {
    CommandResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed: " + cmd);
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

#endif  // ZGAME_TEST_SUBPROCESS_HPP
