#pragma once

#include <pea/text_format.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace pea::testing {

struct CliRun {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI inside `dir`; stderr is discarded so `out` is exactly what the tool printed.
inline CliRun run_cli(const std::filesystem::path& dir, const std::string& args, const std::string& env = "") {
    const std::string cmd = "cd '" + dir.string() + "' && " + env + (env.empty() ? "" : " ") + PEA_CLI + " " +
                            args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Fresh directory holding a copy of the fixture files.
inline std::filesystem::path scratch_with_data(const std::string& name) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::current_path() / ("scratch_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const auto& entry : fs::directory_iterator(PEA_TEST_DATA)) fs::copy(entry.path(), dir / entry.path().filename());
    return dir;
}

inline std::string golden(const std::string& name) { return read_file(std::string(PEA_GOLDEN) + "/" + name); }

}  // namespace pea::testing
