#ifndef RANGEKM_TESTS_CLI_RUNNER_HPP
#define RANGEKM_TESTS_CLI_RUNNER_HPP

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace cli {

struct Outcome {
    int status = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Sandbox {
    std::filesystem::path dir;

    Sandbox() {
        dir = std::filesystem::temp_directory_path() / ("rangekm-cli-" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(dir);
    }
    ~Sandbox() {
        std::error_code ec;
        std::filesystem::remove_all(dir, ec);
    }
    Sandbox(const Sandbox&) = delete;
    Sandbox& operator=(const Sandbox&) = delete;

    std::filesystem::path write(const std::string& name, const std::string& content) const {
        const auto p = dir / name;
        std::ofstream(p, std::ios::binary) << content;
        return p;
    }

    /// Runs the CLI with a shell-quoted argument string; stderr is captured to a file.
    Outcome run(const std::string& args) const {
        const auto err_path = dir / "stderr.txt";
        const std::string cmd = std::string("'") + RANGEKM_CLI_PATH + "' " + args + " 2>'" + err_path.string() + "'";
        Outcome o;
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) {
            return o;
        }
        std::array<char, 4096> buf{};
        std::size_t got;
        while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
            o.out.append(buf.data(), got);
        }
        const int raw = pclose(pipe);
        o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
        o.err = slurp(err_path);
        return o;
    }
};

inline std::string quote(const std::filesystem::path& p) {
    return "'" + p.string() + "'";
}

} // namespace cli

#endif
