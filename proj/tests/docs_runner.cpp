// Executes every worked example under docs/examples and byte-compares the
// output. Usage: docs_runner <cli-path> <examples-dir>   (run from the repo
// root so the data/ paths inside the commands resolve).

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string run(const std::string& cmd, int* exit_code) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return {};
    }
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    *exit_code = WEXITSTATUS(pclose(pipe));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: docs_runner <cli-path> <examples-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path dir = argv[2];

    std::vector<fs::path> cmds;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".cmd") cmds.push_back(entry.path());
    std::sort(cmds.begin(), cmds.end());
    if (cmds.empty()) {
        std::cerr << "no .cmd files found in " << dir << "\n";
        return 2;
    }

    int failures = 0;
    for (const auto& cmd_path : cmds) {
        std::ifstream in(cmd_path);
        std::string args, line, env;
        std::getline(in, args);
        int want_exit = 0;
        while (std::getline(in, line)) {
            if (line.rfind("exit ", 0) == 0) want_exit = std::stoi(line.substr(5));
            if (line.rfind("env ", 0) == 0) env += line.substr(4) + " ";
        }

        const fs::path expected_path = fs::path(cmd_path).replace_extension(".expected");
        const std::string expected = slurp(expected_path);

        int code = 0;
        const std::string got = run(env + cli + " " + args, &code);

        std::string error;
        if (code != want_exit)
            error = "exit " + std::to_string(code) + ", wanted " + std::to_string(want_exit);
        else if (got != expected)
            error = "output differs from " + expected_path.filename().string();

        if (error.empty()) {
            std::cout << "PASS " << cmd_path.filename().string() << "\n";
        } else {
            std::cout << "FAIL " << cmd_path.filename().string() << " - " << error << "\n";
            ++failures;
        }
    }
    return failures;
}
