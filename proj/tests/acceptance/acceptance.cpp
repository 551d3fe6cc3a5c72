// Runs `symprod selftest` with one and eight threads and prints one line per criterion.

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Row {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Run {
    int status = -1;
    std::string out;
    std::map<std::string, Row> rows;
    std::map<std::string, double> seconds;
};

Run run(const std::string& exe, const std::string& work, int threads)
{
    const std::string err = work + "/selftest_t" + std::to_string(threads) + ".err";
    const std::string cmd = "\"" + exe + "\" selftest --seed 7 --timings --threads " + std::to_string(threads) +
                            " 2>\"" + err + "\"";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;

    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("criterion,", 0) == 0) continue;
        std::vector<std::string> f;
        std::istringstream ls(line);
        std::string cell;
        for (int i = 0; i < 3 && std::getline(ls, cell, ','); ++i) f.push_back(cell);
        std::getline(ls, cell);
        if (f.size() < 3) continue;
        r.rows[f[0]] = {f[1], f[2] == "pass", cell};
    }
    std::ifstream log(err);
    while (std::getline(log, line)) {
        std::istringstream ls(line);
        std::string hash, id, sec;
        if (!(ls >> hash >> id >> sec) || hash != "#" || sec.rfind("seconds=", 0) != 0) continue;
        r.seconds[id] = std::stod(sec.substr(8));
    }
    return r;
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc < 3) {
        std::cerr << "usage: symprod_acceptance <symprod> <workdir>\n";
        return 2;
    }
    const Run one = run(argv[1], argv[2], 1);
    const Run eight = run(argv[1], argv[2], 8);

    const std::map<std::string, double> limits{{"1", 5.0}, {"3", 60.0}, {"4", 30.0}, {"10a", 60.0}};
    const std::vector<std::vector<std::string>> criteria{{"1"},  {"2"}, {"3"}, {"4"}, {"5"},
                                                         {"6"},  {"7"}, {"8"}, {"9"}, {"10a", "10b", "10c"},
                                                         {"11"}};
    int failed = 0;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        bool ok = one.status == 0 || one.status == 1;
        std::string note;
        for (const auto& id : criteria[c]) {
            const auto it = one.rows.find(id);
            if (it == one.rows.end()) {
                ok = false;
                note += " " + id + ":missing";
                continue;
            }
            ok = ok && it->second.passed;
            note += " " + id + ":" + it->second.detail;
            if (const auto lim = limits.find(id); lim != limits.end()) {
                const auto s = one.seconds.find(id);
                const bool fast = s != one.seconds.end() && s->second < lim->second;
                ok = ok && fast;
                std::ostringstream t;
                t << " seconds=" << (s == one.seconds.end() ? -1.0 : s->second) << "<" << lim->second;
                note += t.str();
            }
        }
        if (c + 1 == criteria.size()) {
            const bool same = one.out == eight.out && !one.out.empty();
            ok = ok && same;
            note += same ? " report(threads=1)==report(threads=8)" : " report(threads=1)!=report(threads=8)";
        }
        if (!ok) ++failed;
        std::cout << "criterion " << c + 1 << ": " << (ok ? "PASS" : "FAIL") << note << '\n';
    }
    if (one.status != 0) std::cout << "selftest exit status " << one.status << '\n';
    return failed == 0 && one.status == 0 ? 0 : 1;
}
