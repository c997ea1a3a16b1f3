#include "tsat/forbidden.hpp"

#include <sstream>

namespace tsat {
namespace words {

char letter_char(int v) {
    if (v < 0 || v >= 36) throw std::invalid_argument("letter value out of range");
    return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}

int letter_index(char c, int alphabet) {
    int v = -1;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'z') v = c - 'a' + 10;
    if (v < 0 || v >= alphabet)
        throw parse_error(std::string("letter '") + c + "' outside alphabet of size " +
                          std::to_string(alphabet));
    return v;
}

void ForbiddenSet::insert(const std::string& s) {
    if (s.size() < 2)
        throw parse_error("forbidden string '" + s + "' shorter than 2 letters");
    for (char c : s) letter_index(c, m);  // validates
    by_length[static_cast<int>(s.size())].insert(s);
}

std::vector<std::string> ForbiddenSet::ordered() const {
    std::vector<std::string> out;
    for (const auto& [j, set] : by_length) out.insert(out.end(), set.begin(), set.end());
    return out;
}

std::optional<std::string> ForbiddenSet::forbidden_suffix(const std::string& s) const {
    for (const auto& [j, set] : by_length) {
        if (s.size() < static_cast<size_t>(j)) break;
        std::string tail = s.substr(s.size() - static_cast<size_t>(j));
        if (set.count(tail)) return tail;
    }
    return std::nullopt;
}

bool ForbiddenSet::has_forbidden_factor(const std::string& s) const {
    for (const auto& [j, set] : by_length) {
        if (static_cast<size_t>(j) > s.size()) break;
        for (size_t i = 0; i + static_cast<size_t>(j) <= s.size(); ++i)
            if (set.count(s.substr(i, static_cast<size_t>(j)))) return true;
    }
    return false;
}

namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

ForbiddenSet parse_forbidden_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    ForbiddenSet fs;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty()) continue;
        if (!have_header) {
            std::istringstream ls(s);
            std::string kw;
            long m = 0;
            if (!(ls >> kw >> m) || kw != "alphabet" || m < 2 || m > 36)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": expected 'alphabet m' with 2 <= m <= 36");
            fs.m = static_cast<int>(m);
            have_header = true;
            continue;
        }
        try {
            fs.insert(s);
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!have_header) throw parse_error("missing 'alphabet m' header line");
    return fs;
}

std::string emit_forbidden_file(const ForbiddenSet& fs) {
    std::ostringstream out;
    out << "alphabet " << fs.m << "\n";
    for (const auto& s : fs.ordered()) out << s << "\n";
    return out.str();
}

}  // namespace words
}  // namespace tsat
