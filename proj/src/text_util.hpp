#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcoend {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

// "[(a→x),(b->y)]" -> {{"a","x"},{"b","y"}}
inline std::vector<std::pair<std::string, std::string>> parse_arrow_pairs(const std::string& text) {
    std::string s = trim(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("expected [...]: " + text);
    s = s.substr(1, s.size() - 2);
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t i = 0;
    while (true) {
        i = s.find('(', i);
        if (i == std::string::npos) break;
        std::size_t j = s.find(')', i);
        if (j == std::string::npos) throw std::invalid_argument("unclosed pair: " + text);
        std::string body = s.substr(i + 1, j - i - 1);
        std::size_t arrow = body.find("→");
        std::size_t alen = 3;
        if (arrow == std::string::npos) {
            arrow = body.find("->");
            alen = 2;
        }
        if (arrow == std::string::npos) throw std::invalid_argument("pair without arrow: " + body);
        out.push_back({trim(body.substr(0, arrow)), trim(body.substr(arrow + alen))});
        i = j + 1;
    }
    return out;
}

}  // namespace bcoend
