#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "transcat/permutation.hpp"

namespace transcat::detail {

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

// Non-comment, non-blank lines split on tabs.
template <class F>
void for_each_record(const std::filesystem::path& path, std::size_t fields, F&& f) {
  std::istringstream in(slurp(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto parts = split_tabs(line);
    if (parts.size() != fields) {
      throw Error(path.filename().string() + ":" + std::to_string(lineno) + ": expected " + std::to_string(fields) +
                  " tab-separated fields");
    }
    try {
      f(parts);
    } catch (const Error& e) {
      throw Error(path.filename().string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

}  // namespace transcat::detail
