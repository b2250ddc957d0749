#pragma once

// Small shared utilities: a deterministic parallel map and a minimal
// key = value config-file reader (rank caps, thread counts).

#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace weylpat {

// Applies fn(i) for i in [0, n), writing results in index order; the output
// is independent of the thread count.
template <typename T>
std::vector<T> parallel_map(std::size_t n, int threads,
                            const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::size_t workers = std::min<std::size_t>(threads, n);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

struct Config {
  int rank_cap = 6;       // embedding-search rank cap
  int chamber_rank_cap = 5;
  int threads = 1;
  std::size_t weyl_cap = 1000000;
};

// Reads lines of the form "key = value"; '#' starts a comment.
inline Config load_config(const std::string& path) {
  Config cfg;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": expected key = value");
      continue;
    }
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    try {
      if (key == "rank_cap") cfg.rank_cap = std::stoi(val);
      else if (key == "chamber_rank_cap") cfg.chamber_rank_cap = std::stoi(val);
      else if (key == "threads") cfg.threads = std::stoi(val);
      else if (key == "weyl_cap") cfg.weyl_cap = std::stoul(val);
      else throw std::runtime_error("unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": bad value for " + key);
    }
  }
  return cfg;
}

}  // namespace weylpat
