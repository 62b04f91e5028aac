#include "cli_support.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace cli {

int exit_code_for(mcx_status s) {
  switch (s) {
    case MCX_OK: return kOk;
    case MCX_E_INVALID:
    case MCX_E_PARSE:
    case MCX_E_IO:
    case MCX_E_PRECONDITION:
    case MCX_E_NULL: return kUsage;
    case MCX_E_RESOURCE:
    case MCX_E_SIZE_LIMIT: return kResource;
    default: return kFailure;
  }
}

void check(mcx_status s, const std::string& context) {
  if (s == MCX_OK) return;
  throw CliError(exit_code_for(s), context + ": " + mcx_last_error());
}

std::string take(char* s) {
  std::string out = s ? s : "";
  mcx_string_free(s);
  return out;
}

std::filesystem::path Cache::default_dir() {
  if (const char* d = std::getenv("MATCHCX_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "matchcx";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "matchcx";
  return std::filesystem::temp_directory_path() / "matchcx-cache";
}

// 64-bit FNV-1a, twice with different offsets for a 128-bit name.
std::string Cache::digest(const std::string& key) {
  auto fnv = [&](std::uint64_t h) {
    for (unsigned char c : key) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  };
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(fnv(0xcbf29ce484222325ULL)),
                static_cast<unsigned long long>(fnv(0x84222325cbf29ce4ULL)));
  return buf;
}

std::filesystem::path Cache::path_for(const std::string& key) const { return dir_ / (digest(key) + ".json"); }

std::optional<std::string> Cache::get(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  // first line holds the key, guarding against digest collisions
  auto text = ss.str();
  auto nl = text.find('\n');
  if (nl == std::string::npos || text.substr(0, nl) != key) return std::nullopt;
  return text.substr(nl + 1);
}

void Cache::put(const std::string& key, const std::string& value) const {
  if (!enabled_) return;
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  auto final_path = path_for(key);
  auto tmp = final_path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << key << "\n" << value;
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace cli
