#pragma once

#include <matchcx/matchcx.h>

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace cli {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3, kFailure = 4 };

/// Carries the process exit code to main().
struct CliError : std::runtime_error {
  CliError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

int exit_code_for(mcx_status s);
/// Throws CliError with the library's message unless s is MCX_OK.
void check(mcx_status s, const std::string& context);

struct GraphDel {
  void operator()(mcx_graph* p) const { mcx_graph_free(p); }
};
struct ComplexDel {
  void operator()(mcx_complex* p) const { mcx_complex_free(p); }
};
struct BettiDel {
  void operator()(mcx_betti* p) const { mcx_betti_free(p); }
};
struct WedgeDel {
  void operator()(mcx_wedge* p) const { mcx_wedge_free(p); }
};
struct TraceDel {
  void operator()(mcx_trace* p) const { mcx_trace_free(p); }
};
using GraphPtr = std::unique_ptr<mcx_graph, GraphDel>;
using ComplexPtr = std::unique_ptr<mcx_complex, ComplexDel>;
using BettiPtr = std::unique_ptr<mcx_betti, BettiDel>;
using WedgePtr = std::unique_ptr<mcx_wedge, WedgeDel>;
using TracePtr = std::unique_ptr<mcx_trace, TraceDel>;

/// Takes ownership of a library string.
std::string take(char* s);

/// Content-addressed JSON store. Writes go to a temporary file that is then
/// renamed into place.
class Cache {
 public:
  /// MATCHCX_CACHE_DIR, else $XDG_CACHE_HOME/matchcx, else ~/.cache/matchcx.
  static std::filesystem::path default_dir();

  Cache(std::filesystem::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& value) const;
  static std::string digest(const std::string& key);

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
  bool enabled_;
};

}  // namespace cli
