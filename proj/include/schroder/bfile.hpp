#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schroder/numeric.hpp"
#include "schroder/report.hpp"
#include "schroder/series.hpp"

namespace schroder {

enum class BFileSource { Text, LocalFile, Cache, Fetched };

/// Terms of an OEIS sequence in b-file form: strictly increasing indices
/// with exact integer values.
struct BFile {
  std::string id;
  std::vector<std::pair<long, BigInt>> entries;
  BFileSource source = BFileSource::Text;

  std::optional<BigInt> value_at(long n) const;
};

/// Parses `n a(n)` lines; blank lines and `#` comments are skipped. Throws
/// ParseError (with a 1-based line number) on malformed lines or
/// non-increasing indices.
BFile parse_bfile(std::string_view text, std::string id = {});

/// `A` followed by exactly six digits.
bool valid_sequence_id(std::string_view id);

/// https://oeis.org/A078009/b078009.txt
std::string bfile_url(std::string_view id);

/// `b078009.txt`; the name used both in the cache and for bundled fixtures.
std::string bfile_name(std::string_view id);

/// Returns the response body; throws NetworkError on any transport failure
/// or non-200 status.
using HttpGetter = std::function<std::string(const std::string& url)>;

HttpGetter default_http_getter();

struct FetchOptions {
  bool allow_network = false;
  HttpGetter getter;  // defaults to default_http_getter()
  std::chrono::milliseconds min_interval{1000};
};

/// Reads cache_dir/bNNNNNN.txt if present. Otherwise, when the network is
/// allowed, downloads it once, stores the bytes verbatim and parses them.
/// Throws NetworkError (download failed or network disallowed with a cold
/// cache), CacheError (cannot write), ParseError, or std::invalid_argument
/// for a malformed id.
BFile fetch_bfile(std::string_view id, const std::filesystem::path& cache_dir, const FetchOptions& options = {});

/// dir/bNNNNNN.txt parsed as LocalFile, or nullopt if absent.
std::optional<BFile> load_local_bfile(std::string_view id, const std::filesystem::path& dir);

/// Termwise equality of series[i] and the b-file term at index i + offset
/// over the overlapping range. Fails on the first mismatch, reporting the
/// index and both values. Throws std::invalid_argument if the ranges do not
/// overlap.
Check compare(const Series& series, const BFile& bfile, long offset, std::string name = {});

}  // namespace schroder
