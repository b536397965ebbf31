#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "schroder/bfile.hpp"

#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "schroder/errors.hpp"

namespace schroder {

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool parse_long(std::string_view s, long& out) {
  if (s.empty()) return false;
  std::size_t i = s.front() == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  if (s.size() > 18) return false;
  out = std::stol(std::string(s));
  return true;
}

bool is_integer_literal(std::string_view s) {
  std::size_t i = s.front() == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

}  // namespace

std::optional<BigInt> BFile::value_at(long n) const {
  for (const auto& [i, v] : entries) {
    if (i == n) return v;
    if (i > n) break;
  }
  return std::nullopt;
}

BFile parse_bfile(std::string_view text, std::string id) {
  BFile b;
  b.id = std::move(id);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) fields.push_back(line.substr(start, i - start));
    }
    if (fields.empty() || fields.front().front() == '#') continue;
    long n = 0;
    if (fields.size() != 2 || !parse_long(fields[0], n) || !is_integer_literal(fields[1])) {
      throw ParseError("malformed b-file line '" + std::string(line) + "' (expected 'n a(n)')", line_no);
    }
    if (!b.entries.empty() && n <= b.entries.back().first) {
      throw ParseError("index " + std::to_string(n) + " does not increase (previous " +
                           std::to_string(b.entries.back().first) + ")",
                       line_no);
    }
    b.entries.emplace_back(n, BigInt(std::string(fields[1]), 10));
    if (end == text.size()) break;
  }
  return b;
}

bool valid_sequence_id(std::string_view id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (char c : id.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string bfile_name(std::string_view id) { return "b" + std::string(id.substr(1)) + ".txt"; }

std::string bfile_url(std::string_view id) { return "https://oeis.org/" + std::string(id) + "/" + bfile_name(id); }

HttpGetter default_http_getter() {
  return [](const std::string& url) -> std::string {
    const std::string prefix = "https://oeis.org";
    if (url.rfind(prefix, 0) != 0) throw NetworkError("unsupported URL: " + url);
    httplib::Client client(prefix);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(url.substr(prefix.size()));
    if (!res) throw NetworkError("GET " + url + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200) throw NetworkError("GET " + url + " returned HTTP " + std::to_string(res->status));
    return res->body;
  };
}

std::optional<BFile> load_local_bfile(std::string_view id, const std::filesystem::path& dir) {
  if (!valid_sequence_id(id)) throw std::invalid_argument("bad OEIS id '" + std::string(id) + "'");
  const auto path = dir / bfile_name(id);
  std::error_code ec;
  if (dir.empty() || !std::filesystem::is_regular_file(path, ec)) return std::nullopt;
  BFile b = parse_bfile(read_file(path), std::string(id));
  b.source = BFileSource::LocalFile;
  return b;
}

BFile fetch_bfile(std::string_view id, const std::filesystem::path& cache_dir, const FetchOptions& options) {
  if (!valid_sequence_id(id)) throw std::invalid_argument("bad OEIS id '" + std::string(id) + "'");
  const auto cached = cache_dir / bfile_name(id);
  std::error_code ec;
  if (std::filesystem::is_regular_file(cached, ec)) {
    BFile b = parse_bfile(read_file(cached), std::string(id));
    b.source = BFileSource::Cache;
    return b;
  }
  if (!options.allow_network) {
    throw NetworkError("network access disabled and " + cached.string() + " is not cached");
  }

  // one request at a time, spaced by min_interval
  static std::mutex gate;
  static std::chrono::steady_clock::time_point last{};
  std::string body;
  {
    std::lock_guard lock(gate);
    const auto now = std::chrono::steady_clock::now();
    if (last != std::chrono::steady_clock::time_point{} && now - last < options.min_interval) {
      std::this_thread::sleep_for(options.min_interval - (now - last));
    }
    const HttpGetter getter = options.getter ? options.getter : default_http_getter();
    body = getter(bfile_url(id));
    last = std::chrono::steady_clock::now();
  }
  BFile b = parse_bfile(body, std::string(id));

  std::filesystem::create_directories(cache_dir, ec);
  if (ec) throw CacheError("cannot create cache directory " + cache_dir.string() + ": " + ec.message());
  std::ofstream out(cached, std::ios::binary);
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!out) throw CacheError("cannot write " + cached.string());
  b.source = BFileSource::Fetched;
  return b;
}

Check compare(const Series& series, const BFile& bfile, long offset, std::string name) {
  if (name.empty()) name = "compare:" + bfile.id;
  long checked = 0;
  long first = -1, last = -1;
  for (const auto& [n, value] : bfile.entries) {
    const long i = n - offset;
    if (i < 0 || i > static_cast<long>(series.order())) continue;
    const Rational& c = series[static_cast<std::size_t>(i)];
    if (c != Rational(value)) {
      return Check::fail(std::move(name), "first mismatch at index " + std::to_string(i) + " (" + bfile.id + " n=" +
                                              std::to_string(n) + "): series " + to_string(c) + " vs b-file " +
                                              to_string(value));
    }
    if (first < 0) first = i;
    last = i;
    ++checked;
  }
  if (checked == 0) {
    throw std::invalid_argument("compare: series and " + bfile.id + " do not overlap at offset " +
                                std::to_string(offset));
  }
  return Check::pass(std::move(name), std::to_string(checked) + " terms equal at indices " + std::to_string(first) +
                                          ".." + std::to_string(last));
}

}  // namespace schroder
