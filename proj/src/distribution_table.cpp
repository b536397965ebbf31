#include "schroder/enumeration.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schroder {

DistributionTable::DistributionTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty() || columns_.front() != "n") {
    throw std::invalid_argument("DistributionTable: first column must be the order 'n'");
  }
}

void DistributionTable::add(const Key& key, const BigInt& amount) {
  if (key.size() != columns_.size()) {
    throw std::invalid_argument("DistributionTable: key arity " + std::to_string(key.size()) + " != " +
                                std::to_string(columns_.size()));
  }
  if (amount < 0) throw std::invalid_argument("DistributionTable: negative count");
  if (amount == 0) return;
  entries_[key] += amount;
}

BigInt DistributionTable::at(const Key& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt DistributionTable::marginal(long n) const {
  BigInt total = 0;
  for (auto it = entries_.lower_bound(Key{n}); it != entries_.end() && it->first.front() == n; ++it) {
    total += it->second;
  }
  return total;
}

Rational DistributionTable::evaluate(long n, std::span<const Rational> point) const {
  if (point.size() + 1 != columns_.size()) {
    throw std::invalid_argument("DistributionTable::evaluate: expected " + std::to_string(columns_.size() - 1) +
                                " coordinates");
  }
  Rational total = 0;
  for (auto it = entries_.lower_bound(Key{n}); it != entries_.end() && it->first.front() == n; ++it) {
    Rational term{it->second};
    for (std::size_t c = 0; c < point.size(); ++c) {
      Rational p = 1;
      for (long e = 0; e < it->first[c + 1]; ++e) p *= point[c];
      term *= p;
    }
    total += term;
  }
  return total;
}

long DistributionTable::max_statistic(long n, std::size_t column) const {
  long best = 0;
  for (auto it = entries_.lower_bound(Key{n}); it != entries_.end() && it->first.front() == n; ++it) {
    best = std::max(best, it->first.at(column));
  }
  return best;
}

std::string DistributionTable::to_csv() const {
  std::ostringstream out;
  for (const auto& c : columns_) out << c << ',';
  out << "count\n";
  for (const auto& [key, value] : entries_) {
    for (long v : key) out << v << ',';
    out << value.get_str() << '\n';
  }
  return out.str();
}

nlohmann::json DistributionTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, value] : entries_) {
    nlohmann::json row = nlohmann::json::object();
    for (std::size_t c = 0; c < columns_.size(); ++c) row[columns_[c]] = key[c];
    // counts are exact big integers; strings keep them lossless
    row["count"] = value.get_str();
    rows.push_back(std::move(row));
  }
  return {{"columns", columns_}, {"rows", std::move(rows)}};
}

}  // namespace schroder
