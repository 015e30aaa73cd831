#ifndef TAPERGP_CONFIG_HPP
#define TAPERGP_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tapergp/types.hpp"

namespace tapergp {

// Flat key-value config: one `key = value` per line, `#` comments, blank
// lines ignored. Keys are case-sensitive; values keep their literal spelling
// for hashing.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  long get_int(const std::string& key) const;
  long get_int(const std::string& key, long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  // Comma-separated doubles; "inf" allowed.
  std::vector<double> get_double_list(const std::string& key) const;
  std::vector<double> get_double_list(const std::string& key,
                                      const std::vector<double>& fallback) const;

  void set(const std::string& key, const std::string& value);
  const std::map<std::string, std::string>& entries() const { return kv_; }

  // FNV-1a over the sorted normalized entries.
  std::uint64_t hash() const;

 private:
  std::map<std::string, std::string> kv_;
};

double parse_double_token(const std::string& token);  // accepts "inf"

}  // namespace tapergp

#endif
