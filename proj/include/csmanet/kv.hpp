#pragma once

#include <map>
#include <string>
#include <vector>

namespace csmanet {

// Flat plain-text key-value store: one `key = value` pair per line, `#`
// starts a comment, insertion order is preserved on output.  Values may be
// comma-separated lists; list access splits on commas.
class KvMap {
 public:
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, double value);
  void set(const std::string& key, long long value);

  bool contains(const std::string& key) const;
  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  long long get_int(const std::string& key) const;
  long long get_int_or(const std::string& key, long long fallback) const;
  std::vector<std::string> get_list(const std::string& key) const;
  std::vector<double> get_double_list(const std::string& key) const;

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::vector<std::string> keys() const;

  std::string serialize() const;
  static KvMap parse(const std::string& text);
  static KvMap parse_file(const std::string& path);
  void write_file(const std::string& path) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::map<std::string, std::size_t> index_;
};

std::string format_double(double value);

// FNV-1a over the canonical serialization; used to stamp output files.
std::string kv_hash(const KvMap& kv);

}  // namespace csmanet
