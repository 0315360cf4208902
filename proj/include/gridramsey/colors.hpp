#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gridramsey {

// A structured color: finite tuple whose components are integers or
// 2-element integer sets (sets may be degenerate singletons). Colors are
// compared and hashed by value; the dense id assigned at interning time is
// what colorings actually store.
class StructuredColor {
 public:
  StructuredColor() = default;

  static StructuredColor ints(std::initializer_list<int> xs) {
    StructuredColor c;
    for (int x : xs) c.push_int(x);
    return c;
  }

  void push_int(int x) { parts_.push_back({false, x, x}); }
  void push_set(int a, int b) {
    if (a > b) std::swap(a, b);
    parts_.push_back({true, a, b});
  }

  int arity() const { return int(parts_.size()); }
  bool is_set(int idx) const { return parts_[idx].is_set; }
  int int_at(int idx) const { return parts_[idx].lo; }
  int set_lo(int idx) const { return parts_[idx].lo; }
  int set_hi(int idx) const { return parts_[idx].hi; }

  bool operator==(const StructuredColor& o) const { return parts_ == o.parts_; }

  // Text form, e.g. "({0,1},1,0)"; parse accepts exactly this form.
  std::string to_string() const;
  static std::optional<StructuredColor> parse(const std::string& text);

  size_t hash() const {
    size_t h = 0x811c9dc5u;
    for (const Part& p : parts_) {
      h = (h ^ size_t(p.is_set ? 0x9e37 : 0x85eb)) * 0x01000193u;
      h = (h ^ size_t(uint32_t(p.lo))) * 0x01000193u;
      h = (h ^ size_t(uint32_t(p.hi))) * 0x01000193u;
    }
    return h;
  }

 private:
  struct Part {
    bool is_set;
    int lo, hi;  // lo == hi for ints and singleton sets
    bool operator==(const Part& o) const {
      return is_set == o.is_set && lo == o.lo && hi == o.hi;
    }
  };
  std::vector<Part> parts_;
};

// Interning table: structured value -> dense id, in first-use order.
class ColorTable {
 public:
  int intern(const StructuredColor& c) {
    auto it = index_.find(c);
    if (it != index_.end()) return it->second;
    int id = int(entries_.size());
    entries_.push_back(c);
    index_.emplace(c, id);
    return id;
  }

  std::optional<int> find(const StructuredColor& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const StructuredColor& at(int id) const { return entries_.at(size_t(id)); }
  int size() const { return int(entries_.size()); }

 private:
  struct Hash {
    size_t operator()(const StructuredColor& c) const { return c.hash(); }
  };
  std::vector<StructuredColor> entries_;
  std::unordered_map<StructuredColor, int, Hash> index_;
};

using ColorTablePtr = std::shared_ptr<ColorTable>;

inline ColorTablePtr make_table() { return std::make_shared<ColorTable>(); }

}  // namespace gridramsey
