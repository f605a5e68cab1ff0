#ifndef ROTAPLEX_INDEX_SET_HPP
#define ROTAPLEX_INDEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rotaplex {

// Fixed-universe bitset used for incidence sets of faces.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }
  static IndexSet of(std::size_t universe, const std::vector<std::size_t>& items) {
    IndexSet s(universe);
    for (auto i : items) s.insert(i);
    return s;
  }

  std::size_t universe() const { return n_; }
  void insert(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void erase(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  bool empty() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  bool subset_of(const IndexSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const IndexSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  IndexSet operator&(const IndexSet& o) const {
    IndexSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  IndexSet operator|(const IndexSet& o) const {
    IndexSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }
  IndexSet& operator&=(const IndexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  IndexSet& operator|=(const IndexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  bool operator==(const IndexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const IndexSet& o) const { return !(*this == o); }
  bool operator<(const IndexSet& o) const {
    return n_ != o.n_ ? n_ < o.n_ : to_vector() < o.to_vector();
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t x = w_[i];
      while (x) {
        int b = std::countr_zero(x);
        out.push_back(i * 64 + static_cast<std::size_t>(b));
        x &= x - 1;
      }
    }
    return out;
  }
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto i : to_vector()) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }
  std::size_t hash() const {
    std::size_t h = n_;
    for (auto x : w_) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const { return s.hash(); }
};

}  // namespace rotaplex

#endif
