#ifndef GOALCHECK_STATE_STORE_HPP
#define GOALCHECK_STATE_STORE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace goalcheck {

/// Closed set of fixed-width byte keys, stored contiguously in insertion
/// order. Index i is the i-th distinct key inserted, so a breadth-first
/// search can use the store itself as its FIFO queue.
class StateStore {
 public:
  explicit StateStore(std::size_t key_width)
      : width_(key_width), index_(1024, Hash{this}, Eq{this}) {}

  StateStore(const StateStore&) = delete;
  StateStore& operator=(const StateStore&) = delete;

  /// Returns the key's index and whether it was newly inserted.
  std::pair<std::uint32_t, bool> insert(std::span<const std::uint8_t> key) {
    const auto candidate = static_cast<std::uint32_t>(size());
    arena_.insert(arena_.end(), key.begin(), key.end());
    auto [it, inserted] = index_.insert(candidate);
    if (!inserted) arena_.resize(arena_.size() - width_);
    return {*it, inserted};
  }

  std::span<const std::uint8_t> key(std::uint32_t i) const {
    return {arena_.data() + static_cast<std::size_t>(i) * width_, width_};
  }

  std::size_t size() const { return width_ == 0 ? index_.size() : arena_.size() / width_; }
  std::size_t width() const { return width_; }

 private:
  std::string_view view(std::uint32_t i) const {
    return {reinterpret_cast<const char*>(arena_.data()) + static_cast<std::size_t>(i) * width_,
            width_};
  }

  struct Hash {
    const StateStore* store;
    std::size_t operator()(std::uint32_t i) const {
      return std::hash<std::string_view>{}(store->view(i));
    }
  };
  struct Eq {
    const StateStore* store;
    bool operator()(std::uint32_t a, std::uint32_t b) const {
      return store->view(a) == store->view(b);
    }
  };

  std::size_t width_;
  std::vector<std::uint8_t> arena_;
  std::unordered_set<std::uint32_t, Hash, Eq> index_;
};

}  // namespace goalcheck

#endif  // GOALCHECK_STATE_STORE_HPP
