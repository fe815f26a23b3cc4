#ifndef SGCHAIN_ELEMENT_SET_HPP_
#define SGCHAIN_ELEMENT_SET_HPP_

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sgchain {

using element = std::uint32_t;

// A subset of {0, ..., universe - 1} with bitset semantics.  Used for
// ideals, subsemigroups, Green classes and subacts alike; the universe is
// the size of the owning carrier and is checked whenever two sets meet.
class ElementSet {
 public:
  ElementSet() : universe_(0) {}
  explicit ElementSet(std::size_t universe)
      : universe_(universe), bits_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe);
  static ElementSet of(std::size_t universe,
                       std::initializer_list<element> members);

  std::size_t universe() const { return universe_; }

  bool contains(element x) const {
    return (bits_[x >> 6] >> (x & 63)) & 1u;
  }
  void add(element x) { bits_[x >> 6] |= std::uint64_t(1) << (x & 63); }
  void remove(element x) { bits_[x >> 6] &= ~(std::uint64_t(1) << (x & 63)); }

  std::size_t count() const;
  bool empty() const;

  bool is_subset_of(ElementSet const& other) const;

  ElementSet& operator|=(ElementSet const& other);
  ElementSet& operator&=(ElementSet const& other);
  // set difference
  ElementSet& operator-=(ElementSet const& other);

  friend ElementSet operator|(ElementSet a, ElementSet const& b) {
    a |= b;
    return a;
  }
  friend ElementSet operator&(ElementSet a, ElementSet const& b) {
    a &= b;
    return a;
  }
  friend ElementSet operator-(ElementSet a, ElementSet const& b) {
    a -= b;
    return a;
  }

  bool operator==(ElementSet const& other) const = default;
  // lexicographic on the bit pattern; gives a deterministic total order
  bool operator<(ElementSet const& other) const;

  // members in increasing order
  std::vector<element> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word != 0) {
        unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
        f(static_cast<element>(w * 64 + bit));
        word &= word - 1;
      }
    }
  }

 private:
  std::size_t universe_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace sgchain

#endif  // SGCHAIN_ELEMENT_SET_HPP_
