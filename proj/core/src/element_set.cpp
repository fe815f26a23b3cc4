#include "sgchain/element_set.hpp"

#include "sgchain/errors.hpp"

namespace sgchain {

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t w = 0; w < s.bits_.size(); ++w) {
    s.bits_[w] = ~std::uint64_t(0);
  }
  if (universe % 64 != 0 && !s.bits_.empty()) {
    s.bits_.back() &= (std::uint64_t(1) << (universe % 64)) - 1;
  }
  return s;
}

ElementSet ElementSet::of(std::size_t universe,
                          std::initializer_list<element> members) {
  ElementSet s(universe);
  for (element x : members) {
    if (x >= universe) {
      throw InvalidArgumentError("element out of range");
    }
    s.add(x);
  }
  return s;
}

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : bits_) {
    n += static_cast<std::size_t>(__builtin_popcountll(w));
  }
  return n;
}

bool ElementSet::empty() const {
  for (std::uint64_t w : bits_) {
    if (w != 0) return false;
  }
  return true;
}

bool ElementSet::is_subset_of(ElementSet const& other) const {
  if (universe_ != other.universe_) {
    throw InvalidArgumentError("universe mismatch");
  }
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if ((bits_[w] & ~other.bits_[w]) != 0) return false;
  }
  return true;
}

ElementSet& ElementSet::operator|=(ElementSet const& other) {
  if (universe_ != other.universe_) {
    throw InvalidArgumentError("universe mismatch");
  }
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= other.bits_[w];
  return *this;
}

ElementSet& ElementSet::operator&=(ElementSet const& other) {
  if (universe_ != other.universe_) {
    throw InvalidArgumentError("universe mismatch");
  }
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= other.bits_[w];
  return *this;
}

ElementSet& ElementSet::operator-=(ElementSet const& other) {
  if (universe_ != other.universe_) {
    throw InvalidArgumentError("universe mismatch");
  }
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= ~other.bits_[w];
  return *this;
}

bool ElementSet::operator<(ElementSet const& other) const {
  if (universe_ != other.universe_) return universe_ < other.universe_;
  return bits_ < other.bits_;
}

std::vector<element> ElementSet::members() const {
  std::vector<element> out;
  out.reserve(count());
  for_each([&](element x) { out.push_back(x); });
  return out;
}

}  // namespace sgchain
