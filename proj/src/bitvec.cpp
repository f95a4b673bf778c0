#include "fca/bitvec.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fca {

BitVec BitVec::full(std::size_t length) {
  BitVec v(length);
  v.set_all();
  return v;
}

BitVec BitVec::from_indices(std::size_t length, std::span<const std::size_t> indices) {
  BitVec v(length);
  for (std::size_t i : indices) {
    if (i >= length)
      throw std::invalid_argument("bit index " + std::to_string(i) + " out of range for length " +
                                  std::to_string(length));
    v.set(i);
  }
  return v;
}

void BitVec::set_all() {
  std::fill(words_.begin(), words_.end(), ~Word{0});
  clear_padding();
}

void BitVec::reset_all() { std::fill(words_.begin(), words_.end(), Word{0}); }

void BitVec::clear_padding() {
  const std::size_t tail = length_ % kWordBits;
  if (tail != 0)
    words_.back() &= (Word{1} << tail) - 1;
}

void BitVec::check_same_length(const BitVec& other) const {
  if (length_ != other.length_)
    throw std::invalid_argument("bit vector length mismatch: " + std::to_string(length_) + " vs " +
                                std::to_string(other.length_));
}

std::size_t BitVec::count() const {
  std::size_t total = 0;
  for (Word w : words_)
    total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVec::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool BitVec::is_subset_of(const BitVec& other) const {
  check_same_length(other);
  for (std::size_t k = 0; k < words_.size(); ++k)
    if ((other.words_[k] & words_[k]) != words_[k])
      return false;
  return true;
}

bool BitVec::intersects(const BitVec& other) const {
  check_same_length(other);
  for (std::size_t k = 0; k < words_.size(); ++k)
    if ((other.words_[k] & words_[k]) != 0)
      return true;
  return false;
}

bool BitVec::equal_below(const BitVec& other, std::size_t bound) const {
  check_same_length(other);
  bound = std::min(bound, length_);
  const std::size_t full_words = bound / kWordBits;
  for (std::size_t k = 0; k < full_words; ++k)
    if (words_[k] != other.words_[k])
      return false;
  const std::size_t tail = bound % kWordBits;
  if (tail == 0)
    return true;
  const Word mask = (Word{1} << tail) - 1;
  return (words_[full_words] & mask) == (other.words_[full_words] & mask);
}

BitVec& BitVec::operator&=(const BitVec& other) {
  check_same_length(other);
  for (std::size_t k = 0; k < words_.size(); ++k)
    words_[k] &= other.words_[k];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
  check_same_length(other);
  for (std::size_t k = 0; k < words_.size(); ++k)
    words_[k] |= other.words_[k];
  return *this;
}

BitVec& BitVec::operator-=(const BitVec& other) {
  check_same_length(other);
  for (std::size_t k = 0; k < words_.size(); ++k)
    words_[k] &= ~other.words_[k];
  return *this;
}

BitVec BitVec::complement() const {
  BitVec out(*this);
  for (Word& w : out.words_)
    w = ~w;
  out.clear_padding();
  return out;
}

std::strong_ordering compare_as_integer(const BitVec& a, const BitVec& b) {
  a.check_same_length(b);
  for (std::size_t k = a.words_.size(); k-- > 0;) {
    if (a.words_[k] != b.words_[k])
      return a.words_[k] < b.words_[k] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::vector<std::size_t> BitVec::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t BitVec::hash() const {
  std::size_t h = std::hash<std::size_t>{}(length_);
  for (Word w : words_)
    h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string to_string(const BitVec& v) {
  std::string out = "{";
  bool first = true;
  v.for_each([&](std::size_t i) {
    if (!first)
      out += ',';
    out += std::to_string(i);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace fca
