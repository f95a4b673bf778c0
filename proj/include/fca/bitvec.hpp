#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#ifndef FCA_WORD_BITS
#define FCA_WORD_BITS 32
#endif

namespace fca {

#if FCA_WORD_BITS == 64
using Word = std::uint64_t;
#elif FCA_WORD_BITS == 32
using Word = std::uint32_t;
#else
#error "FCA_WORD_BITS must be 32 or 64"
#endif

inline constexpr std::size_t kWordBits = FCA_WORD_BITS;

inline constexpr std::size_t word_count(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Fixed-length packed bit vector. Bit i lives in word i / kWordBits at
// position i % kWordBits, least significant bit first. Bits past size() are
// always zero, so word-wise equality, containment and popcount need no
// masking.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t length) : length_(length), words_(word_count(length), 0) {}

  static BitVec full(std::size_t length);
  static BitVec from_indices(std::size_t length, std::span<const std::size_t> indices);
  static BitVec from_indices(std::size_t length, std::initializer_list<std::size_t> indices) {
    return from_indices(length, std::span<const std::size_t>(indices.begin(), indices.size()));
  }

  std::size_t size() const { return length_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & Word{1}; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

  void set_all();
  void reset_all();

  std::size_t count() const;
  bool none() const;
  bool all() const { return count() == length_; }

  // Word-wise containment: (other[k] & words[k]) == words[k] for every k.
  bool is_subset_of(const BitVec& other) const;
  bool intersects(const BitVec& other) const;
  // True iff both vectors agree on every index below `bound`.
  bool equal_below(const BitVec& other, std::size_t bound) const;

  BitVec& operator&=(const BitVec& other);
  BitVec& operator|=(const BitVec& other);
  // Set difference.
  BitVec& operator-=(const BitVec& other);
  BitVec complement() const;

  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  friend BitVec operator-(BitVec a, const BitVec& b) { return a -= b; }

  friend bool operator==(const BitVec&, const BitVec&) = default;

  // Orders vectors of equal length as unsigned integers (bit i has weight
  // 2^i). Independent of the word width.
  friend std::strong_ordering compare_as_integer(const BitVec& a, const BitVec& b);

  std::vector<std::size_t> indices() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w != 0) {
        fn(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const;

 private:
  void check_same_length(const BitVec& other) const;
  void clear_padding();

  std::size_t length_ = 0;
  std::vector<Word> words_;
};

// Index sets into a context. ObjSet has length |G|, AttrSet has length |M|.
using ObjSet = BitVec;
using AttrSet = BitVec;

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

// "{0,3,4}" with 0-based indices.
std::string to_string(const BitVec& v);

}  // namespace fca
