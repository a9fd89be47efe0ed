#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "circles/forest.hpp"

namespace circles {

// A bijection of strand positions, stored 0-based: position i goes to
// image(i).  Printed 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;
  // Number of inverted pairs.
  std::size_t length() const;
  std::string to_string() const;  // "[3,1,2]"

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

 private:
  std::vector<std::size_t> images_;
};

// First apply a, then b.
Permutation compose(const Permutation& a, const Permutation& b);

// Word in Artin generators; letter +i is sigma_i, -i its inverse
// (1 <= i <= strands - 1).  Letters act left to right.
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(std::size_t strands, std::vector<int> letters);

  std::size_t strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  long exponent_sum() const;
  std::string to_string() const;  // "1,2,-1"

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::size_t strands_ = 0;
  std::vector<int> letters_;
};

// Parses "1,2,-1" (empty text is the identity).  Throws Error(ParseError).
BraidWord parse_braid(std::size_t strands, std::string_view text);

Permutation permutation_of(const BraidWord& w);

// Delta^infimum * factors[0] * ... with each factor a permutation braid,
// none trivial or equal to Delta, consecutive pairs left-weighted.
struct GarsideNormalForm {
  std::size_t strands = 0;
  long infimum = 0;
  std::vector<Permutation> factors;

  std::string to_string() const;
  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

GarsideNormalForm normal_form(const BraidWord& w);
// A word spelling the normal form.
BraidWord to_word(const GarsideNormalForm& nf);
// Positive word for the permutation braid of p (each pair of strands crosses
// at most once, positively).
BraidWord permutation_braid(const Permutation& p);

// Throws Error(StrandMismatch).
bool braids_equal(const BraidWord& a, const BraidWord& b);

// Dehornoy handle reduction: returns an equivalent word that is empty iff the
// input is the identity braid.
BraidWord handle_reduce(const BraidWord& w);

bool is_pure(const BraidWord& w);
// Throws Error(PartitionMismatch) when the partition does not cover exactly
// the strands.
bool in_block_subgroup(const BraidWord& w, const TypePartition& partition);

}  // namespace circles
