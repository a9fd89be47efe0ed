#include "circles/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "circles/error.hpp"

namespace circles {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

std::size_t Permutation::length() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) n += images_[i] > images_[j];
  }
  return n;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i] + 1);
  }
  return out + "]";
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::StrandMismatch, "permutations of different sizes");
  std::vector<std::size_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b(a(i));
  return Permutation(std::move(out));
}

BraidWord::BraidWord(std::size_t strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  for (int l : letters_) {
    if (l == 0 || static_cast<std::size_t>(std::abs(l)) >= strands_) {
      throw Error(ErrorCode::InvalidArgument,
                  "generator " + std::to_string(l) + " out of range for " + std::to_string(strands_) + " strands");
    }
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return BraidWord(strands_, std::move(out));
}

long BraidWord::exponent_sum() const {
  long s = 0;
  for (int l : letters_) s += l > 0 ? 1 : -1;
  return s;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands_ != b.strands_) {
    throw Error(ErrorCode::StrandMismatch, std::to_string(a.strands_) + " vs " + std::to_string(b.strands_) + " strands");
  }
  std::vector<int> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(a.strands_, std::move(out));
}

BraidWord parse_braid(std::size_t strands, std::string_view text) {
  std::vector<int> letters;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) return BraidWord(strands, {});
  while (true) {
    skip();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos || pos - digits > 9) {
      throw Error(ErrorCode::ParseError, "expected a signed generator at position " + std::to_string(start));
    }
    letters.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    skip();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw Error(ErrorCode::ParseError, "expected ',' at position " + std::to_string(pos));
    ++pos;
  }
  try {
    return BraidWord(strands, std::move(letters));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Permutation permutation_of(const BraidWord& w) {
  // pos_of[s] = current position of the strand that started at s
  std::vector<std::size_t> strand_at(w.strands());
  for (std::size_t i = 0; i < strand_at.size(); ++i) strand_at[i] = i;
  for (int l : w.letters()) {
    std::size_t k = static_cast<std::size_t>(std::abs(l)) - 1;
    std::swap(strand_at[k], strand_at[k + 1]);
  }
  std::vector<std::size_t> images(w.strands());
  for (std::size_t pos = 0; pos < strand_at.size(); ++pos) images[strand_at[pos]] = pos;
  return Permutation(std::move(images));
}

namespace {

// Simple elements are handled as raw image vectors for speed.
using Simple = std::vector<std::size_t>;

Simple delta(std::size_t n) {
  Simple d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = n - 1 - i;
  return d;
}

bool is_identity(const Simple& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

// Conjugation by Delta: sigma_i <-> sigma_{n-i}.
Simple tau(const Simple& p) {
  const std::size_t n = p.size();
  Simple q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = n - 1 - p[n - 1 - i];
  return q;
}

// a = a' sigma_{k+1}: the strands ending at k and k+1 have crossed.
bool right_descent(const Simple& a_inv, std::size_t k) { return a_inv[k] > a_inv[k + 1]; }
// b = sigma_{k+1} b': the strands starting at k and k+1 cross.
bool left_descent(const Simple& b, std::size_t k) { return b[k] > b[k + 1]; }

Simple inverse_of(const Simple& p) {
  Simple inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

// Moves generators from the front of b to the back of a until S(b) is
// contained in F(a).  Returns whether anything moved.
bool make_left_weighted(Simple& a, Simple& b) {
  const std::size_t n = a.size();
  bool changed = false;
  Simple a_inv = inverse_of(a);
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (left_descent(b, k) && !right_descent(a_inv, k)) {
        // a <- a sigma_k : positions k, k+1 swapped after a
        for (std::size_t i = 0; i < n; ++i) {
          if (a[i] == k) a[i] = k + 1;
          else if (a[i] == k + 1) a[i] = k;
        }
        std::swap(a_inv[k], a_inv[k + 1]);
        // b <- sigma_k^{-1} b : b now starts from the swapped positions
        std::swap(b[k], b[k + 1]);
        moved = true;
        changed = true;
      }
    }
  }
  return changed;
}

class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(std::size_t n) : n_(n), delta_(delta(n)) {}

  void multiply_generator(int letter) {
    const std::size_t k = static_cast<std::size_t>(std::abs(letter)) - 1;
    if (letter > 0) {
      Simple s(n_);
      for (std::size_t i = 0; i < n_; ++i) s[i] = i;
      std::swap(s[k], s[k + 1]);
      append(std::move(s));
    } else {
      // sigma_k^{-1} = x Delta^{-1} with x = sigma_k^{-1} Delta a simple element.
      Simple x(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        std::size_t j = i == k ? k + 1 : (i == k + 1 ? k : i);
        x[i] = delta_[j];
      }
      append(std::move(x));
      --infimum_;
      for (auto& f : factors_) f = tau(f);
    }
  }

  GarsideNormalForm finish() const {
    GarsideNormalForm nf;
    nf.strands = n_;
    nf.infimum = n_ <= 1 ? 0 : infimum_;
    for (const auto& f : factors_) nf.factors.emplace_back(f);
    return nf;
  }

 private:
  void append(Simple s) {
    if (is_identity(s)) return;
    factors_.push_back(std::move(s));
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = factors_.size() - 1; i-- > 0;) {
        if (make_left_weighted(factors_[i], factors_[i + 1])) changed = true;
      }
    }
    while (!factors_.empty() && is_identity(factors_.back())) factors_.pop_back();
    std::size_t leading = 0;
    while (leading < factors_.size() && factors_[leading] == delta_) ++leading;
    if (leading) {
      factors_.erase(factors_.begin(), factors_.begin() + static_cast<long>(leading));
      infimum_ += static_cast<long>(leading);
    }
  }

  std::size_t n_;
  Simple delta_;
  long infimum_ = 0;
  std::vector<Simple> factors_;
};

}  // namespace

std::string GarsideNormalForm::to_string() const {
  std::ostringstream out;
  out << "D^" << infimum;
  for (const auto& f : factors) out << " " << f.to_string();
  return out.str();
}

GarsideNormalForm normal_form(const BraidWord& w) {
  NormalFormBuilder builder(w.strands());
  for (int l : w.letters()) builder.multiply_generator(l);
  return builder.finish();
}

BraidWord permutation_braid(const Permutation& p) {
  std::vector<std::size_t> targets = p.images();
  std::vector<int> letters;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < targets.size(); ++k) {
      if (targets[k] > targets[k + 1]) {
        std::swap(targets[k], targets[k + 1]);
        letters.push_back(static_cast<int>(k + 1));
        swapped = true;
      }
    }
  }
  return BraidWord(p.size(), std::move(letters));
}

BraidWord to_word(const GarsideNormalForm& nf) {
  BraidWord out(nf.strands, {});
  if (nf.strands >= 2) {
    BraidWord d = permutation_braid(Permutation(delta(nf.strands)));
    BraidWord step = nf.infimum >= 0 ? d : d.inverse();
    for (long i = 0; i < std::labs(nf.infimum); ++i) out = out * step;
  }
  for (const auto& f : nf.factors) out = out * permutation_braid(f);
  return out;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw Error(ErrorCode::StrandMismatch, std::to_string(a.strands()) + " vs " + std::to_string(b.strands()) + " strands");
  }
  return normal_form(a) == normal_form(b);
}

BraidWord handle_reduce(const BraidWord& w) {
  std::vector<int> word = w.letters();
  while (true) {
    // The handle with the leftmost right end contains no other handle.
    std::size_t hs = 0, he = 0;
    bool found = false;
    for (std::size_t j = 0; j < word.size() && !found; ++j) {
      const int gen = std::abs(word[j]);
      for (std::size_t k = j; k-- > 0;) {
        const int g = std::abs(word[k]);
        if (g == gen) {
          if ((word[k] > 0) != (word[j] > 0)) {
            hs = k;
            he = j;
            found = true;
          }
          break;
        }
        if (g < gen) break;
      }
    }
    if (!found) break;
    const int e = word[hs] > 0 ? 1 : -1;
    const int i = std::abs(word[hs]);
    std::vector<int> replacement;
    for (std::size_t k = hs + 1; k < he; ++k) {
      const int x = word[k];
      if (std::abs(x) == i + 1) {
        const int d = x > 0 ? 1 : -1;
        replacement.push_back(-e * (i + 1));
        replacement.push_back(d * i);
        replacement.push_back(e * (i + 1));
      } else {
        replacement.push_back(x);
      }
    }
    std::vector<int> next(word.begin(), word.begin() + static_cast<long>(hs));
    next.insert(next.end(), replacement.begin(), replacement.end());
    next.insert(next.end(), word.begin() + static_cast<long>(he) + 1, word.end());
    word = std::move(next);
  }
  return BraidWord(w.strands(), std::move(word));
}

bool is_pure(const BraidWord& w) { return permutation_of(w).is_identity(); }

bool in_block_subgroup(const BraidWord& w, const TypePartition& partition) {
  const std::size_t n = w.strands();
  std::vector<bool> seen(n, false);
  for (const auto& block : partition.blocks) {
    for (std::size_t s : block) {
      if (s < 1 || s > n || seen[s - 1]) throw Error(ErrorCode::PartitionMismatch, "partition does not match strand count");
      seen[s - 1] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorCode::PartitionMismatch, "partition does not cover every strand");
  }
  const Permutation p = permutation_of(w);
  for (const auto& block : partition.blocks) {
    for (std::size_t s : block) {
      if (std::find(block.begin(), block.end(), p(s - 1) + 1) == block.end()) return false;
    }
  }
  return true;
}

}  // namespace circles
