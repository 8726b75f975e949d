#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace charvar {

/// Raised for malformed words, presentations and polynomial text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A word in the free group F_r. Letter i > 0 is the generator X_i and -i is
/// its inverse. Words are stored exactly as given; free reduction is explicit.
class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(std::vector<int> letters, int rank);

  /// The identity element of F_rank.
  static FreeWord identity(int rank);
  /// The single generator X_index.
  static FreeWord generator(int index, int rank);

  const std::vector<int>& letters() const { return letters_; }
  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  bool is_freely_reduced() const;
  bool is_positive() const;

  /// Letter syntax, lowercase for generators and uppercase for inverses.
  /// Requires rank <= 26.
  std::string to_letters() const;
  /// Bracketed integer syntax, e.g. "[1,2,-3,1]".
  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<int> letters_;
  int rank_ = 1;
};

/// Abelianized exponents of a word, plus their reduction mod 2.
struct DegreeVector {
  std::vector<int> entries;
  std::vector<std::uint8_t> mod2;

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

/// Parses letter syntax ("aabbaaBaB"), a bracketed integer list
/// ("[1,2,-3,1]") or the Word[...] form ("Word[1,2,-3,1]").
FreeWord parse_word(std::string_view text, int rank);

FreeWord invert(const FreeWord& w);
FreeWord free_reduce(const FreeWord& w);
/// Free reduction followed by removal of cancelling first/last letters.
FreeWord cyclic_reduce(const FreeWord& w);
/// Concatenation followed by free reduction.
FreeWord concat(const FreeWord& u, const FreeWord& v);
FreeWord rotate(const FreeWord& w, std::size_t k);
/// Lexicographically least rotation of a positive word; the earliest offset
/// wins ties.
FreeWord cyclic_min(const FreeWord& w);
DegreeVector degree(const FreeWord& w, int rank);
DegreeVector operator+(const DegreeVector& a, const DegreeVector& b);

}  // namespace charvar

template <>
struct std::hash<charvar::FreeWord> {
  std::size_t operator()(const charvar::FreeWord& w) const noexcept;
};
