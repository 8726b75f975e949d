#include "charvar/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace charvar {

FreeWord::FreeWord(std::vector<int> letters, int rank)
    : letters_(std::move(letters)), rank_(rank) {
  if (rank_ < 1) throw std::invalid_argument("word rank must be positive");
  for (int x : letters_) {
    if (x == 0) throw std::invalid_argument("word letter 0 is not a generator");
    if (std::abs(x) > rank_)
      throw std::invalid_argument("word letter " + std::to_string(x) +
                                  " exceeds rank " + std::to_string(rank_));
  }
}

FreeWord FreeWord::identity(int rank) { return FreeWord({}, rank); }

FreeWord FreeWord::generator(int index, int rank) { return FreeWord({index}, rank); }

bool FreeWord::is_freely_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == -letters_[i - 1]) return false;
  return true;
}

bool FreeWord::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(), [](int x) { return x > 0; });
}

std::string FreeWord::to_letters() const {
  if (rank_ > 26) throw std::invalid_argument("letter syntax supports rank <= 26");
  std::string out;
  out.reserve(letters_.size());
  for (int x : letters_)
    out.push_back(static_cast<char>(x > 0 ? 'a' + x - 1 : 'A' - x - 1));
  return out;
}

std::string FreeWord::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out + "]";
}

namespace {

FreeWord parse_integer_list(std::string_view text, int rank) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.substr(pos, 4) == "Word") {
    pos += 4;
    skip_ws();
  }
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '[' in word");
  ++pos;
  std::vector<int> letters;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      skip_ws();
      int value = 0;
      const char* first = text.data() + pos;
      const char* last = text.data() + text.size();
      if (pos < text.size() && text[pos] == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr == first)
        throw ParseError("malformed integer in word '" + std::string(text) + "'");
      pos = static_cast<std::size_t>(ptr - text.data());
      if (value == 0) throw ParseError("word index 0 is not a generator");
      if (std::abs(value) > rank)
        throw ParseError("word index " + std::to_string(value) + " exceeds rank " +
                         std::to_string(rank));
      letters.push_back(value);
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated word bracket");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ']') {
        ++pos;
        break;
      }
      throw ParseError(std::string("unexpected character '") + text[pos] + "' in word");
    }
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after word");
  return FreeWord(std::move(letters), rank);
}

}  // namespace

FreeWord parse_word(std::string_view text, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return FreeWord::identity(rank);
  auto last = text.find_last_not_of(" \t\r\n");
  std::string_view body = text.substr(first, last - first + 1);
  if (body.front() == '[' || (body.starts_with("Word") && body.find('[') != std::string_view::npos))
    return parse_integer_list(body, rank);

  std::vector<int> letters;
  letters.reserve(body.size());
  for (char c : body) {
    int value = 0;
    if (c >= 'a' && c <= 'z') {
      value = c - 'a' + 1;
    } else if (c >= 'A' && c <= 'Z') {
      value = -(c - 'A' + 1);
    } else {
      throw ParseError(std::string("unknown character '") + c + "' in word");
    }
    if (std::abs(value) > rank)
      throw ParseError(std::string("letter '") + c + "' exceeds rank " + std::to_string(rank));
    letters.push_back(value);
  }
  return FreeWord(std::move(letters), rank);
}

FreeWord invert(const FreeWord& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  for (int& x : out) x = -x;
  return FreeWord(std::move(out), w.rank());
}

FreeWord free_reduce(const FreeWord& w) {
  std::vector<int> stack;
  stack.reserve(w.size());
  for (int x : w.letters()) {
    if (!stack.empty() && stack.back() == -x)
      stack.pop_back();
    else
      stack.push_back(x);
  }
  return FreeWord(std::move(stack), w.rank());
}

FreeWord cyclic_reduce(const FreeWord& w) {
  auto reduced = free_reduce(w).letters();
  std::size_t lo = 0, hi = reduced.size();
  while (hi - lo >= 2 && reduced[lo] == -reduced[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord(std::vector<int>(reduced.begin() + static_cast<std::ptrdiff_t>(lo),
                                   reduced.begin() + static_cast<std::ptrdiff_t>(hi)),
                  w.rank());
}

FreeWord concat(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("concat: rank mismatch (" + std::to_string(u.rank()) + " vs " +
                                std::to_string(v.rank()) + ")");
  std::vector<int> joined = u.letters();
  joined.insert(joined.end(), v.letters().begin(), v.letters().end());
  return free_reduce(FreeWord(std::move(joined), u.rank()));
}

FreeWord rotate(const FreeWord& w, std::size_t k) {
  if (w.empty()) return w;
  std::vector<int> out = w.letters();
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
  return FreeWord(std::move(out), w.rank());
}

FreeWord cyclic_min(const FreeWord& w) {
  if (!w.is_positive()) throw std::invalid_argument("cyclic_min: word has a negative letter");
  const auto& s = w.letters();
  const std::size_t n = s.size();
  if (n == 0) return w;
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      int a = s[(k + i) % n], b = s[(best + i) % n];
      if (a != b) {
        if (a < b) best = k;
        break;
      }
    }
  }
  return rotate(w, best);
}

DegreeVector degree(const FreeWord& w, int rank) {
  DegreeVector d;
  d.entries.assign(static_cast<std::size_t>(rank), 0);
  for (int x : w.letters()) {
    if (std::abs(x) > rank) throw std::invalid_argument("degree: letter exceeds rank");
    d.entries[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
  }
  d.mod2.resize(d.entries.size());
  for (std::size_t k = 0; k < d.entries.size(); ++k)
    d.mod2[k] = static_cast<std::uint8_t>(d.entries[k] & 1);
  return d;
}

DegreeVector operator+(const DegreeVector& a, const DegreeVector& b) {
  if (a.entries.size() != b.entries.size())
    throw std::invalid_argument("degree vectors of different length");
  DegreeVector d;
  d.entries.resize(a.entries.size());
  d.mod2.resize(a.entries.size());
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    d.entries[k] = a.entries[k] + b.entries[k];
    d.mod2[k] = static_cast<std::uint8_t>(d.entries[k] & 1);
  }
  return d;
}

}  // namespace charvar

std::size_t std::hash<charvar::FreeWord>::operator()(const charvar::FreeWord& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.rank());
  for (int x : w.letters())
    h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
