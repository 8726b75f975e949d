#include "charvar/traces.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace charvar {
namespace {

struct LettersHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x + 1024) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class TraceCache {
 public:
  std::optional<TracePolynomial> find(const std::vector<int>& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void store(const std::vector<int>& key, const TracePolynomial& value) {
    std::unique_lock lock(mutex_);
    map_.insert_or_assign(key, value);
  }
  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::vector<int>, TracePolynomial, LettersHash> map_;
};

TraceCache& cache() {
  static TraceCache instance;
  return instance;
}

std::vector<int> cyclically_reduced(const std::vector<int>& letters) {
  std::vector<int> stack;
  stack.reserve(letters.size());
  for (int x : letters) {
    if (!stack.empty() && stack.back() == -x)
      stack.pop_back();
    else
      stack.push_back(x);
  }
  std::size_t lo = 0, hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == -stack[hi - 1]) {
    ++lo;
    --hi;
  }
  return {stack.begin() + static_cast<std::ptrdiff_t>(lo), stack.begin() + static_cast<std::ptrdiff_t>(hi)};
}

// Offset of the lexicographically least rotation (earliest on ties).
std::size_t least_rotation(const std::vector<int>& s) {
  const std::size_t n = s.size();
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
  return best;
}

std::vector<int> rotated(const std::vector<int>& s, std::size_t k) {
  std::vector<int> out(s);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k), out.end());
  return out;
}

TracePolynomial var(std::initializer_list<int> idx) { return TracePolynomial(TraceVariable(idx)); }

std::vector<int> join(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<int> slice(const std::vector<int>& s, std::size_t from, std::size_t to) {
  return {s.begin() + static_cast<std::ptrdiff_t>(from), s.begin() + static_cast<std::ptrdiff_t>(to)};
}

TracePolynomial reduce_letters(const std::vector<int>& letters);

// tr(X Y Z) for distinct generators, expressed in sorted trace variables.
TracePolynomial three_letter_trace(int a, int b, int c) {
  std::array<int, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  const int i = s[0], j = s[1], k = s[2];
  // Cyclic order (i j k) is the sorted variable; the opposite orientation is
  // P - t_{ijk} with P = t_i t_jk + t_j t_ik + t_k t_ij - t_i t_j t_k.
  bool even = (a == i && b == j) || (a == j && b == k) || (a == k && b == i);
  TracePolynomial t_ijk = var({i, j, k});
  if (even) return t_ijk;
  TracePolynomial p = var({i}) * var({j, k}) + var({j}) * var({i, k}) + var({k}) * var({i, j}) -
                      var({i}) * var({j}) * var({k});
  return p - t_ijk;
}

// Applies the rewrite rules to a canonical, cyclically reduced, nonempty word.
TracePolynomial rewrite(const std::vector<int>& w) {
  const std::size_t n = w.size();

  // Inverse letters: the canonical word starts with its least (negative) letter.
  auto neg = std::find_if(w.begin(), w.end(), [](int x) { return x < 0; });
  if (neg != w.end()) {
    const std::size_t start = static_cast<std::size_t>(neg - w.begin());
    std::size_t end = start;
    while (end < n && w[end] == w[start]) ++end;
    const int x = -w[start];
    std::vector<int> power(end - start, x);
    std::vector<int> u = slice(w, 0, start), v = slice(w, end, n);
    return reduce_letters(power) * reduce_letters(join({v, u})) - reduce_letters(join({u, power, v}));
  }

  // Squares: tr(U X X V) = tr(X) tr(X V U) - tr(V U).
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (w[i] == w[i + 1]) {
      std::vector<int> u = slice(w, 0, i), v = slice(w, i + 2, n);
      const int x = w[i];
      return reduce_letters({x}) * reduce_letters(join({{x}, v, u})) - reduce_letters(join({v, u}));
    }
  }
  if (n >= 2 && w.front() == w.back()) {
    // square straddling the end: X V X with V = w[1..n-1)
    std::vector<int> v = slice(w, 1, n - 1);
    const int x = w.front();
    return reduce_letters({x}) * reduce_letters(join({{x}, v})) - reduce_letters(v);
  }

  if (n == 1) return var({w[0]});
  if (n == 2) return var({std::min(w[0], w[1]), std::max(w[0], w[1])});
  if (n == 3) return three_letter_trace(w[0], w[1], w[2]);

  // Four-term identity with X, Y, Z single letters and W the remaining suffix.
  const std::vector<int> X{w[0]}, Y{w[1]}, Z{w[2]};
  const std::vector<int> W = slice(w, 3, n);
  auto tr = [](const std::vector<int>& s) { return reduce_letters(s); };
  TracePolynomial sum = tr(X) * tr(Y) * tr(Z) * tr(W);
  sum += tr(X) * tr(join({Y, Z, W}));
  sum += tr(Y) * tr(join({X, Z, W}));
  sum += tr(Z) * tr(join({X, Y, W}));
  sum += tr(W) * tr(join({X, Y, Z}));
  sum -= tr(join({X, Z})) * tr(join({Y, W}));
  sum += tr(join({X, W})) * tr(join({Y, Z}));
  sum += tr(join({X, Y})) * tr(join({Z, W}));
  sum -= tr(X) * tr(Y) * tr(join({Z, W}));
  sum -= tr(X) * tr(W) * tr(join({Y, Z}));
  sum -= tr(Y) * tr(Z) * tr(join({X, W}));
  sum -= tr(Z) * tr(W) * tr(join({X, Y}));
  sum.scale(Rational(1, 2));
  return sum;
}

TracePolynomial reduce_letters(const std::vector<int>& letters) {
  std::vector<int> key = canonical_trace_word(letters);
  if (key.empty()) return TracePolynomial(2);
  if (auto hit = cache().find(key)) return *hit;
  TracePolynomial result = rewrite(key);
  cache().store(key, result);
  return result;
}

}  // namespace

std::vector<int> canonical_trace_word(const std::vector<int>& letters) {
  std::vector<int> w = cyclically_reduced(letters);
  if (w.empty()) return w;
  std::vector<int> inv(w.rbegin(), w.rend());
  for (int& x : inv) x = -x;
  auto negatives = [](const std::vector<int>& s) {
    return std::count_if(s.begin(), s.end(), [](int x) { return x < 0; });
  };
  auto nw = negatives(w), ni = negatives(inv);
  std::vector<int> a = rotated(w, least_rotation(w));
  if (nw < ni) return a;
  std::vector<int> b = rotated(inv, least_rotation(inv));
  if (ni < nw) return b;
  return std::min(a, b);
}

TracePolynomial reduce_trace(const std::vector<int>& letters) { return reduce_letters(letters); }

TracePolynomial reduce_trace(const FreeWord& w) { return reduce_letters(w.letters()); }

void clear_trace_cache() { cache().clear(); }

std::size_t trace_cache_size() { return cache().size(); }

// ---------------------------------------------------------------------------
// MatrixExpr

MatrixExpr MatrixExpr::identity(int rank, const TracePolynomial& coefficient) {
  MatrixExpr e(rank);
  e.add(FreeWord::identity(rank), coefficient);
  return e;
}

MatrixExpr MatrixExpr::word(const FreeWord& w, const TracePolynomial& coefficient) {
  MatrixExpr e(w.rank());
  e.add(w, coefficient);
  return e;
}

TracePolynomial MatrixExpr::coefficient(const FreeWord& w) const {
  auto it = terms_.find(free_reduce(w));
  return it == terms_.end() ? TracePolynomial() : it->second;
}

MatrixExpr& MatrixExpr::add(const FreeWord& w, const TracePolynomial& coefficient) {
  if (w.rank() != rank_) throw std::invalid_argument("MatrixExpr: rank mismatch");
  if (coefficient.is_zero()) return *this;
  FreeWord key = free_reduce(w);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coefficient);
  } else {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

MatrixExpr& MatrixExpr::operator+=(const MatrixExpr& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

MatrixExpr& MatrixExpr::operator-=(const MatrixExpr& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

MatrixExpr MatrixExpr::scaled(const TracePolynomial& factor) const {
  MatrixExpr out(rank_);
  for (const auto& [w, c] : terms_) out.add(w, c * factor);
  return out;
}

TracePolynomial trace_of_expr(const MatrixExpr& e) {
  TracePolynomial sum;
  for (const auto& [w, c] : e.terms()) sum += c * reduce_trace(w);
  return sum;
}

MatrixExpr expr_mul(const MatrixExpr& a, const MatrixExpr& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("expr_mul: rank mismatch");
  MatrixExpr out(a.rank());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add(concat(wa, wb), ca * cb);
  return out;
}

MatrixExpr traceless(int i, int rank) {
  if (i < 1 || i > rank) throw std::out_of_range("traceless: generator index out of range");
  MatrixExpr z = MatrixExpr::word(FreeWord::generator(i, rank));
  z.add(FreeWord::identity(rank), TracePolynomial(TraceVariable{i}).scaled(Rational(-1, 2)));
  return z;
}

MatrixExpr s3(const MatrixExpr& a, const MatrixExpr& b, const MatrixExpr& c) {
  MatrixExpr out = a * b * c;
  out -= a * c * b;
  out -= b * a * c;
  out += b * c * a;
  out += c * a * b;
  out -= c * b * a;
  return out;
}

}  // namespace charvar
