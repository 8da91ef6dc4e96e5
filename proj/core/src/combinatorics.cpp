#include "heiscat/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace heiscat {

namespace {

// Shared by the partition and permutation literal readers.
class IntListReader {
 public:
  IntListReader(std::string_view text, char open, char close)
      : text_(text), open_(open), close_(close) {}

  std::vector<int> read() {
    skip_space();
    expect(open_);
    std::vector<int> values;
    skip_space();
    if (peek() == close_) {
      ++pos_;
    } else {
      for (;;) {
        skip_space();
        values.push_back(read_int());
        skip_space();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(close_);
        break;
      }
    }
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
    return values;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  int read_int() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a positive integer", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  char open_;
  char close_;
  std::size_t pos_ = 0;
};

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw PreconditionError("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw PreconditionError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition Partition::row(int n) { return n == 0 ? Partition() : Partition({n}); }

Partition Partition::conjugate() const {
  std::vector<int> conj;
  for (int j = 1; j <= (empty() ? 0 : parts_.front()); ++j) {
    int count = 0;
    for (int p : parts_)
      if (p >= j) ++count;
    conj.push_back(count);
  }
  return Partition(std::move(conj));
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  std::sort(all.begin(), all.end(), std::greater<>());
  return Partition(std::move(all));
}

bool Partition::remove_part(int part, Partition& out) const {
  auto it = std::find(parts_.begin(), parts_.end(), part);
  if (it == parts_.end()) return false;
  std::vector<int> rest = parts_;
  rest.erase(rest.begin() + (it - parts_.begin()));
  out = Partition(std::move(rest));
  return true;
}

bool Partition::dominates(const Partition& other) const {
  int a = 0;
  int b = 0;
  const std::size_t len = std::max(parts_.size(), other.parts_.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += (*this)[i];
    b += other[i];
    if (a < b) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Partition Partition::parse(std::string_view text) {
  auto values = IntListReader(text, '[', ']').read();
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i] < values[i + 1]) throw ParseError("partition parts must be weakly decreasing", 0);
  for (int v : values)
    if (v < 1) throw ParseError("partition parts must be positive", 0);
  return Partition(std::move(values));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // Reverse lexicographic: the larger word comes first.
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                a.parts_.begin(), a.parts_.end());
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto ps = partitions_of(n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

Integer centralizer_order(const Partition& cycle_type) {
  Integer z = 1;
  const auto& parts = cycle_type.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int multiplicity = static_cast<int>(j - i);
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]),
                  static_cast<unsigned long>(multiplicity));
    z *= power * factorial(multiplicity);
    i = j;
  }
  return z;
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > rank() || seen[static_cast<std::size_t>(v)])
      throw PreconditionError("one-line notation must be a bijection of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  Permutation p;
  p.one_line_ = std::move(w);
  return p;
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) throw PreconditionError("simple transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.one_line_[static_cast<std::size_t>(i - 1)], p.one_line_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::longest(int n) {
  Permutation p = identity(n);
  std::reverse(p.one_line_.begin(), p.one_line_.end());
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < rank(); ++i)
    if (one_line_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p = identity(rank());
  for (int i = 1; i <= rank(); ++i) p.one_line_[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return p;
}

Permutation Permutation::embedded(int m) const {
  if (m < rank()) throw PreconditionError("cannot embed into a smaller symmetric group");
  Permutation p = *this;
  for (int i = rank() + 1; i <= m; ++i) p.one_line_.push_back(i);
  return p;
}

Permutation Permutation::restricted(int m) const {
  for (int i = m + 1; i <= rank(); ++i)
    if ((*this)(i) != i) throw PreconditionError("permutation does not fix the dropped points");
  if (m >= rank()) return embedded(m);
  Permutation p;
  p.one_line_.assign(one_line_.begin(), one_line_.begin() + m);
  return p;
}

std::size_t Permutation::index() const {
  // Lehmer code in the factorial number system.
  std::size_t idx = 0;
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (one_line_[static_cast<std::size_t>(j)] < one_line_[static_cast<std::size_t>(i)]) ++smaller;
    idx = idx * static_cast<std::size_t>(n - i) + smaller;
  }
  return idx;
}

Permutation Permutation::from_index(std::size_t index, int n) {
  std::vector<std::size_t> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::size_t>(n - i);
    digits[static_cast<std::size_t>(i)] = index % base;
    index /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  for (std::size_t d : digits) {
    w.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  Permutation p;
  p.one_line_ = std::move(w);
  return p;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(static_cast<std::size_t>(rank()) + 1, false);
  std::vector<int> cycles;
  for (int i = 1; i <= rank(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end(), std::greater<>());
  return Partition(std::move(cycles));
}

int Permutation::sign() const { return perm_length(*this) % 2 == 0 ? 1 : -1; }

std::string Permutation::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(one_line_[i]);
  }
  return s + ")";
}

Permutation Permutation::parse(std::string_view text) {
  auto values = IntListReader(text, '(', ')').read();
  try {
    return Permutation(std::move(values));
  } catch (const PreconditionError&) {
    throw ParseError("permutation literal is not a bijection of 1..n", 0);
  }
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  const int n = std::max(u.rank(), v.rank());
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = u(v(i));
  return Permutation(std::move(w));
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.str(); }

std::vector<Permutation> permutations_of(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

int perm_length(const Permutation& w) {
  int inversions = 0;
  const auto& a = w.one_line();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++inversions;
  return inversions;
}

Permutation word_eval(const GeneratorWord& word) {
  std::vector<int> w(static_cast<std::size_t>(word.n));
  std::iota(w.begin(), w.end(), 1);
  // Right-multiplying by s_i swaps positions i and i+1 of the one-line word.
  for (int letter : word.letters) {
    if (letter < 1 || letter >= word.n)
      throw PreconditionError("generator index " + std::to_string(letter) + " outside 1.." +
                              std::to_string(word.n - 1));
    std::swap(w[static_cast<std::size_t>(letter - 1)], w[static_cast<std::size_t>(letter)]);
  }
  return Permutation(std::move(w));
}

bool is_reduced(const GeneratorWord& word) {
  return perm_length(word_eval(word)) == static_cast<int>(word.letters.size());
}

GeneratorWord reduced_word(const Permutation& w) {
  GeneratorWord word{{}, w.rank()};
  std::vector<int> a = w.one_line();
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < a.size() && a[i] < a[i + 1]) ++i;
    if (i + 1 >= a.size()) break;
    std::swap(a[i], a[i + 1]);
    word.letters.push_back(static_cast<int>(i) + 1);
  }
  std::reverse(word.letters.begin(), word.letters.end());
  return word;
}

Permutation coset_representative(int i, int n) {
  Permutation c = Permutation::identity(n + 1);
  for (int j = i; j <= n; ++j) c = c * Permutation::simple(j, n + 1);
  return c;
}

CosetDecomposition coset_decompose(const Permutation& w) {
  const int n = w.rank() - 1;
  if (n < 0) throw PreconditionError("coset_decompose needs a permutation of rank >= 1");
  const int i = w(n + 1);
  Permutation rest = coset_representative(i, n).inverse() * w;
  return {i, rest.restricted(n)};
}

}  // namespace heiscat
