#include "heiscat/symfunc.hpp"

#include <algorithm>
#include <climits>
#include <memory>
#include <mutex>
#include <tuple>

#include "heiscat/linalg.hpp"

namespace heiscat {

struct SymAccess {
  // Skips the integrality check; used for intermediate rational results.
  static SymFunc raw(Basis basis, SymFunc::Terms terms) {
    SymFunc f(basis);
    for (auto& [lambda, c] : terms)
      if (c != 0) f.terms_.emplace(lambda, std::move(c));
    return f;
  }
};

namespace {

using Terms = SymFunc::Terms;

void add_to(Terms& terms, const Partition& lambda, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

void check_integral(Basis basis, const Terms& terms) {
  if (basis == Basis::powersum) return;
  for (const auto& [lambda, c] : terms)
    if (!is_integral(c))
      throw NonIntegralResult("coefficient " + to_string(c) + " of " + lambda.str() + " in the " +
                              basis_name(basis) + " basis");
}

// ---- transition matrices -------------------------------------------------

// Number of matrices with row sums `rows`, column sums `cols` and entries in
// 0..cap.  With cap = INT_MAX this is <h_rows, x^cols>, with cap = 1 it is
// the e-basis coefficient.
class MatrixCounter {
 public:
  MatrixCounter(const std::vector<int>& rows, int cap) : rows_(rows), cap_(cap) {}

  Integer count(std::vector<int> cols) { return rec(0, cols); }

 private:
  Integer rec(std::size_t row, const std::vector<int>& remaining) {
    // Only the multiset of remaining column sums matters.
    std::vector<int> cols;
    for (int c : remaining)
      if (c != 0) cols.push_back(c);
    if (row == rows_.size()) return cols.empty() ? 1 : 0;
    std::sort(cols.rbegin(), cols.rend());
    auto key = std::make_pair(row, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Integer total = 0;
    fill(row, 0, rows_[row], cols, total);
    memo_.emplace(std::move(key), total);
    return total;
  }

  void fill(std::size_t row, std::size_t col, int left, std::vector<int>& cols, Integer& total) {
    if (left == 0) {
      total += rec(row + 1, cols);
      return;
    }
    if (col == cols.size()) return;
    const int most = std::min({left, cols[col], cap_});
    for (int take = most; take >= 0; --take) {
      cols[col] -= take;
      fill(row, col + 1, left - take, cols, total);
      cols[col] += take;
    }
  }

  std::vector<int> rows_;
  int cap_;
  std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo_;
};

// Ways to place each part of lambda in one column so that column j sums to
// nu_j: the coefficient of m_nu in p_lambda.
Integer count_part_assignments(const std::vector<int>& parts, std::size_t i, std::vector<int>& cols) {
  if (i == parts.size()) {
    for (int c : cols)
      if (c != 0) return 0;
    return 1;
  }
  Integer total = 0;
  for (int& c : cols) {
    if (c < parts[i]) continue;
    c -= parts[i];
    total += count_part_assignments(parts, i + 1, cols);
    c += parts[i];
  }
  return total;
}

// h-polynomials: products of h_k keyed by the multiset of k's.
using HPoly = std::map<Partition, Integer>;

HPoly jacobi_trudi(const Partition& lambda) {
  const int n = lambda.length() + 1;
  // Laplace expansion along rows; the memo key is the set of used columns.
  std::map<unsigned, HPoly> memo;
  auto expand = [&](auto&& self, int row, unsigned used) -> HPoly {
    if (row == n) return HPoly{{Partition(), 1}};
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    HPoly result;
    int passed = 0;
    for (int j = 0; j < n; ++j) {
      if (used & (1u << j)) {
        ++passed;
        continue;
      }
      const int k = lambda[static_cast<std::size_t>(row)] - row + j;
      if (k < 0) continue;
      const int sign = (j - passed) % 2 == 0 ? 1 : -1;
      HPoly minor = self(self, row + 1, used | (1u << j));
      const Partition hk = Partition::row(k);
      for (const auto& [mu, c] : minor) {
        Integer& slot = result[mu.merged(hk)];
        slot += sign * c;
      }
    }
    for (auto it = result.begin(); it != result.end();) it = it->second == 0 ? result.erase(it) : std::next(it);
    memo.emplace(used, result);
    return result;
  };
  return expand(expand, 0, 0u);
}

const HPoly& jacobi_trudi_cached(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, std::unique_ptr<const HPoly>> table;
  {
    std::lock_guard lock(mutex);
    if (auto it = table.find(lambda); it != table.end()) return *it->second;
  }
  auto value = std::make_unique<const HPoly>(jacobi_trudi(lambda));
  std::lock_guard lock(mutex);
  return *table.emplace(lambda, std::move(value)).first->second;
}

Matrix compute_to_monomial(Basis b, int d) {
  const auto parts = partitions_of(d);
  const std::size_t n = parts.size();
  Matrix t(n, n);
  switch (b) {
    case Basis::monomial:
      return Matrix::identity(n);
    case Basis::complete:
    case Basis::elementary:
      for (std::size_t j = 0; j < n; ++j) {
        MatrixCounter counter(parts[j].parts(), b == Basis::complete ? INT_MAX : 1);
        for (std::size_t i = 0; i < n; ++i) t(i, j) = counter.count(parts[i].parts());
      }
      return t;
    case Basis::powersum:
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<int> cols = parts[i].parts();
          t(i, j) = count_part_assignments(parts[j].parts(), 0, cols);
        }
      return t;
    case Basis::schur: {
      std::map<Partition, std::size_t> index;
      for (std::size_t k = 0; k < n; ++k) index.emplace(parts[k], k);
      Matrix in_h(n, n);
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [mu, c] : jacobi_trudi_cached(parts[j])) in_h(index.at(mu), j) = c;
      return compute_to_monomial(Basis::complete, d) * in_h;
    }
  }
  throw PreconditionError("unknown basis");
}

// Write-once tables shared by all threads.  Values are computed outside the
// lock, so concurrent first requests may both compute; the first insert wins.
template <class Key>
class MatrixCache {
 public:
  template <class Make>
  std::shared_ptr<const Matrix> get(const Key& key, Make make) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    auto value = std::make_shared<const Matrix>(make());
    std::lock_guard lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, std::shared_ptr<const Matrix>> table_;
};

const Matrix& to_monomial(Basis b, int d) {
  static MatrixCache<std::pair<Basis, int>> cache;
  // Cached entries are never erased, so the reference stays valid.
  return *cache.get({b, d}, [&] { return compute_to_monomial(b, d); });
}

const Matrix& change_of_basis(Basis from, Basis to, int d) {
  static MatrixCache<std::tuple<Basis, Basis, int>> cache;
  return *cache.get({from, to, d}, [&] {
    if (to == Basis::monomial) return to_monomial(from, d);
    static MatrixCache<std::pair<Basis, int>> inverses;
    const Matrix& inv = *inverses.get({to, d}, [&] { return to_monomial(to, d).inverse(); });
    return inv * to_monomial(from, d);
  });
}

const std::vector<Partition>& partitions_cached(int d) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<Partition>>> table;
  std::lock_guard lock(mutex);
  auto& slot = table[d];
  if (!slot) slot = std::make_unique<const std::vector<Partition>>(partitions_of(d));
  return *slot;
}

std::size_t partition_index(const Partition& lambda) {
  const auto& ps = partitions_cached(lambda.size());
  // partitions_of is sorted ascending in the Partition order.
  return static_cast<std::size_t>(std::lower_bound(ps.begin(), ps.end(), lambda) - ps.begin());
}

Terms convert_raw(Basis from, const Terms& terms, Basis to) {
  if (from == to) return terms;
  std::map<int, std::vector<Rational>> by_degree;
  for (const auto& [lambda, c] : terms) {
    auto& v = by_degree[lambda.size()];
    if (v.empty()) v.resize(partitions_cached(lambda.size()).size());
    v[partition_index(lambda)] = c;
  }
  Terms out;
  for (const auto& [d, v] : by_degree) {
    const auto image = change_of_basis(from, to, d) * v;
    const auto& ps = partitions_cached(d);
    for (std::size_t i = 0; i < image.size(); ++i)
      if (image[i] != 0) out.emplace(ps[i], image[i]);
  }
  return out;
}

Terms product_in_multiplicative_basis(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) add_to(out, la.merged(lb), ca * cb);
  return out;
}

SymFunc finish(Basis working, Terms terms, Basis target) {
  Terms converted = convert_raw(working, terms, target);
  check_integral(target, converted);
  return SymAccess::raw(target, std::move(converted));
}

}  // namespace

// ---- basis tags ----------------------------------------------------------

char basis_letter(Basis b) {
  switch (b) {
    case Basis::monomial: return 'm';
    case Basis::elementary: return 'e';
    case Basis::complete: return 'h';
    case Basis::powersum: return 'p';
    case Basis::schur: return 's';
  }
  return '?';
}

Basis basis_from_letter(char c) {
  switch (c) {
    case 'm': return Basis::monomial;
    case 'e': return Basis::elementary;
    case 'h': return Basis::complete;
    case 'p': return Basis::powersum;
    case 's': return Basis::schur;
    default: throw PreconditionError(std::string("unknown basis letter '") + c + "'");
  }
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::monomial: return "monomial";
    case Basis::elementary: return "elementary";
    case Basis::complete: return "complete";
    case Basis::powersum: return "powersum";
    case Basis::schur: return "schur";
  }
  return "unknown";
}

// ---- SymFunc -------------------------------------------------------------

SymFunc::SymFunc(Basis basis, Terms terms) : basis_(basis) {
  for (auto& [lambda, c] : terms)
    if (c != 0) terms_.emplace(lambda, std::move(c));
  check_integral(basis_, terms_);
}

SymFunc SymFunc::term(Basis basis, const Partition& lambda, const Rational& coeff) {
  return SymFunc(basis, Terms{{lambda, coeff}});
}

Rational SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SymFunc::degree() const {
  int d = 0;
  for (const auto& [lambda, c] : terms_) d = std::max(d, lambda.size());
  return d;
}

bool SymFunc::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

SymFunc SymFunc::component(int d) const {
  Terms part;
  for (const auto& [lambda, c] : terms_)
    if (lambda.size() == d) part.emplace(lambda, c);
  return SymAccess::raw(basis_, std::move(part));
}

std::map<int, SymFunc> SymFunc::components() const {
  std::map<int, Terms> parts;
  for (const auto& [lambda, c] : terms_) parts[lambda.size()].emplace(lambda, c);
  std::map<int, SymFunc> out;
  for (auto& [d, t] : parts) out.emplace(d, SymAccess::raw(basis_, std::move(t)));
  return out;
}

SymFunc SymFunc::operator+(const SymFunc& other) const {
  Terms sum = terms_;
  for (const auto& [lambda, c] : convert_raw(other.basis_, other.terms_, basis_)) add_to(sum, lambda, c);
  check_integral(basis_, sum);
  return SymAccess::raw(basis_, std::move(sum));
}

SymFunc SymFunc::operator-(const SymFunc& other) const { return *this + (-other); }

SymFunc SymFunc::operator-() const { return *this * Rational(-1); }

SymFunc SymFunc::operator*(const Rational& scalar) const {
  Terms scaled;
  if (scalar != 0)
    for (const auto& [lambda, c] : terms_) scaled.emplace(lambda, c * scalar);
  check_integral(basis_, scaled);
  return SymAccess::raw(basis_, std::move(scaled));
}

SymFunc operator*(const Rational& scalar, const SymFunc& f) { return f * scalar; }

bool SymFunc::operator==(const SymFunc& other) const {
  if (basis_ == other.basis_) return terms_ == other.terms_;
  return convert_raw(basis_, terms_, Basis::monomial) ==
         convert_raw(other.basis_, other.terms_, Basis::monomial);
}

SymFunc m_basis(const Partition& lambda) { return SymFunc::term(Basis::monomial, lambda); }
SymFunc e_basis(const Partition& lambda) { return SymFunc::term(Basis::elementary, lambda); }
SymFunc h_basis(const Partition& lambda) { return SymFunc::term(Basis::complete, lambda); }
SymFunc p_basis(const Partition& lambda) { return SymFunc::term(Basis::powersum, lambda); }
SymFunc s_basis(const Partition& lambda) { return SymFunc::term(Basis::schur, lambda); }

// ---- conversion and products ----------------------------------------------

std::vector<std::vector<Rational>> transition_to_monomial(Basis b, int d) {
  const Matrix& t = to_monomial(b, d);
  std::vector<std::vector<Rational>> out(t.rows(), std::vector<Rational>(t.cols()));
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) out[i][j] = t(i, j);
  return out;
}

SymFunc convert(const SymFunc& f, Basis target) {
  return finish(f.basis(), f.terms(), target);
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  // h and p are multiplicative bases: products are unions of parts.
  const Basis working =
      f.basis() == Basis::powersum || g.basis() == Basis::powersum ? Basis::powersum : Basis::complete;
  Terms product = product_in_multiplicative_basis(convert_raw(f.basis(), f.terms(), working),
                                                  convert_raw(g.basis(), g.terms(), working));
  return finish(working, std::move(product), f.basis());
}

Polynomial monomial_expand(const SymFunc& f, int nvars) {
  if (nvars < 1) throw InsufficientVariables("need at least one variable");
  const auto in_m = convert_raw(f.basis(), f.terms(), Basis::monomial);
  for (const auto& [lambda, c] : in_m)
    if (lambda.length() > nvars)
      throw InsufficientVariables("m" + lambda.str() + " needs " + std::to_string(lambda.length()) +
                                  " variables, got " + std::to_string(nvars));
  Polynomial out;
  for (const auto& [lambda, c] : in_m) {
    // Distinct rearrangements of lambda padded with zeros.
    std::vector<int> alpha(lambda.parts());
    alpha.resize(static_cast<std::size_t>(nvars), 0);
    std::sort(alpha.begin(), alpha.end());
    do {
      Rational& slot = out[alpha];
      slot += c;
      if (slot == 0) out.erase(alpha);
    } while (std::next_permutation(alpha.begin(), alpha.end()));
  }
  return out;
}

Polynomial multiply_polynomials(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Monomial e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      Rational& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  return out;
}

// ---- Hopf structure -------------------------------------------------------

namespace {

using PairTerms = std::map<std::pair<Partition, Partition>, Rational>;

void add_pair(PairTerms& terms, const Partition& a, const Partition& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(std::make_pair(a, b), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

// Delta(h_lambda) = prod_i sum_k h_k (x) h_{lambda_i - k}.
PairTerms coproduct_h(const Partition& lambda) {
  PairTerms acc{{{Partition(), Partition()}, 1}};
  for (int part : lambda.parts()) {
    PairTerms next;
    for (const auto& [ab, c] : acc)
      for (int k = 0; k <= part; ++k)
        add_pair(next, ab.first.merged(Partition::row(k)), ab.second.merged(Partition::row(part - k)), c);
    acc = std::move(next);
  }
  return acc;
}

PairTerms convert_pairs(const PairTerms& terms, Basis from_l, Basis from_r, Basis to_l, Basis to_r) {
  std::map<Partition, Terms> by_right;
  for (const auto& [ab, c] : terms) by_right[ab.second][ab.first] = c;
  PairTerms stage;
  for (const auto& [b, left] : by_right)
    for (const auto& [a, c] : convert_raw(from_l, left, to_l)) add_pair(stage, a, b, c);
  std::map<Partition, Terms> by_left;
  for (const auto& [ab, c] : stage) by_left[ab.first][ab.second] = c;
  PairTerms out;
  for (const auto& [a, right] : by_left)
    for (const auto& [b, c] : convert_raw(from_r, right, to_r)) add_pair(out, a, b, c);
  return out;
}

}  // namespace

SymTensor SymTensor::in_bases(Basis l, Basis r) const {
  return SymTensor{l, r, convert_pairs(terms, left, right, l, r)};
}

bool SymTensor::operator==(const SymTensor& other) const {
  return in_bases(Basis::monomial, Basis::monomial).terms ==
         other.in_bases(Basis::monomial, Basis::monomial).terms;
}

SymTensor coproduct(const SymFunc& f) {
  PairTerms in_h;
  for (const auto& [lambda, c] : convert_raw(f.basis(), f.terms(), Basis::complete))
    for (const auto& [ab, d] : coproduct_h(lambda)) add_pair(in_h, ab.first, ab.second, c * d);
  SymTensor t{Basis::complete, Basis::complete, std::move(in_h)};
  return t.in_bases(f.basis(), f.basis());
}

Rational counit(const SymFunc& f) { return f.coeff(Partition()); }

SymFunc antipode(const SymFunc& f) {
  // S(x) = -x - sum S(x') x'' over the reduced coproduct, on h_lambda.
  std::map<Partition, Terms> memo;
  auto s_of = [&](auto&& self, const Partition& lambda) -> Terms {
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    Terms result;
    if (lambda.empty()) {
      result.emplace(Partition(), 1);
    } else {
      add_to(result, lambda, -1);
      for (const auto& [ab, c] : coproduct_h(lambda)) {
        if (ab.first.empty() || ab.second.empty()) continue;
        const Terms left = self(self, ab.first);
        for (const auto& [mu, d] : left) add_to(result, mu.merged(ab.second), -c * d);
      }
    }
    memo.emplace(lambda, result);
    return result;
  };
  Terms out;
  for (const auto& [lambda, c] : convert_raw(f.basis(), f.terms(), Basis::complete))
    for (const auto& [mu, d] : s_of(s_of, lambda)) add_to(out, mu, c * d);
  return finish(Basis::complete, std::move(out), f.basis());
}

Rational hall_pairing(const SymFunc& f, const SymFunc& g) {
  const Terms fm = convert_raw(f.basis(), f.terms(), Basis::monomial);
  const Terms gh = convert_raw(g.basis(), g.terms(), Basis::complete);
  Rational total = 0;
  for (const auto& [lambda, c] : fm)
    if (auto it = gh.find(lambda); it != gh.end()) total += c * it->second;
  return total;
}

Rational tensor_pairing(const SymTensor& x, const SymTensor& y) {
  const auto xm = x.in_bases(Basis::monomial, Basis::monomial).terms;
  const auto yh = y.in_bases(Basis::complete, Basis::complete).terms;
  Rational total = 0;
  for (const auto& [ab, c] : xm)
    if (auto it = yh.find(ab); it != yh.end()) total += c * it->second;
  return total;
}

SymFunc tensor_multiply(const SymTensor& x) {
  const auto xh = x.in_bases(Basis::complete, Basis::complete).terms;
  Terms out;
  for (const auto& [ab, c] : xh) add_to(out, ab.first.merged(ab.second), c);
  return finish(Basis::complete, std::move(out), x.left);
}

SymFunc schur(const Partition& lambda) {
  Terms terms;
  for (const auto& [mu, c] : jacobi_trudi_cached(lambda)) terms.emplace(mu, c);
  return SymFunc(Basis::complete, std::move(terms));
}

std::map<Partition, Integer> lr_coefficients(const Partition& lambda, const Partition& mu) {
  const SymFunc product = convert(multiply(schur(lambda), schur(mu)), Basis::schur);
  std::map<Partition, Integer> out;
  for (const auto& [nu, c] : product.terms()) out.emplace(nu, c.get_num());
  return out;
}

SymFunc dual_apply(const SymFunc& f, const SymFunc& g) {
  // Coefficient of s_nu in f*(g) is <f s_nu, g>: pair the h-expansion of
  // f_a s_nu with the m-expansion of g_b.
  const Terms fh = convert_raw(f.basis(), f.terms(), Basis::complete);
  const Terms gm = convert_raw(g.basis(), g.terms(), Basis::monomial);
  std::map<int, Terms> f_by_degree;
  std::map<int, Terms> g_by_degree;
  for (const auto& [lambda, c] : fh) f_by_degree[lambda.size()].emplace(lambda, c);
  for (const auto& [lambda, c] : gm) g_by_degree[lambda.size()].emplace(lambda, c);

  Terms result;
  for (const auto& [b, gb] : g_by_degree)
    for (const auto& [a, fa] : f_by_degree) {
      if (a > b) continue;
      for (const Partition& nu : partitions_cached(b - a)) {
        Rational c = 0;
        for (const auto& [kappa, sc] : jacobi_trudi_cached(nu))
          for (const auto& [alpha, fc] : fa)
            if (auto it = gb.find(alpha.merged(kappa)); it != gb.end()) c += fc * sc * it->second;
        add_to(result, nu, c);
      }
    }
  return finish(Basis::schur, std::move(result), g.basis());
}

}  // namespace heiscat
