#include <mutex>

#include "heiscat/bimodel.hpp"

namespace heiscat {

namespace {

// Young symmetrizer a_lambda b_lambda for the tableau filled row by row.
GroupAlgElem young_symmetrizer(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1);
  std::vector<int> col_of(static_cast<std::size_t>(n) + 1);
  int box = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c, ++box) {
      row_of[static_cast<std::size_t>(box)] = r;
      col_of[static_cast<std::size_t>(box)] = c;
    }
  std::vector<Permutation> rows;
  std::vector<Permutation> cols;
  for (const auto& w : permutations_of(n)) {
    bool keeps_rows = true;
    bool keeps_cols = true;
    for (int i = 1; i <= n; ++i) {
      keeps_rows = keeps_rows && row_of[static_cast<std::size_t>(w(i))] == row_of[static_cast<std::size_t>(i)];
      keeps_cols = keeps_cols && col_of[static_cast<std::size_t>(w(i))] == col_of[static_cast<std::size_t>(i)];
    }
    if (keeps_rows) rows.push_back(w);
    if (keeps_cols) cols.push_back(w);
  }
  GroupAlgElem::Terms terms;
  for (const auto& p : rows)
    for (const auto& q : cols) {
      Rational& c = terms[p * q];
      c += q.sign();
    }
  for (auto it = terms.begin(); it != terms.end();) it = it->second == 0 ? terms.erase(it) : std::next(it);
  return GroupAlgElem(n, std::move(terms));
}

}  // namespace

std::map<Partition, Rational> character(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, std::map<Partition, Rational>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  const GroupAlgElem y = young_symmetrizer(lambda);
  // y^2 = kappa y, and kappa is the identity coefficient of y^2.
  Rational kappa = 0;
  for (const auto& [w, c] : y.terms()) kappa += c * y.coeff(w.inverse());
  std::map<Partition, Rational> sums;
  for (const auto& rho : partitions_of(lambda.size())) sums[rho] = 0;
  for (const auto& [w, c] : y.terms()) sums[w.cycle_type()] += c;
  std::map<Partition, Rational> chi;
  for (const auto& [rho, s] : sums) chi[rho] = Rational(centralizer_order(rho)) * s / kappa;
  std::lock_guard lock(mutex);
  return cache.emplace(lambda, std::move(chi)).first->second;
}

std::map<Partition, Integer> induced_character_decomposition(const Partition& lambda, const Partition& mu,
                                                             int bound) {
  const int total = lambda.size() + mu.size();
  if (total > bound)
    throw BoundExceeded("|lambda| + |mu| = " + std::to_string(total) + " exceeds the bound " + std::to_string(bound));
  const auto chi_l = character(lambda);
  const auto chi_m = character(mu);
  std::map<Partition, Integer> out;
  for (const auto& nu : partitions_of(total)) {
    const auto chi_n = character(nu);
    Rational sum = 0;
    for (const auto& [rho, a] : chi_l)
      for (const auto& [tau, b] : chi_m)
        sum += a * b * chi_n.at(rho.merged(tau)) / Rational(centralizer_order(rho) * centralizer_order(tau));
    if (!is_integral(sum)) throw PreconditionError("non-integral multiplicity " + to_string(sum));
    if (sum != 0) out.emplace(nu, sum.get_num());
  }
  return out;
}

}  // namespace heiscat
