#include <deque>

#include "heiscat/diagcat.hpp"

namespace heiscat {

GroupAlgElem sym_image(const Morphism& m) {
  if (m.domain() != m.codomain() || m.domain() != all_up(static_cast<int>(m.domain().size())))
    throw NotBraidOnly("boundary " + signature_str(m.domain()) + " -> " + signature_str(m.codomain()) +
                       " is not up^n on both sides");
  const int n = static_cast<int>(m.domain().size());
  GroupAlgElem out(n);
  for (const auto& [d, c] : m.terms()) {
    Permutation w = Permutation::identity(n);
    for (const Slice& s : d.slices()) {
      if (s.kind != Slice::Kind::cross) throw NotBraidOnly("slice " + s.str() + " is not a crossing");
      w = Permutation::simple(s.pos, n) * w;
    }
    out = out + GroupAlgElem::group(w, c);
  }
  return out;
}

Morphism braid_section(const GroupAlgElem& a) {
  const Signature up = all_up(a.rank());
  Morphism out(up, up);
  for (const auto& [w, c] : a.terms()) {
    const GeneratorWord word = reduced_word(w);
    std::vector<Slice> slices;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) slices.push_back(Slice::cross(*it));
    out.add(Diagram(up, std::move(slices)), c);
  }
  return out;
}

std::string idempotent_kind_name(IdempotentKind k) { return k == IdempotentKind::S_down ? "S_down" : "Lambda_up"; }

std::pair<Signature, GroupAlgElem> idempotent_object(IdempotentKind kind, int n) {
  if (n < 1) throw PreconditionError("idempotent objects need n >= 1");
  if (kind == IdempotentKind::S_down) return {all_down(n), symmetrizer(n)};
  return {all_up(n), antisymmetrizer(n)};
}

HeisNormal k0_class(const std::vector<std::pair<IdempotentKind, int>>& objects) {
  HeisNormal acc = HeisNormal::one();
  for (const auto& [kind, n] : objects)
    acc = heis_product(acc, kind == IdempotentKind::S_down ? HeisNormal::hstar(n) : HeisNormal::e(n));
  return acc;
}

namespace {

using PermArray = std::vector<std::size_t>;

PermArray crossing_permutation(const Signature& sig, int base_rank, int pos) {
  const LinearMapRep m = diagram_to_map(Diagram(sig, {Slice::cross(pos)}), base_rank);
  PermArray out(m.cols);
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (m.columns[j].size() != 1 || m.columns[j].begin()->second != 1)
      throw PreconditionError("crossing at " + std::to_string(pos) + " is not a permutation of the basis");
    out[j] = m.columns[j].begin()->first;
  }
  return out;
}

// Action of every element of S_count on the basis, through crossings at
// offset+1 .. offset+count-1.
std::map<Permutation, PermArray> block_action(const Signature& sig, int base_rank, int offset, int count,
                                               std::size_t size) {
  std::vector<PermArray> gens(static_cast<std::size_t>(std::max(count, 1)));
  for (int i = 1; i < count; ++i) gens[static_cast<std::size_t>(i)] = crossing_permutation(sig, base_rank, offset + i);
  PermArray id(size);
  for (std::size_t x = 0; x < size; ++x) id[x] = x;
  std::map<Permutation, PermArray> rho{{Permutation::identity(count), id}};
  std::deque<Permutation> queue{Permutation::identity(count)};
  while (!queue.empty()) {
    const Permutation w = queue.front();
    queue.pop_front();
    for (int i = 1; i < count; ++i) {
      const Permutation ws = w * Permutation::simple(i, count);
      if (rho.count(ws)) continue;
      const PermArray& a = rho.at(w);
      const PermArray& g = gens[static_cast<std::size_t>(i)];
      PermArray b(size);
      for (std::size_t x = 0; x < size; ++x) b[x] = a[g[x]];
      rho.emplace(ws, std::move(b));
      queue.push_back(ws);
    }
  }
  return rho;
}

}  // namespace

Integer idempotent_image_dimension(int n, int m, bool lambda_first, int base_rank) {
  if (n < 0 || m < 0) throw PreconditionError("negative strand count");
  const Signature sig = lambda_first ? [&] {
    Signature s = all_up(m);
    const Signature d = all_down(n);
    s.insert(s.end(), d.begin(), d.end());
    return s;
  }()
                                     : [&] {
                                         Signature s = all_down(n);
                                         const Signature u = all_up(m);
                                         s.insert(s.end(), u.begin(), u.end());
                                         return s;
                                       }();
  if (!realizable(sig, base_rank)) return 0;
  const TensorBasis basis(sig, base_rank);
  const std::size_t size = basis.size();
  const auto down = block_action(sig, base_rank, lambda_first ? m : 0, n, size);
  const auto up = block_action(sig, base_rank, lambda_first ? 0 : n, m, size);
  // trace of e(n) (x) e'(m) = (1/n! m!) sum sign(tau) #fix(sigma tau)
  Integer fixed = 0;
  for (const auto& [sigma, a] : down)
    for (const auto& [tau, b] : up) {
      long count = 0;
      for (std::size_t x = 0; x < size; ++x)
        if (a[b[x]] == x) ++count;
      fixed += tau.sign() * count;
    }
  const Rational trace = Rational(fixed) / Rational(factorial(n) * factorial(m));
  if (!is_integral(trace)) throw PreconditionError("idempotent trace " + to_string(trace) + " is not integral");
  return trace.get_num();
}

VerificationReport verify_k0_relations(int m, int n) {
  if (m < 1 || n < 1) throw PreconditionError("verify_k0_relations needs m, n >= 1");
  using K = IdempotentKind;
  VerificationReport report;
  const int tag = n;
  const std::string mn = " [m=" + std::to_string(m) + ",n=" + std::to_string(n) + "]";
  const HeisNormal lm_ln = k0_class({{K::Lambda_up, m}, {K::Lambda_up, n}});
  const HeisNormal ln_lm = k0_class({{K::Lambda_up, n}, {K::Lambda_up, m}});
  report.add("Lambda classes commute" + mn, tag, lm_ln == ln_lm, lm_ln.str());
  const HeisNormal sm_sn = k0_class({{K::S_down, m}, {K::S_down, n}});
  const HeisNormal sn_sm = k0_class({{K::S_down, n}, {K::S_down, m}});
  report.add("S classes commute" + mn, tag, sm_sn == sn_sm, sm_sn.str());
  const HeisNormal lhs = k0_class({{K::S_down, n}, {K::Lambda_up, m}});
  const HeisNormal rhs = k0_class({{K::Lambda_up, m}, {K::S_down, n}}) + k0_class({{K::Lambda_up, m - 1}, {K::S_down, n - 1}});
  report.add("S^n Lambda^m = Lambda^m S^n + Lambda^{m-1} S^{n-1}" + mn, tag, lhs == rhs, lhs.str() + " vs " + rhs.str());
  for (int k = 0; k <= 3; ++k) {
    const Integer a = idempotent_image_dimension(n, m, false, k);
    const Integer b = idempotent_image_dimension(n, m, true, k);
    const Integer c = idempotent_image_dimension(n - 1, m - 1, true, k);
    report.add("bimodule dimensions at base " + std::to_string(k) + mn, tag, a == b + c,
               to_string(a) + " = " + to_string(b) + " + " + to_string(c));
  }
  return report;
}

}  // namespace heiscat
