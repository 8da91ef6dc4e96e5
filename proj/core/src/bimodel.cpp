#include "heiscat/bimodel.hpp"

#include <algorithm>

namespace heiscat {

namespace {

void add_term(GroupAlgElem::Terms& terms, const Permutation& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

// Same permutation with rank exactly m; the dropped points must be fixed.
Permutation fit(const Permutation& w, int m) { return w.rank() <= m ? w.embedded(m) : w.restricted(m); }

std::size_t factorial_size(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

}  // namespace

// ---- group algebra ---------------------------------------------------------

GroupAlgElem::GroupAlgElem(int n, Terms terms) : n_(n) {
  for (auto& [w, c] : terms) {
    if (w.rank() != n) throw RankMismatch("permutation " + w.str() + " is not in S_" + std::to_string(n));
    if (c != 0) terms_.emplace(w, std::move(c));
  }
}

GroupAlgElem GroupAlgElem::group(const Permutation& w, const Rational& coeff) {
  return GroupAlgElem(w.rank(), Terms{{w, coeff}});
}

Rational GroupAlgElem::coeff(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

GroupAlgElem GroupAlgElem::operator+(const GroupAlgElem& other) const {
  if (other.n_ != n_) throw RankMismatch("A_" + std::to_string(n_) + " and A_" + std::to_string(other.n_));
  GroupAlgElem r = *this;
  for (const auto& [w, c] : other.terms_) add_term(r.terms_, w, c);
  return r;
}

GroupAlgElem GroupAlgElem::operator-(const GroupAlgElem& other) const { return *this + other * Rational(-1); }

GroupAlgElem GroupAlgElem::operator*(const Rational& scalar) const {
  GroupAlgElem r(n_);
  if (scalar != 0)
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * scalar);
  return r;
}

std::string GroupAlgElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (mag != 1) out += to_string(mag) + " ";
    out += w.str();
    first = false;
  }
  return out;
}

GroupAlgElem ga_product(const GroupAlgElem& a, const GroupAlgElem& b) {
  if (a.rank() != b.rank()) throw RankMismatch("A_" + std::to_string(a.rank()) + " and A_" + std::to_string(b.rank()));
  GroupAlgElem::Terms out;
  for (const auto& [v, cv] : a.terms())
    for (const auto& [w, cw] : b.terms()) add_term(out, v * w, cv * cw);
  return GroupAlgElem(a.rank(), std::move(out));
}

GroupAlgElem symmetrizer(int n) {
  GroupAlgElem::Terms terms;
  const Rational weight(1, factorial(n));
  for (const auto& w : permutations_of(n)) terms.emplace(w, weight);
  return GroupAlgElem(n, std::move(terms));
}

GroupAlgElem antisymmetrizer(int n) {
  GroupAlgElem::Terms terms;
  const Rational weight(1, factorial(n));
  for (const auto& w : permutations_of(n)) terms.emplace(w, w.sign() * weight);
  return GroupAlgElem(n, std::move(terms));
}

Matrix right_multiplication_matrix(const GroupAlgElem& a) {
  const auto perms = permutations_of(a.rank());
  Matrix m(perms.size(), perms.size());
  for (std::size_t col = 0; col < perms.size(); ++col)
    for (const auto& [w, c] : a.terms()) m((perms[col] * w).index(), col) += c;
  return m;
}

// ---- paths and bases -------------------------------------------------------

std::vector<int> region_ranks(const Signature& sig, int base_rank) {
  std::vector<int> r(sig.size() + 1);
  r[sig.size()] = base_rank;
  for (std::size_t j = sig.size(); j-- > 0;) r[j] = r[j + 1] + (sig[j] == Orientation::up ? 1 : -1);
  return r;
}

bool realizable(const Signature& sig, int base_rank) {
  const auto r = region_ranks(sig, base_rank);
  return std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
}

BimodulePath BimodulePath::from_signature(const Signature& sig, int base_rank) {
  auto r = region_ranks(sig, base_rank);
  std::reverse(r.begin(), r.end());
  return BimodulePath{std::move(r)};
}

Signature BimodulePath::signature() const {
  Signature sig;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const int step = levels[i] - levels[i - 1];
    if (step != 1 && step != -1) throw PreconditionError("adjacent path levels must differ by one");
    sig.push_back(step == 1 ? Orientation::up : Orientation::down);
  }
  std::reverse(sig.begin(), sig.end());
  return sig;
}

TensorBasis::TensorBasis(Signature sig, int base_rank)
    : sig_(std::move(sig)), base_(base_rank), regions_(region_ranks(sig_, base_rank)) {
  for (int r : regions_)
    if (r < 0)
      throw UnrealizableAtRank("signature " + signature_str(sig_) + " has a negative region at base rank " +
                               std::to_string(base_rank));
  size_ = factorial_size(base_);
  for (std::size_t j = 0; j < sig_.size(); ++j)
    if (sig_[j] == Orientation::up) {
      up_strands_.push_back(j);
      size_ *= static_cast<std::size_t>(regions_[j + 1] + 1);
    }
}

TensorBasis::Tuple TensorBasis::element(std::size_t index) const {
  const std::size_t hsize = factorial_size(base_);
  Tuple t(sig_.size() + 1);
  t.back() = Permutation::from_index(index % hsize, base_);
  index /= hsize;
  for (std::size_t j = sig_.size(); j-- > 0;) {
    if (sig_[j] == Orientation::up) {
      const int r = regions_[j + 1];
      const auto radix = static_cast<std::size_t>(r + 1);
      t[j] = coset_representative(static_cast<int>(index % radix) + 1, r);
      index /= radix;
    } else {
      t[j] = Permutation::identity(regions_[j + 1]);
    }
  }
  return t;
}

std::size_t TensorBasis::index_of(const Tuple& t) const {
  if (t.size() != sig_.size() + 1) throw PreconditionError("tuple length does not match the signature");
  Permutation carry;
  std::size_t index = 0;
  for (std::size_t j = 0; j < sig_.size(); ++j) {
    const int right = regions_[j + 1];
    const int big = std::max(regions_[j], right);
    const Permutation x = fit(carry * t[j], big);
    if (sig_[j] == Orientation::up) {
      const CosetDecomposition cd = coset_decompose(x);
      index = index * static_cast<std::size_t>(right + 1) + static_cast<std::size_t>(cd.i - 1);
      carry = cd.rest;
    } else {
      carry = x;
    }
  }
  const Permutation h = fit(carry * t.back(), base_);
  return index * factorial_size(base_) + h.index();
}

std::string TensorBasis::describe(std::size_t index) const {
  const Tuple t = element(index);
  std::string out;
  for (std::size_t j = 0; j < sig_.size(); ++j) out += t[j].str() + " (x) ";
  return out + "| " + t.back().str();
}

std::size_t tensor_basis_size(const BimodulePath& path) {
  return TensorBasis(path.signature(), path.base_rank()).size();
}

// ---- sparse maps -----------------------------------------------------------

LinearMapRep LinearMapRep::zero(const TensorBasis& dom, const TensorBasis& cod) {
  LinearMapRep m;
  m.domain = dom.signature();
  m.codomain = cod.signature();
  m.base_rank = dom.base_rank();
  m.rows = cod.size();
  m.cols = dom.size();
  m.columns.resize(m.cols);
  return m;
}

LinearMapRep LinearMapRep::identity(const TensorBasis& basis) {
  LinearMapRep m = zero(basis, basis);
  for (std::size_t j = 0; j < m.cols; ++j) m.columns[j].emplace(j, 1);
  return m;
}

LinearMapRep LinearMapRep::operator+(const LinearMapRep& other) const {
  if (rows != other.rows || cols != other.cols || domain != other.domain || codomain != other.codomain)
    throw SignatureMismatch("adding maps between different bimodules");
  LinearMapRep r = *this;
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, c] : other.columns[j]) {
      Rational& slot = r.columns[j][i];
      slot += c;
      if (slot == 0) r.columns[j].erase(i);
    }
  return r;
}

LinearMapRep LinearMapRep::operator-(const LinearMapRep& other) const { return *this + other * Rational(-1); }

LinearMapRep LinearMapRep::operator*(const Rational& scalar) const {
  LinearMapRep r = *this;
  for (auto& col : r.columns) {
    if (scalar == 0) {
      col.clear();
      continue;
    }
    for (auto& [i, c] : col) c *= scalar;
  }
  return r;
}

bool LinearMapRep::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const auto& c) { return c.empty(); });
}

std::size_t LinearMapRep::rank() const {
  SparseEchelon echelon;
  for (const auto& col : columns) {
    SparseVector v;
    for (const auto& [i, c] : col) v[static_cast<int>(i)] = c;
    echelon.insert(std::move(v));
  }
  return echelon.rank();
}

Matrix LinearMapRep::dense() const {
  Matrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, c] : columns[j]) m(i, j) = c;
  return m;
}

std::string LinearMapRep::dump() const { return dense().dump(); }

LinearMapRep operator*(const LinearMapRep& a, const LinearMapRep& b) {
  if (a.cols != b.rows || a.domain != b.codomain) throw SignatureMismatch("composing maps with mismatched bimodules");
  LinearMapRep r;
  r.domain = b.domain;
  r.codomain = a.codomain;
  r.base_rank = b.base_rank;
  r.rows = a.rows;
  r.cols = b.cols;
  r.columns.resize(r.cols);
  for (std::size_t j = 0; j < b.cols; ++j)
    for (const auto& [k, cb] : b.columns[j])
      for (const auto& [i, ca] : a.columns[k]) {
        Rational& slot = r.columns[j][i];
        slot += ca * cb;
        if (slot == 0) r.columns[j].erase(i);
      }
  return r;
}

// ---- diagram images --------------------------------------------------------

namespace {

using Tuple = TensorBasis::Tuple;
using Image = std::vector<std::pair<Tuple, Rational>>;

// Local image of one slice on a pure tensor.  `regions` belong to the
// signature below the slice.
Image slice_on_tuple(const Slice& s, const Signature& sig, const std::vector<int>& regions, const Tuple& t) {
  const auto i = static_cast<std::size_t>(s.pos - 1);
  Image out;
  switch (s.kind) {
    case Slice::Kind::cross: {
      const int r = regions[i + 2];
      Tuple u = t;
      const bool up_left = sig[i] == Orientation::up;
      const bool up_right = sig[i + 1] == Orientation::up;
      if (up_left && up_right) {
        u[i] = fit(t[i] * t[i + 1], r + 2) * Permutation::simple(r + 1, r + 2);
        u[i + 1] = Permutation::identity(r + 1);
      } else if (!up_left && !up_right) {
        u[i] = Permutation::identity(r - 1);
        u[i + 1] = Permutation::simple(r - 1, r) * fit(t[i] * t[i + 1], r);
      } else if (up_left) {
        // A_r (x)_{A_{r-1}} A_r -> A_{r+1}
        u[i] = fit(t[i], r + 1) * Permutation::simple(r, r + 1) * fit(t[i + 1], r + 1);
        u[i + 1] = Permutation::identity(r + 1);
      } else {
        // A_{r+1} -> A_r (x)_{A_{r-1}} A_r, inverse of the map above on
        // the complement of A_r.
        const Permutation x = fit(t[i] * t[i + 1], r + 1);
        if (x(r + 1) == r + 1) return out;
        const CosetDecomposition cd = coset_decompose(x);
        u[i] = coset_representative(cd.i, r - 1);
        u[i + 1] = cd.rest;
      }
      out.emplace_back(std::move(u), 1);
      return out;
    }
    case Slice::Kind::cup: {
      const int r = regions[i];
      if (s.ccw) {
        Tuple u = t;
        u.insert(u.begin() + static_cast<std::ptrdiff_t>(i), {Permutation::identity(r + 1), Permutation::identity(r + 1)});
        out.emplace_back(std::move(u), 1);
      } else {
        for (int k = 1; k <= r; ++k) {
          const Permutation c = coset_representative(k, r - 1);
          Tuple u = t;
          u.insert(u.begin() + static_cast<std::ptrdiff_t>(i), {c, c.inverse()});
          out.emplace_back(std::move(u), 1);
        }
      }
      return out;
    }
    case Slice::Kind::cap: {
      const int r = regions[i + 2];
      Permutation x = t[i] * t[i + 1];
      if (s.ccw) {
        x = fit(x, r + 1);
        if (x(r + 1) != r + 1) return out;
      }
      Tuple u;
      u.reserve(t.size() - 2);
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (k == i || k == i + 1) continue;
        u.push_back(k == i + 2 ? fit(x, r) * t[k] : t[k]);
      }
      out.emplace_back(std::move(u), 1);
      return out;
    }
  }
  return out;
}

LinearMapRep slice_map(const Slice& s, const Signature& below, int base_rank) {
  const TensorBasis dom(below, base_rank);
  const TensorBasis cod(s.apply(below), base_rank);
  LinearMapRep m = LinearMapRep::zero(dom, cod);
  for (std::size_t j = 0; j < dom.size(); ++j)
    for (const auto& [u, c] : slice_on_tuple(s, below, dom.regions(), dom.element(j))) {
      Rational& slot = m.columns[j][cod.index_of(u)];
      slot += c;
    }
  for (auto& col : m.columns)
    for (auto it = col.begin(); it != col.end();) it = it->second == 0 ? col.erase(it) : std::next(it);
  return m;
}

}  // namespace

LinearMapRep diagram_to_map(const Diagram& d, int base_rank) {
  LinearMapRep acc = LinearMapRep::identity(TensorBasis(d.domain(), base_rank));
  Signature sig = d.domain();
  for (const Slice& s : d.slices()) {
    acc = slice_map(s, sig, base_rank) * acc;
    sig = s.apply(sig);
  }
  return acc;
}

LinearMapRep diagram_to_map(const Morphism& m, int base_rank) {
  LinearMapRep acc = LinearMapRep::zero(TensorBasis(m.domain(), base_rank), TensorBasis(m.codomain(), base_rank));
  for (const auto& [d, c] : m.terms()) acc = acc + diagram_to_map(d, base_rank) * c;
  return acc;
}

// ---- local relations -------------------------------------------------------

std::vector<LocalRelation> all_local_relations() {
  return {LocalRelation::up_up_double_crossing, LocalRelation::braid,      LocalRelation::down_up_double_crossing,
          LocalRelation::up_down_double_crossing, LocalRelation::ccw_circle, LocalRelation::left_curl};
}

std::string relation_name(LocalRelation r) {
  switch (r) {
    case LocalRelation::up_up_double_crossing: return "up-up";
    case LocalRelation::braid: return "braid";
    case LocalRelation::down_up_double_crossing: return "down-up";
    case LocalRelation::up_down_double_crossing: return "up-down";
    case LocalRelation::ccw_circle: return "ccw-circle";
    case LocalRelation::left_curl: return "left-curl";
  }
  return "unknown";
}

LocalRelation relation_from_name(const std::string& name) {
  for (LocalRelation r : all_local_relations())
    if (relation_name(r) == name) return r;
  throw PreconditionError("unknown local relation '" + name + "'");
}

std::pair<Morphism, Morphism> relation_sides(LocalRelation r) {
  switch (r) {
    case LocalRelation::up_up_double_crossing:
      return {Morphism::parse("sig:UU; x1; x1"), Morphism::parse("sig:UU")};
    case LocalRelation::braid:
      return {Morphism::parse("sig:UUU; x1; x2; x1"), Morphism::parse("sig:UUU; x2; x1; x2")};
    case LocalRelation::down_up_double_crossing:
      return {Morphism::parse("sig:DU; x1; x1"), Morphism::parse("sig:DU") - Morphism::parse("sig:DU; cap+1; cup+1")};
    case LocalRelation::up_down_double_crossing:
      return {Morphism::parse("sig:UD; x1; x1"), Morphism::parse("sig:UD")};
    case LocalRelation::ccw_circle:
      return {Morphism::parse("sig:; cup+1; cap+1"), Morphism::parse("sig:")};
    case LocalRelation::left_curl:
      return {Morphism::parse("sig:U; cup+1; x2; cap+1"), Morphism(parse_signature("U"), parse_signature("U"))};
  }
  throw PreconditionError("unknown local relation");
}

LinearMapRep realized_map(const Morphism& m, int n) {
  LinearMapRep acc = LinearMapRep::zero(TensorBasis(m.domain(), n), TensorBasis(m.codomain(), n));
  for (const auto& [d, c] : m.terms()) {
    bool through_zero = false;
    for (std::size_t k = 0; k <= d.slices().size(); ++k) through_zero = through_zero || !realizable(d.level(k), n);
    if (!through_zero) acc = acc + diagram_to_map(d, n) * c;
  }
  return acc;
}

VerificationReport verify_local_relation(LocalRelation r, int n) {
  if (n < 0) throw PreconditionError("level must be nonnegative");
  VerificationReport report;
  const auto [lhs, rhs] = relation_sides(r);
  const std::string name = relation_name(r);
  if (!realizable(lhs.domain(), n)) {
    // Restriction below A_0 is the zero functor, so both sides are maps of
    // the zero bimodule.
    report.add(name, n, true, "signature " + signature_str(lhs.domain()) + " is the zero bimodule at this rank");
    return report;
  }
  const LinearMapRep a = realized_map(lhs, n);
  const LinearMapRep b = realized_map(rhs, n);
  std::string detail = std::to_string(a.rows) + "x" + std::to_string(a.cols) + " matrices agree";
  const bool ok = a == b;
  if (!ok) {
    const LinearMapRep diff = a - b;
    for (std::size_t j = 0; j < diff.cols; ++j)
      if (!diff.columns[j].empty()) {
        const auto& [i, c] = *diff.columns[j].begin();
        detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs by " + to_string(c);
        break;
      }
  }
  report.add(name, n, ok, detail);
  return report;
}

// ---- Mackey decomposition ---------------------------------------------------

VerificationReport mackey_check(int k) {
  if (k < 1) throw PreconditionError("mackey_check needs k >= 1");
  VerificationReport report;
  // Ind Res on A_k is the signature UD at base k, i.e. the path [k, k-1, k].
  const TensorBasis ind_res(parse_signature("UD"), k);
  const std::size_t big = factorial_size(k + 1);
  const std::size_t small = factorial_size(k);
  report.add("dimension identity", k, big == ind_res.size() + small,
             std::to_string(big) + " = " + std::to_string(ind_res.size()) + " + " + std::to_string(small));

  const Permutation t = Permutation::simple(k, k + 1);
  auto mackey = [&](const Tuple& x) { return fit(x[0], k + 1) * t * fit(x[1] * x[2], k + 1); };

  SparseEchelon incl;
  for (const auto& w : permutations_of(k)) incl.insert({{static_cast<int>(w.embedded(k + 1).index()), 1}});
  SparseEchelon mk;
  for (std::size_t j = 0; j < ind_res.size(); ++j) mk.insert({{static_cast<int>(mackey(ind_res.element(j)).index()), 1}});
  report.add("inclusion injective", k, incl.rank() == small);
  report.add("a (x) b -> a s_k b injective", k, mk.rank() == ind_res.size());
  SparseEchelon both = incl;
  for (std::size_t j = 0; j < ind_res.size(); ++j) both.insert({{static_cast<int>(mackey(ind_res.element(j)).index()), 1}});
  report.add("images disjoint", k, both.rank() == incl.rank() + mk.rank());
  report.add("images span", k, both.rank() == big);

  bool characterization = true;
  for (const auto& g : permutations_of(k + 1))
    if (incl.contains({{static_cast<int>(g.index()), 1}}) != (g(k + 1) == k + 1)) characterization = false;
  report.add("inclusion image is {g : g(k+1) = k+1}", k, characterization);

  bool linear = true;
  for (int i = 1; i < k; ++i) {
    const Permutation s = Permutation::simple(i, k);
    for (std::size_t j = 0; j < ind_res.size(); ++j) {
      const Tuple x = ind_res.element(j);
      Tuple left = x;
      left[0] = s * x[0];
      Tuple right = x;
      right[2] = x[2] * s;
      // Acting on the canonical representative and renormalizing must
      // commute with the map.
      const Tuple left_canon = ind_res.element(ind_res.index_of(left));
      const Tuple right_canon = ind_res.element(ind_res.index_of(right));
      if (mackey(left_canon) != fit(s, k + 1) * mackey(x) || mackey(right_canon) != mackey(x) * fit(s, k + 1))
        linear = false;
    }
  }
  report.add("two-sided A_k-linearity", k, linear);
  return report;
}

}  // namespace heiscat
