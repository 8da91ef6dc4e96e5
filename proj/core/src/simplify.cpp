#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "heiscat/diagcat.hpp"

namespace heiscat {

namespace {

using Slices = std::vector<Slice>;

std::optional<Diagram> rebuild(const Signature& domain, Slices slices) {
  try {
    return Diagram(domain, std::move(slices));
  } catch (const IllFormedSlice&) {
    return std::nullopt;
  }
}

Slices replaced(const Slices& s, std::size_t at, std::size_t count, const Slices& with) {
  Slices out(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), with.begin(), with.end());
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(at + count), s.end());
  return out;
}

int shift(const Slice& s) {
  switch (s.kind) {
    case Slice::Kind::cup: return 2;
    case Slice::Kind::cap: return -2;
    case Slice::Kind::cross: return 0;
  }
  return 0;
}

// Footprint in doubled coordinates of the signature between the two slices:
// strand p sits at 2p, the gap left of strand p at 2p - 1.
std::pair<int, int> footprint_above(const Slice& a) {
  if (a.kind == Slice::Kind::cap) return {2 * a.pos - 1, 2 * a.pos - 1};
  return {2 * a.pos, 2 * a.pos + 2};
}

std::pair<int, int> footprint_below(const Slice& b) {
  if (b.kind == Slice::Kind::cup) return {2 * b.pos - 1, 2 * b.pos - 1};
  return {2 * b.pos, 2 * b.pos + 2};
}

// Swap of slices k and k+1 when they touch disjoint strands.
std::optional<Slices> exchange(const Slices& s, std::size_t k) {
  const Slice& a = s[k];
  const Slice& b = s[k + 1];
  const auto [lo_a, hi_a] = footprint_above(a);
  const auto [lo_b, hi_b] = footprint_below(b);
  Slice a2 = a;
  Slice b2 = b;
  if (hi_b < lo_a) {
    a2.pos += shift(b);
  } else if (hi_a < lo_b) {
    b2.pos -= shift(a);
  } else {
    return std::nullopt;
  }
  return replaced(s, k, 2, {b2, a2});
}

bool same_orientation(const Signature& sig, int pos, int count) {
  for (int i = 1; i < count; ++i)
    if (sig[static_cast<std::size_t>(pos - 1 + i)] != sig[static_cast<std::size_t>(pos - 1)]) return false;
  return true;
}

std::vector<Diagram> neighbours(const Diagram& d) {
  std::vector<Diagram> out;
  const Slices& s = d.slices();
  auto push = [&](const Slices& candidate) {
    if (auto nd = rebuild(d.domain(), candidate)) out.push_back(std::move(*nd));
  };
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    if (auto e = exchange(s, k)) push(*e);
    const Slice& a = s[k];
    const Slice& b = s[k + 1];
    // A strand slides through a cup or a cap.
    if (a.kind == Slice::Kind::cup && b.kind == Slice::Kind::cross) {
      if (b.pos == a.pos + 1) push(replaced(s, k, 2, {Slice::cup(a.pos + 1, a.ccw), Slice::cross(a.pos)}));
      if (b.pos == a.pos - 1) push(replaced(s, k, 2, {Slice::cup(a.pos - 1, a.ccw), Slice::cross(a.pos)}));
    }
    if (a.kind == Slice::Kind::cross && b.kind == Slice::Kind::cap) {
      if (b.pos == a.pos + 1) push(replaced(s, k, 2, {Slice::cross(a.pos + 1), Slice::cap(a.pos, b.ccw)}));
      if (b.pos == a.pos - 1) push(replaced(s, k, 2, {Slice::cross(a.pos - 1), Slice::cap(a.pos, b.ccw)}));
    }
  }
  for (std::size_t k = 0; k + 2 < s.size(); ++k) {
    const Slice& a = s[k];
    const Slice& b = s[k + 1];
    const Slice& c = s[k + 2];
    if (a.kind != Slice::Kind::cross || b.kind != Slice::Kind::cross || c.kind != Slice::Kind::cross) continue;
    if (a.pos != c.pos || (b.pos != a.pos + 1 && b.pos != a.pos - 1)) continue;
    const int low = std::min(a.pos, b.pos);
    if (!same_orientation(d.level(k), low, 3)) continue;
    push(replaced(s, k, 3, {b, a, b}));
  }
  return out;
}

// One application of a measure-lowering relation at the front of some
// window, or nothing.
std::optional<Morphism> reduce_here(const Diagram& d) {
  const Slices& s = d.slices();
  const Signature& dom = d.domain();
  const Signature& cod = d.codomain();
  auto single = [&](const Slices& with) {
    Morphism m(dom, cod);
    m.add(Diagram(dom, with), 1);
    return m;
  };
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    const Slice& a = s[k];
    const Slice& b = s[k + 1];
    if (a.kind == Slice::Kind::cross && b.kind == Slice::Kind::cross && a.pos == b.pos) {
      const Signature below = d.level(k);
      const auto p = static_cast<std::size_t>(a.pos - 1);
      Morphism m = single(replaced(s, k, 2, {}));
      if (below[p] == Orientation::down && below[p + 1] == Orientation::up)
        m.add(Diagram(dom, replaced(s, k, 2, {Slice::cap(a.pos, true), Slice::cup(a.pos, true)})), -1);
      return m;
    }
    if (a.kind == Slice::Kind::cup && b.kind == Slice::Kind::cap) {
      if (a.pos == b.pos && a.ccw && b.ccw) return single(replaced(s, k, 2, {}));
      if (b.pos == a.pos + 1 || b.pos == a.pos - 1) return single(replaced(s, k, 2, {}));
    }
  }
  for (std::size_t k = 0; k + 2 < s.size(); ++k) {
    const Slice& a = s[k];
    const Slice& b = s[k + 1];
    const Slice& c = s[k + 2];
    if (a.kind == Slice::Kind::cup && a.ccw && b.kind == Slice::Kind::cross && b.pos == a.pos + 1 &&
        c.kind == Slice::Kind::cap && c.ccw && c.pos == a.pos)
      return Morphism(dom, cod);
  }
  return std::nullopt;
}

struct Step {
  std::optional<Morphism> rewritten;
  Diagram representative;
};

Step search(const Diagram& d, std::size_t limit) {
  std::set<Diagram> seen{d};
  std::deque<Diagram> queue{d};
  while (!queue.empty()) {
    Diagram cur = std::move(queue.front());
    queue.pop_front();
    if (auto m = reduce_here(cur)) return {std::move(m), cur};
    if (seen.size() >= limit) continue;
    for (auto& n : neighbours(cur))
      if (seen.size() < limit && seen.insert(n).second) queue.push_back(std::move(n));
  }
  return {std::nullopt, *seen.begin()};
}

}  // namespace

std::pair<int, int> diagram_measure(const Diagram& d) {
  int crossings = 0;
  int turns = 0;
  for (const Slice& s : d.slices()) (s.kind == Slice::Kind::cross ? crossings : turns) += 1;
  return {crossings, turns};
}

std::vector<Diagram> isotopy_class(const Diagram& d, std::size_t limit) {
  std::set<Diagram> seen{d};
  std::deque<Diagram> queue{d};
  while (!queue.empty() && seen.size() < limit) {
    Diagram cur = std::move(queue.front());
    queue.pop_front();
    for (auto& n : neighbours(cur))
      if (seen.size() < limit && seen.insert(n).second) queue.push_back(std::move(n));
  }
  return {seen.begin(), seen.end()};
}

Morphism simplify(const Morphism& m) {
  constexpr std::size_t kLimit = 20000;
  std::map<Diagram, Rational> pending = m.terms();
  std::map<Diagram, Step> memo;
  Morphism out(m.domain(), m.codomain());
  while (!pending.empty()) {
    // Largest measure first, so that terms produced by rewriting tend to
    // meet and cancel before they are searched.
    auto it = std::max_element(pending.begin(), pending.end(), [](const auto& x, const auto& y) {
      return std::pair(diagram_measure(x.first), x.first) < std::pair(diagram_measure(y.first), y.first);
    });
    const Diagram d = it->first;
    const Rational c = it->second;
    pending.erase(it);
    auto found = memo.find(d);
    if (found == memo.end()) found = memo.emplace(d, search(d, kLimit)).first;
    const Step& step = found->second;
    if (!step.rewritten) {
      out.add(step.representative, c);
      continue;
    }
    for (const auto& [nd, nc] : step.rewritten->terms()) {
      Rational& slot = pending[nd];
      slot += c * nc;
      if (slot == 0) pending.erase(nd);
    }
  }
  return out;
}

std::string Irreducible::str() const { return "irreducible: " + residue.str(); }

ClosedValue evaluate_closed(const Morphism& m) {
  if (!m.domain().empty() || !m.codomain().empty())
    throw SignatureMismatch("closed evaluation needs empty boundary, got " + signature_str(m.domain()) + " -> " +
                            signature_str(m.codomain()));
  const Morphism s = simplify(m);
  Rational value = 0;
  for (const auto& [d, c] : s.terms()) {
    if (!d.slices().empty()) return Irreducible{s};
    value += c;
  }
  return value;
}

}  // namespace heiscat
