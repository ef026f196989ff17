#include "crystalkit/groups.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "crystalkit/errors.hpp"

namespace ck {

FiniteMatrixGroup FiniteMatrixGroup::close_group(
    const std::vector<IntMatrix>& gens, std::size_t order_cap) {
  FiniteMatrixGroup g;
  g.degree_ = gens.empty() ? 0 : gens[0].rows();
  for (const IntMatrix& m : gens) {
    if (m.rows() != m.cols() || m.rows() != g.degree_)
      throw InvalidInputError(
          "close_group: generators must be square of equal degree");
    Int d = m.det();
    if (d != 1 && d != -1)
      throw InvalidInputError("NotInvertible: generator determinant is not +-1");
  }

  IntMatrix id = IntMatrix::identity(g.degree_);
  g.elements_.push_back(id);
  g.index_[id.encode()] = 0;
  g.parent_.emplace_back(0, 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      IntMatrix next = g.elements_[cur] * gens[gi];
      std::string key = next.encode();
      if (g.index_.count(key)) continue;
      if (g.elements_.size() >= order_cap)
        throw CapExceededError("close_group: order cap exceeded");
      g.index_[key] = g.elements_.size();
      g.elements_.push_back(std::move(next));
      g.parent_.emplace_back(cur, gi);
      queue.push_back(g.elements_.size() - 1);
    }
  }

  for (const IntMatrix& m : gens) g.gens_.push_back(g.index_.at(m.encode()));

  std::size_t n = g.elements_.size();
  g.mul_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g.mul_[a][b] = g.index_.at((g.elements_[a] * g.elements_[b]).encode());
  g.inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.mul_[a][b] == 0) {
        g.inv_[a] = b;
        break;
      }
  return g;
}

std::size_t FiniteMatrixGroup::index_of(const IntMatrix& m) const {
  auto it = index_.find(m.encode());
  if (it == index_.end())
    throw InvalidInputError("matrix is not an element of the group");
  return it->second;
}

bool FiniteMatrixGroup::contains(const IntMatrix& m) const {
  return index_.count(m.encode()) > 0;
}

unsigned long FiniteMatrixGroup::element_order(std::size_t a) const {
  unsigned long o = 1;
  std::size_t cur = a;
  while (cur != 0) {
    cur = mul_[cur][a];
    ++o;
  }
  return o;
}

unsigned long FiniteMatrixGroup::exponent() const {
  Int e = 1;
  for (std::size_t i = 0; i < order(); ++i)
    e = lcm(e, Int(static_cast<long>(element_order(i))));
  return e.get_ui();
}

bool FiniteMatrixGroup::is_abelian() const {
  for (std::size_t a : gens_)
    for (std::size_t b : gens_)
      if (mul_[a][b] != mul_[b][a]) return false;
  return true;
}

std::vector<std::size_t> FiniteMatrixGroup::word_for(std::size_t i) const {
  std::vector<std::size_t> word;
  while (i != 0) {
    word.push_back(parent_[i].second);
    i = parent_[i].first;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

ConjugacyClasses conjugacy_classes(const FiniteMatrixGroup& g) {
  std::size_t n = g.order();
  ConjugacyClasses cc;
  cc.class_of.assign(n, static_cast<std::size_t>(-1));
  for (std::size_t e = 0; e < n; ++e) {
    if (cc.class_of[e] != static_cast<std::size_t>(-1)) continue;
    std::size_t cls = cc.representatives.size();
    cc.representatives.push_back(e);
    cc.members.emplace_back();
    std::vector<std::size_t> orbit{e};
    cc.class_of[e] = cls;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      std::size_t x = orbit[k];
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t y = g.multiply(g.multiply(a, x), g.inverse(a));
        if (cc.class_of[y] == static_cast<std::size_t>(-1)) {
          cc.class_of[y] = cls;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cc.members[cls] = std::move(orbit);
  }
  return cc;
}

std::vector<PrimeOrderSubgroup> prime_order_elements(
    const FiniteMatrixGroup& g) {
  std::vector<PrimeOrderSubgroup> out;
  std::set<std::size_t> seen;
  for (std::size_t i = 1; i < g.order(); ++i) {
    if (seen.count(i)) continue;
    unsigned long o = g.element_order(i);
    bool prime = o > 1;
    for (unsigned long d = 2; d * d <= o; ++d)
      if (o % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    out.push_back({i, o});
    std::size_t cur = i;
    while (cur != 0) {
      seen.insert(cur);
      cur = g.multiply(cur, i);
    }
  }
  return out;
}

}  // namespace ck
