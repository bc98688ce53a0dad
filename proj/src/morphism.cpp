#include "pea/morphism.hpp"

#include "pea/errors.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace pea {

bool is_morphism(const PeaTable& source, const PeaTable& target, const std::vector<Element>& map) {
  const auto n = static_cast<Element>(source.size());
  const auto m = static_cast<Element>(target.size());
  if (map.size() != source.size()) return false;
  if (std::any_of(map.begin(), map.end(), [m](Element y) { return y < 0 || y >= m; })) return false;
  if (map[static_cast<std::size_t>(source.one())] != target.one()) return false;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element s = source.sum(a, b);
      if (s == kUndefined) continue;
      if (target.sum(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]) !=
          map[static_cast<std::size_t>(s)])
        return false;
    }
  return true;
}

bool is_isomorphism(const PeaTable& source, const PeaTable& target, const std::vector<Element>& map) {
  if (source.size() != target.size() || map.size() != source.size()) return false;
  std::vector<Element> inverse(map.size(), kUndefined);
  for (std::size_t x = 0; x < map.size(); ++x) {
    const Element y = map[x];
    if (y < 0 || static_cast<std::size_t>(y) >= map.size() || inverse[static_cast<std::size_t>(y)] != kUndefined)
      return false;
    inverse[static_cast<std::size_t>(y)] = static_cast<Element>(x);
  }
  return is_morphism(source, target, map) && is_morphism(target, source, inverse);
}

bool verify_witness(const PeaTable& source, const PeaTable& target, const MorphismWitness& w) {
  return w.kind == MorphismKind::Isomorphism ? is_isomorphism(source, target, w.map)
                                             : is_morphism(source, target, w.map);
}

namespace {

using Signature = std::tuple<int, int, int, int>;

std::vector<Signature> signatures(const Pea& e) {
  const auto n = static_cast<Element>(e.size());
  std::vector<Signature> sig(e.size());
  for (Element x = 0; x < n; ++x) {
    int in = 0, out_left = 0, out_right = 0;
    for (Element y = 0; y < n; ++y) {
      out_left += e.defined(x, y);
      out_right += e.defined(y, x);
      for (Element z = 0; z < n; ++z) in += e.sum(y, z) == x;
    }
    sig[static_cast<std::size_t>(x)] = {in, out_left, out_right, e.order().level(x)};
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const Pea& s, const Pea& t)
      : s_(s), t_(t), n_(static_cast<Element>(s.size())), sig_s_(signatures(s)), sig_t_(signatures(t)),
        map_(s.size(), kUndefined), inv_(s.size(), kUndefined) {}

  std::optional<std::vector<Element>> run() {
    if (!assign(s_.zero(), t_.zero())) return std::nullopt;
    if (s_.one() != s_.zero() && !assign(s_.one(), t_.one())) return std::nullopt;
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool consistent(Element a, Element b) const {
    const Element fa = map_[static_cast<std::size_t>(a)], fb = map_[static_cast<std::size_t>(b)];
    const Element ss = s_.sum(a, b), ts = t_.sum(fa, fb);
    if ((ss == kUndefined) != (ts == kUndefined)) return false;
    if (ss == kUndefined) return true;
    const Element fss = map_[static_cast<std::size_t>(ss)];
    if (fss != kUndefined && fss != ts) return false;
    const Element its = inv_[static_cast<std::size_t>(ts)];
    return its == kUndefined || its == ss;
  }

  bool assign(Element x, Element y) {
    if (sig_s_[static_cast<std::size_t>(x)] != sig_t_[static_cast<std::size_t>(y)]) return false;
    map_[static_cast<std::size_t>(x)] = y;
    inv_[static_cast<std::size_t>(y)] = x;
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b)
        if (map_[static_cast<std::size_t>(a)] != kUndefined && map_[static_cast<std::size_t>(b)] != kUndefined &&
            !consistent(a, b)) {
          map_[static_cast<std::size_t>(x)] = kUndefined;
          inv_[static_cast<std::size_t>(y)] = kUndefined;
          return false;
        }
    return true;
  }

  bool extend(Element x) {
    while (x < n_ && map_[static_cast<std::size_t>(x)] != kUndefined) ++x;
    if (x == n_) return true;
    for (Element y = 0; y < n_; ++y) {
      if (inv_[static_cast<std::size_t>(y)] != kUndefined) continue;
      if (!assign(x, y)) continue;
      if (extend(x + 1)) return true;
      map_[static_cast<std::size_t>(x)] = kUndefined;
      inv_[static_cast<std::size_t>(y)] = kUndefined;
    }
    return false;
  }

  const Pea& s_;
  const Pea& t_;
  Element n_;
  std::vector<Signature> sig_s_, sig_t_;
  std::vector<Element> map_, inv_;
};

}  // namespace

std::optional<MorphismWitness> find_isomorphism(const Pea& source, const Pea& target) {
  if (source.size() != target.size()) return std::nullopt;
  auto sig_s = signatures(source), sig_t = signatures(target);
  std::sort(sig_s.begin(), sig_s.end());
  std::sort(sig_t.begin(), sig_t.end());
  if (sig_s != sig_t) return std::nullopt;

  auto map = IsoSearch(source, target).run();
  if (!map) return std::nullopt;
  MorphismWitness w{std::move(*map), MorphismKind::Isomorphism};
  if (!verify_witness(source.table(), target.table(), w))
    throw InvariantViolation("isomorphism search produced a map that does not verify");
  return w;
}

std::vector<Element> canonical_code(const PeaTable& t) {
  const std::size_t n = t.size();
  if (n > 11) throw ResourceError("canonical form is limited to 11 elements");
  if (n <= 2) return t.cells();

  // perm[old] = new; only the proper elements 1..n-2 move.
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Element> inv(n), best, code(n * n);
  bool first = true;
  do {
    for (std::size_t i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<Element>(i);
    // Build row-major in the new numbering, aborting as soon as it is worse.
    bool worse = false, better = first;
    for (std::size_t r = 0; r < n && !worse; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const Element s = t.sum(inv[r], inv[c]);
        const Element v = s == kUndefined ? kUndefined : perm[static_cast<std::size_t>(s)];
        const std::size_t k = r * n + c;
        code[k] = v;
        if (!better) {
          if (v > best[k]) {
            worse = true;
            break;
          }
          if (v < best[k]) better = true;
        }
      }
    if (!worse && better) {
      best = code;
      first = false;
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end() - 1));
  return best;
}

PeaTable canonical_table(const PeaTable& t) {
  const std::vector<Element> code = canonical_code(t);
  PeaTable c(t.size(), t.name());
  const auto n = static_cast<Element>(t.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element v = code[static_cast<std::size_t>(a * n + b)];
      if (v == kUndefined) {
        c.clear_sum(a, b);
      } else {
        c.set_sum(a, b, v);
      }
    }
  return c;
}

}  // namespace pea
