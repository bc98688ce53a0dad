#include "pea/enumerate.hpp"

#include "pea/morphism.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <string_view>

namespace pea {

namespace {

std::uint64_t env_number(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  const std::string_view s(raw);
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw DomainError(std::string(name) + " must be a non-negative integer, got '" + raw + "'");
  return v;
}

// Cell domains are bitmasks: bit v for the value v, bit n for "undefined".
using Domain = std::uint32_t;
constexpr std::size_t kMaxSearchSize = 16;

bool single(Domain d) { return std::has_single_bit(d); }
int value_of(Domain d) { return std::countr_zero(d); }

// Lex-min code over the relabellings that keep every proper element inside
// its signature block (row, column and value counts). Signatures are
// isomorphism invariants, so this is a complete invariant as well, and far
// cheaper than the full canonical code when the blocks are small.
std::vector<Element> block_code(const PeaTable& t) {
  const auto n = static_cast<Element>(t.size());
  using Signature = std::tuple<int, int, int>;
  std::vector<Signature> sig(t.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      std::get<0>(sig[static_cast<std::size_t>(x)]) += t.defined(x, y);
      std::get<1>(sig[static_cast<std::size_t>(x)]) += t.defined(y, x);
      const Element s = t.sum(x, y);
      if (s != kUndefined) ++std::get<2>(sig[static_cast<std::size_t>(s)]);
    }
  std::vector<Element> order;
  for (Element x = 1; x < n - 1; ++x) order.push_back(x);
  std::sort(order.begin(), order.end(), [&](Element a, Element b) {
    return std::tie(sig[static_cast<std::size_t>(a)], a) < std::tie(sig[static_cast<std::size_t>(b)], b);
  });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end) in `order`
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && sig[static_cast<std::size_t>(order[j])] == sig[static_cast<std::size_t>(order[i])]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  // inv[new] = old: new index i + 1 is taken by order[i].
  std::vector<Element> inv(t.size()), best, code(t.size() * t.size()), perm(t.size());
  inv[0] = 0;
  inv[t.size() - 1] = n - 1;
  bool first = true;
  const auto evaluate = [&] {
    for (std::size_t i = 0; i < order.size(); ++i) inv[i + 1] = order[i];
    for (Element i = 0; i < n; ++i) perm[static_cast<std::size_t>(inv[static_cast<std::size_t>(i)])] = i;
    bool worse = false, better = first;
    for (Element r = 0; r < n && !worse; ++r)
      for (Element c = 0; c < n; ++c) {
        const Element s = t.sum(inv[static_cast<std::size_t>(r)], inv[static_cast<std::size_t>(c)]);
        const Element v = s == kUndefined ? kUndefined : perm[static_cast<std::size_t>(s)];
        const std::size_t k = static_cast<std::size_t>(r * n + c);
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
  };
  const auto walk = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      evaluate();
      return;
    }
    const auto first_it = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    const auto last_it = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first_it, last_it);
    do self(self, b + 1);
    while (std::next_permutation(first_it, last_it));
  };
  walk(walk, 0);
  return best;
}

class TableSearch {
 public:
  TableSearch(std::size_t n, std::uint64_t node_budget, EnumerationStats* stats)
      : n_(static_cast<int>(n)), undef_(static_cast<int>(n)), ubit_(Domain{1} << n), budget_(node_budget),
        stats_(stats) {}

  std::map<std::vector<Element>, PeaTable> run() {
    std::vector<Domain> d(static_cast<std::size_t>(n_ * n_));
    const int one = n_ - 1;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        Domain& cell = d[idx(a, b)];
        if (a == 0) {
          cell = bit(b);
        } else if (b == 0) {
          cell = bit(a);
        } else if (a == one || b == one) {
          cell = ubit_;
        } else {
          // A proper sum is never 0, a or b (positivity and cancellation).
          cell = (ubit_ | ((ubit_ - 1) & ~Domain{1})) & ~bit(a) & ~bit(b);
        }
      }
    if (propagate(d)) search(d);
    return std::move(found_);
  }

  bool exhausted() const { return exhausted_; }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * n_ + b); }
  Domain bit(int v) const { return Domain{1} << v; }

  // Sum of the bits of D[x][c] over the candidates x of a domain.
  Domain image_right(const std::vector<Domain>& d, Domain xs, int c) const {
    Domain out = 0;
    for (Domain m = xs; m; m &= m - 1) {
      const int x = value_of(m);
      out |= x == undef_ ? ubit_ : d[idx(x, c)];
    }
    return out;
  }
  Domain image_left(const std::vector<Domain>& d, int a, Domain ys) const {
    Domain out = 0;
    for (Domain m = ys; m; m &= m - 1) {
      const int y = value_of(m);
      out |= y == undef_ ? ubit_ : d[idx(a, y)];
    }
    return out;
  }

  bool restrict(std::vector<Domain>& d, std::size_t i, Domain keep, bool& changed) {
    const Domain nd = d[i] & keep;
    if (nd == d[i]) return true;
    d[i] = nd;
    changed = true;
    return nd != 0;
  }

  bool propagate(std::vector<Domain>& d) {
    const int one = n_ - 1;
    bool changed = true;
    while (changed) {
      changed = false;

      // Cancellation: a defined value occurs at most once per row and column.
      for (int a = 1; a < one; ++a)
        for (int b = 1; b < one; ++b) {
          const Domain cell = d[idx(a, b)];
          if (!single(cell) || cell == ubit_) continue;
          for (int k = 1; k < one; ++k) {
            if (k != b && !restrict(d, idx(a, k), ~cell, changed)) return false;
            if (k != a && !restrict(d, idx(k, b), ~cell, changed)) return false;
          }
        }

      // Exactly one right and one left complement.
      const Domain one_bit = bit(one);
      for (int a = 1; a < one; ++a) {
        int row_count = 0, row_at = -1, col_count = 0, col_at = -1;
        for (int b = 1; b < one; ++b) {
          if (d[idx(a, b)] & one_bit) ++row_count, row_at = b;
          if (d[idx(b, a)] & one_bit) ++col_count, col_at = b;
        }
        if (row_count == 0 || col_count == 0) return false;
        if (row_count == 1 && !restrict(d, idx(a, row_at), one_bit, changed)) return false;
        if (col_count == 1 && !restrict(d, idx(col_at, a), one_bit, changed)) return false;
      }

      // Associativity with existence: (a+b)+c and a+(b+c) share a value.
      for (int a = 1; a < one; ++a)
        for (int b = 1; b < one; ++b)
          for (int c = 1; c < one; ++c) {
            const std::size_t ab = idx(a, b), bc = idx(b, c);
            const Domain left = image_right(d, d[ab], c);
            const Domain right = image_left(d, a, d[bc]);
            const Domain common = left & right;
            if (common == 0) return false;

            Domain keep_ab = 0;
            for (Domain m = d[ab]; m; m &= m - 1) {
              const int x = value_of(m);
              if ((x == undef_ ? ubit_ : d[idx(x, c)]) & common) keep_ab |= bit(x);
            }
            if (!restrict(d, ab, keep_ab, changed)) return false;
            Domain keep_bc = 0;
            for (Domain m = d[bc]; m; m &= m - 1) {
              const int y = value_of(m);
              if ((y == undef_ ? ubit_ : d[idx(a, y)]) & common) keep_bc |= bit(y);
            }
            if (!restrict(d, bc, keep_bc, changed)) return false;

            if (single(d[ab]) && d[ab] != ubit_) {
              const int x = value_of(d[ab]);
              if (!restrict(d, idx(x, c), common, changed)) return false;
            }
            if (single(d[bc]) && d[bc] != ubit_) {
              const int y = value_of(d[bc]);
              if (!restrict(d, idx(a, y), common, changed)) return false;
            }
          }

      // Conjugates: a fixed sum s = a+b needs s in column a and in row b.
      for (int a = 1; a < one; ++a)
        for (int b = 1; b < one; ++b) {
          const Domain cell = d[idx(a, b)];
          if (!single(cell) || cell == ubit_) continue;
          bool in_column = false, in_row = false;
          for (int k = 0; k < n_ && !(in_column && in_row); ++k) {
            in_column = in_column || (d[idx(k, a)] & cell);
            in_row = in_row || (d[idx(b, k)] & cell);
          }
          if (!in_column || !in_row) return false;
        }
    }
    return true;
  }

  void search(const std::vector<Domain>& d) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (stats_) ++stats_->nodes;

    std::size_t pick = d.size();
    int best = 64;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const int k = std::popcount(d[i]);
      if (k > 1 && k < best) best = k, pick = i;
    }
    if (pick == d.size()) {
      leaf(d);
      return;
    }
    for (Domain m = d[pick]; m && !exhausted_; m &= m - 1) {
      std::vector<Domain> next = d;
      next[pick] = m & (~m + 1);
      if (propagate(next)) search(next);
    }
  }

  void leaf(const std::vector<Domain>& d) {
    PeaTable t(static_cast<std::size_t>(n_));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        const int v = value_of(d[idx(a, b)]);
        if (v == undef_) {
          t.clear_sum(a, b);
        } else {
          t.set_sum(a, b, v);
        }
      }
    if (!satisfies_axioms(t)) return;
    if (stats_) ++stats_->labelled_solutions;
    found_.emplace(block_code(t), std::move(t));
  }

  int n_;
  int undef_;
  Domain ubit_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  EnumerationStats* stats_;
  std::map<std::vector<Element>, PeaTable> found_;
};

std::vector<PeaTable> tables_from_codes(std::size_t n, const std::set<std::vector<Element>>& codes) {
  std::vector<PeaTable> out;
  std::size_t k = 0;
  for (const auto& code : codes) {
    PeaTable t(n, "P" + std::to_string(n) + "_" + std::to_string(++k));
    const auto m = static_cast<Element>(n);
    for (Element a = 0; a < m; ++a)
      for (Element b = 0; b < m; ++b) {
        const Element v = code[static_cast<std::size_t>(a * m + b)];
        if (v == kUndefined) {
          t.clear_sum(a, b);
        } else {
          t.set_sum(a, b, v);
        }
      }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits l;
  l.max_elements = static_cast<std::size_t>(env_number("PEA_ENUM_MAX_N", l.max_elements));
  l.max_nodes = env_number("PEA_ENUM_MAX_NODES", l.max_nodes);
  return l;
}

PartialEnumeration::PartialEnumeration(std::vector<PeaTable> partial, std::size_t cutoff)
    : ResourceError("enumeration node budget exhausted at size " + std::to_string(cutoff) + "; results complete for sizes < " +
                    std::to_string(cutoff)),
      partial_(std::move(partial)),
      cutoff_(cutoff) {}

std::vector<PeaTable> enumerate_size(std::size_t n, const EnumerationLimits& limits, EnumerationStats* stats) {
  if (n == 0) throw DomainError("an algebra has at least one element");
  if (n > limits.max_elements || n > kMaxSearchSize)
    throw ResourceError("enumeration size " + std::to_string(n) + " exceeds the element cap " +
                        std::to_string(std::min(limits.max_elements, kMaxSearchSize)));
  if (n == 1) return {PeaTable(1, "P1_1")};

  TableSearch search(n, limits.max_nodes, stats);
  const auto classes = search.run();
  if (search.exhausted()) throw PartialEnumeration({}, n);
  std::set<std::vector<Element>> codes;
  for (const auto& [key, t] : classes) codes.insert(canonical_code(t));
  if (codes.size() != classes.size()) throw InvariantViolation("block invariant and canonical form disagree");
  return tables_from_codes(n, codes);
}

void enumerate_peas(std::size_t max_n, const std::function<void(const PeaTable&)>& sink, const PeaPredicate& predicate,
                    const EnumerationLimits& limits, EnumerationStats* stats) {
  if (max_n == 0) throw DomainError("enumerate_peas needs max_n >= 1");
  if (max_n > limits.max_elements)
    throw ResourceError("max_n " + std::to_string(max_n) + " exceeds the element cap " +
                        std::to_string(limits.max_elements) + " (PEA_ENUM_MAX_N)");
  std::vector<PeaTable> done;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<PeaTable> batch;
    try {
      batch = enumerate_size(n, limits, stats);
    } catch (const PartialEnumeration&) {
      throw PartialEnumeration(std::move(done), n);
    }
    for (PeaTable& t : batch) {
      if (predicate && !predicate(Pea(t))) continue;
      sink(t);
      done.push_back(std::move(t));
    }
  }
}

std::vector<PeaTable> enumerate_peas(std::size_t max_n, const PeaPredicate& predicate, const EnumerationLimits& limits) {
  std::vector<PeaTable> out;
  enumerate_peas(max_n, [&](const PeaTable& t) { out.push_back(t); }, predicate, limits);
  return out;
}

}  // namespace pea
