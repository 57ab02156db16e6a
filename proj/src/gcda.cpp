#include "gcda/gcda.hpp"

#include <algorithm>
#include <cassert>

namespace gcda {

namespace {

void require_completed(const Grammar& g) {
  if (!g.completed()) fail(ErrorCode::GrammarNotCompleted, "grammar navigation needs a start symbol");
}

void require_range(const Grammar& g, std::uint32_t sp, std::uint32_t ep) {
  const std::uint32_t n = g.exp_len(g.start);
  if (sp < 1 || ep > n || sp > ep) {
    fail(ErrorCode::InvalidRange, "range [" + std::to_string(sp) + ", " + std::to_string(ep) +
                                          "] outside [1, " + std::to_string(n) + "]");
  }
}

}  // namespace

Symbol access(const Grammar& g, std::uint32_t i) {
  require_completed(g);
  if (i < 1 || i > g.exp_len(g.start)) {
    fail(ErrorCode::PositionOutOfRange,
         "position " + std::to_string(i) + " outside [1, " + std::to_string(g.exp_len(g.start)) + "]");
  }
  Symbol v = g.start;
  while (!g.is_terminal(v)) {
    const auto& [l, r] = g.rhs(v);
    const std::uint32_t ll = g.exp_len(l);
    if (i <= ll) {
      v = l;
    } else {
      i -= ll;
      v = r;
    }
  }
  return v;
}

std::vector<Symbol> extract(const Grammar& g, std::uint32_t sp, std::uint32_t ep) {
  require_completed(g);
  require_range(g, sp, ep);
  std::vector<Symbol> out;
  out.reserve(ep - sp + 1);
  // (symbol, 1-based offset of its expansion) work stack.
  std::vector<std::pair<Symbol, std::uint32_t>> stack{{g.start, 1}};
  while (!stack.empty()) {
    auto [v, lo] = stack.back();
    stack.pop_back();
    const std::uint32_t hi = lo + g.exp_len(v) - 1;
    if (hi < sp || lo > ep) continue;
    if (g.is_terminal(v)) {
      out.push_back(v);
      continue;
    }
    const auto& [l, r] = g.rhs(v);
    stack.emplace_back(r, lo + g.exp_len(l));
    stack.emplace_back(l, lo);
  }
  return out;
}

std::vector<CoverSegment> cover(const Grammar& g, std::uint32_t sp, std::uint32_t ep) {
  require_completed(g);
  require_range(g, sp, ep);

  // Descend to the lowest node whose span contains [sp, ep].
  Symbol v = g.start;
  std::uint32_t lo = 1, hi = g.exp_len(g.start);
  while (!g.is_terminal(v)) {
    const auto& [l, r] = g.rhs(v);
    const std::uint32_t mid = lo + g.exp_len(l) - 1;
    if (ep <= mid) {
      v = l;
      hi = mid;
    } else if (sp > mid) {
      v = r;
      lo = mid + 1;
    } else {
      break;
    }
  }
  if (sp == lo && ep == hi) return {{v, lo, hi}};

  assert(!g.is_terminal(v));
  const auto& [lchild, rchild] = g.rhs(v);
  const std::uint32_t mid = lo + g.exp_len(lchild) - 1;

  std::vector<CoverSegment> segs;
  // Left boundary path: maximal nodes tiling [sp, mid], collected inside out.
  {
    std::vector<CoverSegment> rev;
    Symbol u = lchild;
    std::uint32_t ulo = lo, uhi = mid;
    while (sp > ulo) {
      const auto& [l, r] = g.rhs(u);  // sp > ulo implies u is internal
      const std::uint32_t m = ulo + g.exp_len(l) - 1;
      if (sp > m) {
        u = r;
        ulo = m + 1;
      } else {
        rev.push_back({r, m + 1, uhi});
        u = l;
        uhi = m;
      }
    }
    rev.push_back({u, ulo, uhi});
    segs.assign(rev.rbegin(), rev.rend());
  }
  // Right boundary path: maximal nodes tiling [mid+1, ep], left to right.
  {
    Symbol u = rchild;
    std::uint32_t ulo = mid + 1, uhi = hi;
    while (ep < uhi) {
      const auto& [l, r] = g.rhs(u);
      const std::uint32_t m = ulo + g.exp_len(l) - 1;
      if (ep <= m) {
        u = l;
        uhi = m;
      } else {
        segs.push_back({l, ulo, m});
        u = r;
        ulo = m + 1;
      }
    }
    segs.push_back({u, ulo, uhi});
  }
  return segs;
}

}  // namespace gcda
