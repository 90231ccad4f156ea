#include "afpoly/tail.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "afpoly/canonical.hpp"
#include "afpoly/segments.hpp"

namespace afpoly {

namespace {

// Arms through `cell` taken from the maximal segments that end there,
// reoriented to start at `cell`.
std::vector<std::vector<int>> arms_at(const std::vector<Segment>& segs, int cell) {
  std::vector<std::vector<int>> arms;
  for (const Segment& s : segs) {
    if (s.cells.front() == cell) {
      arms.push_back(s.cells);
    } else if (s.cells.back() == cell) {
      std::vector<int> rev(s.cells.rbegin(), s.cells.rend());
      arms.push_back(std::move(rev));
    }
  }
  return arms;
}

}  // namespace

std::vector<Tail> enumerate_tails(const HexSystem& hs) {
  std::vector<Tail> out;
  std::vector<Segment> segs = segments(hs);

  if (segs.size() == 1) {
    // Linear chain (or a lone hexagon): any terminal end anchors the tail.
    const std::vector<int>& chain = segs[0].cells;
    std::vector<int> ends = {chain.front()};
    if (chain.size() > 1) ends.push_back(chain.back());
    for (int h : ends) {
      Tail t;
      t.h = h;
      t.kind = TailKind::LinearChain;
      t.t1 = static_cast<int>(chain.size()) - 2;
      t.arm1 = chain;
      if (t.arm1.front() != h) std::reverse(t.arm1.begin(), t.arm1.end());
      t.arm2 = {h};
      t.arm3 = {h};
      out.push_back(std::move(t));
    }
    return out;
  }

  for (int c = 0; c < hs.size(); ++c) {
    HexClass cls = classify_hexagon(hs, c);
    if (cls == HexClass::Kink) {
      auto arms = arms_at(segs, c);
      for (int pick = 0; pick < 2; ++pick) {
        const std::vector<int>& a1 = arms[pick];
        const std::vector<int>& a3 = arms[1 - pick];
        if (classify_hexagon(hs, a1.back()) != HexClass::Terminal) continue;
        Tail t;
        t.h = c;
        t.kind = TailKind::EndKink;
        t.arm1 = a1;
        t.arm2 = {c};
        t.arm3 = a3;
        t.t1 = static_cast<int>(a1.size()) - 2;
        t.t3 = static_cast<int>(a3.size()) - 2;
        out.push_back(std::move(t));
      }
    } else if (cls == HexClass::Branched) {
      auto arms = arms_at(segs, c);
      for (int k = 0; k < 3; ++k) {
        // arms[k] plays arm3; the other two must both end at terminals.
        const std::vector<int>& a = arms[(k + 1) % 3];
        const std::vector<int>& b = arms[(k + 2) % 3];
        if (classify_hexagon(hs, a.back()) != HexClass::Terminal) continue;
        if (classify_hexagon(hs, b.back()) != HexClass::Terminal) continue;
        Tail t;
        t.h = c;
        t.kind = TailKind::EndBranched;
        bool a_first = a.size() != b.size() ? a.size() < b.size() : a.back() < b.back();
        t.arm1 = a_first ? a : b;
        t.arm2 = a_first ? b : a;
        t.arm3 = arms[k];
        t.t1 = static_cast<int>(t.arm1.size()) - 2;
        t.t2 = static_cast<int>(t.arm2.size()) - 2;
        t.t3 = static_cast<int>(t.arm3.size()) - 2;
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

Tail find_tail(const HexSystem& hs) {
  std::vector<Tail> all = enumerate_tails(hs);
  if (all.empty())
    throw InternalError("no tail found: system should contain an end kink or end branched hexagon");
  std::vector<int> rank = canonical_ranks(hs);
  auto key = [&](const Tail& t) {
    return std::make_tuple(rank[t.h], t.t1, t.t3, t.t2, rank[t.arm1.back()],
                           rank[t.arm3.back()], rank[t.arm2.back()]);
  };
  const Tail* best = &all[0];
  for (const Tail& t : all)
    if (key(t) < key(*best)) best = &t;
  Tail chosen = *best;
  validate_tail(hs, chosen);
  return chosen;
}

void validate_tail(const HexSystem& hs, const Tail& tail) {
  auto fail = [](const char* msg) { throw InternalError(std::string("invalid tail: ") + msg); };
  if (tail.arm1.empty() || tail.arm2.empty() || tail.arm3.empty()) fail("empty arm");
  if (tail.arm1.front() != tail.h || tail.arm2.front() != tail.h || tail.arm3.front() != tail.h)
    fail("arms must start at the anchor");
  if (static_cast<int>(tail.arm1.size()) != tail.t1 + 2) fail("arm1 length");
  switch (tail.kind) {
    case TailKind::LinearChain:
      if (tail.t2 != -1 || tail.t3 != -1) fail("linear tail parameters");
      if (static_cast<int>(tail.arm1.size()) != hs.size()) fail("linear tail must span the system");
      if (tail.arm2 != std::vector<int>{tail.h} || tail.arm3 != std::vector<int>{tail.h})
        fail("linear tail arms");
      break;
    case TailKind::EndKink:
      if (tail.t2 != -1 || tail.t1 < 0 || tail.t3 < 0) fail("end-kink parameters");
      if (tail.arm2 != std::vector<int>{tail.h}) fail("end-kink arm2");
      if (static_cast<int>(tail.arm3.size()) != tail.t3 + 2) fail("arm3 length");
      if (classify_hexagon(hs, tail.arm1.back()) != HexClass::Terminal)
        fail("arm1 must end at a terminal hexagon");
      break;
    case TailKind::EndBranched:
      if (tail.t1 < 0 || tail.t2 < 0 || tail.t3 < 0) fail("end-branched parameters");
      if (static_cast<int>(tail.arm2.size()) != tail.t2 + 2) fail("arm2 length");
      if (static_cast<int>(tail.arm3.size()) != tail.t3 + 2) fail("arm3 length");
      if (classify_hexagon(hs, tail.arm1.back()) != HexClass::Terminal ||
          classify_hexagon(hs, tail.arm2.back()) != HexClass::Terminal)
        fail("arm1 and arm2 must end at terminal hexagons");
      break;
  }
}

SubsystemSet subsystems(const HexSystem& hs, const Tail& tail) {
  validate_tail(hs, tail);
  SubsystemSet out;

  std::vector<char> del(hs.size(), 0);
  for (int c : tail.arm1) del[c] = 1;
  for (int c : tail.arm2) del[c] = 1;

  del[tail.h] = 0;
  out.h1 = components_after_deleting(hs, del);

  del[tail.h] = 1;
  out.h2 = components_after_deleting(hs, del);

  for (int c : tail.arm3) del[c] = 1;
  out.h3 = components_after_deleting(hs, del);

  if (tail.kind == TailKind::EndBranched && tail.t3 == 0) {
    // The far cell of arm3 has up to two neighbours on the sides flanking
    // its outer vertical edge; each starts a straight run to delete.
    int y = tail.arm3.back();
    int d = hs.dir_between(tail.h, y);
    for (int dd : {(d + 1) % 6, (d + 5) % 6}) {
      int n = hs.neighbor(y, dd);
      if (n < 0) continue;
      if (del[n]) throw InternalError("flanking run re-enters the tail");
      while (n >= 0) {
        del[n] = 1;
        n = hs.neighbor(n, dd);
      }
    }
    out.h4 = components_after_deleting(hs, del);
    if (out.h4->size() > 4) throw InternalError("too many components after flank deletion");
  }

  if (out.h1.size() != 1) throw InternalError("h1 must be a single component");
  if (out.h2.size() > 1) throw InternalError("h2 must be empty or connected");
  if (out.h3.size() > 2) throw InternalError("h3 must have at most two components");
  return out;
}

}  // namespace afpoly
