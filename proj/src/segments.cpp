#include "afpoly/segments.hpp"

#include <algorithm>

namespace afpoly {

std::vector<Segment> segments(const HexSystem& hs) {
  std::vector<Segment> out;
  if (hs.size() == 1) {
    out.push_back({{0}, 0, 1});
    return out;
  }
  for (int dir = 0; dir < 3; ++dir) {
    for (int start = 0; start < hs.size(); ++start) {
      if (hs.neighbor(start, opposite(dir)) >= 0) continue;  // not a run head
      if (hs.neighbor(start, dir) < 0) continue;             // no run at all
      Segment seg;
      seg.dir = dir;
      int cur = start;
      while (cur >= 0) {
        seg.cells.push_back(cur);
        cur = hs.neighbor(cur, dir);
      }
      seg.length = static_cast<int>(seg.cells.size());
      out.push_back(std::move(seg));
    }
  }
  std::sort(out.begin(), out.end(), [&](const Segment& a, const Segment& b) {
    if (a.dir != b.dir) return a.dir < b.dir;
    return hs.cell(a.cells.front()) < hs.cell(b.cells.front());
  });
  return out;
}

HexClass classify_hexagon(const HexSystem& hs, int cell) {
  std::vector<int> dirs = hs.fusion_dirs(cell);
  switch (dirs.size()) {
    case 0:
    case 1:
      return HexClass::Terminal;
    case 2:
      return dirs[1] == opposite(dirs[0]) ? HexClass::Linear : HexClass::Kink;
    default:
      return HexClass::Branched;
  }
}

}  // namespace afpoly
