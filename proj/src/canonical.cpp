#include "afpoly/canonical.hpp"

#include <algorithm>
#include <limits>

namespace afpoly {

namespace {

std::vector<Axial> normalized_image(const std::vector<Axial>& cells, int sym) {
  std::vector<Axial> img;
  img.reserve(cells.size());
  int min_q = std::numeric_limits<int>::max();
  int min_r = std::numeric_limits<int>::max();
  for (Axial a : cells) {
    Axial b = apply_symmetry(a, sym);
    min_q = std::min(min_q, b.q);
    min_r = std::min(min_r, b.r);
    img.push_back(b);
  }
  for (Axial& b : img) {
    b.q -= min_q;
    b.r -= min_r;
  }
  std::sort(img.begin(), img.end());
  return img;
}

}  // namespace

std::string canonical_key(const HexSystem& hs) {
  std::vector<Axial> best;
  for (int sym = 0; sym < 12; ++sym) {
    std::vector<Axial> img = normalized_image(hs.cells(), sym);
    if (sym == 0 || img < best) best = std::move(img);
  }
  std::string key;
  for (Axial a : best) {
    key += std::to_string(a.q);
    key += ',';
    key += std::to_string(a.r);
    key += ';';
  }
  return key;
}

std::vector<int> canonical_ranks(const HexSystem& hs) {
  std::vector<std::vector<Axial>> images(12);
  int best = 0;
  for (int sym = 0; sym < 12; ++sym) {
    images[sym] = normalized_image(hs.cells(), sym);
    if (images[sym] < images[best]) best = sym;
  }
  std::vector<int> rank(hs.size(), std::numeric_limits<int>::max());
  for (int sym = 0; sym < 12; ++sym) {
    if (images[sym] != images[best]) continue;
    int min_q = std::numeric_limits<int>::max();
    int min_r = std::numeric_limits<int>::max();
    for (Axial a : hs.cells()) {
      Axial b = apply_symmetry(a, sym);
      min_q = std::min(min_q, b.q);
      min_r = std::min(min_r, b.r);
    }
    for (int i = 0; i < hs.size(); ++i) {
      Axial b = apply_symmetry(hs.cell(i), sym);
      b.q -= min_q;
      b.r -= min_r;
      auto it = std::lower_bound(images[sym].begin(), images[sym].end(), b);
      int pos = static_cast<int>(it - images[sym].begin());
      rank[i] = std::min(rank[i], pos);
    }
  }
  return rank;
}

}  // namespace afpoly
