#include "subdiv/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace subdiv {

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && coin(rng(), p)) d.add_arc(u, v);
  return d;
}

namespace {

std::vector<Arc> pair_index(int n) {
  std::vector<Arc> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) pairs.emplace_back(u, v);
  return pairs;
}

Digraph from_bits(int n, const std::vector<Arc>& pairs, std::uint32_t bits) {
  Digraph d(n);
  for (size_t i = 0; i < pairs.size(); ++i)
    if (bits >> i & 1) d.add_arc(pairs[i].first, pairs[i].second);
  return d;
}

}  // namespace

std::vector<Digraph> digraph_classes(int n) {
  if (n < 0 || n > 5) throw std::invalid_argument("digraph_classes: n > 5");
  const auto pairs = pair_index(n);
  const int bits = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> slot(n, std::vector<int>(n, -1));
  for (int i = 0; i < bits; ++i) slot[pairs[i].first][pairs[i].second] = i;

  // Each permutation as a table: bit i of a mask moves to bit image[i].
  std::vector<std::vector<int>> images;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<int> img(bits);
    for (int i = 0; i < bits; ++i)
      img[i] = slot[p[pairs[i].first]][p[pairs[i].second]];
    images.push_back(std::move(img));
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<char> seen(std::size_t{1} << bits, 0);
  std::vector<Digraph> reps;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << bits); ++m) {
    if (seen[m]) continue;
    for (const auto& img : images) {
      std::uint32_t t = 0;
      for (int i = 0; i < bits; ++i)
        if (m >> i & 1) t |= std::uint32_t{1} << img[i];
      seen[t] = 1;
    }
    reps.push_back(from_bits(n, pairs, m));
  }
  return reps;
}

void for_each_labelled(int n, const std::function<void(const Digraph&)>& f) {
  if (n < 0 || n > 4) throw std::invalid_argument("for_each_labelled: n > 4");
  const auto pairs = pair_index(n);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << pairs.size()); ++m)
    f(from_bits(n, pairs, m));
}

}  // namespace subdiv
