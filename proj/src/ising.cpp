#include "tuttelab/ising.hpp"

#include "tuttelab/errors.hpp"
#include "tuttelab/map_ops.hpp"

namespace tuttelab {

std::vector<int> colour_darts(const RootedMap& m, const std::vector<int>& vertex_colour) {
  if (static_cast<int>(vertex_colour.size()) != m.num_vertices()) throw DomainError("one colour per vertex expected");
  auto vof = m.vertex_of();
  std::vector<int> out(m.n_darts());
  for (int32_t d = 0; d < m.n_darts(); ++d) out[d] = vertex_colour[vof[d]];
  return out;
}

bool is_properly_bicoloured(const ColouredMap& c) {
  for (int32_t d = 0; d < c.map.n_darts(); ++d)
    if (c.colour[d] == c.colour[c.map.alpha(d)]) return false;
  return true;
}

SubdividedMap ising_subdivide(const ColouredMap& c, const std::vector<int>& counts) {
  const RootedMap& m = c.map;
  auto reps = edge_darts(m);
  if (counts.size() != reps.size()) throw DomainError("one count per edge expected");
  std::vector<int32_t> alpha = m.alpha(), sigma = m.sigma();
  std::vector<int> colour = c.colour;
  std::vector<bool> square(m.n_darts(), false);
  for (size_t e = 0; e < reps.size(); ++e) {
    const int k = counts[e];
    const int32_t d = reps[e], end = m.alpha(d);
    const bool mono = c.colour[d] == c.colour[end];
    if (k < 0 || (k % 2 == 1) != mono) throw DomainError("subdivision count has the wrong parity");
    int32_t prev = d;
    int shade = c.colour[d];
    for (int i = 0; i < k; ++i) {
      const int32_t p = static_cast<int32_t>(alpha.size()), q = p + 1;
      shade ^= 1;
      alpha.push_back(prev);
      alpha.push_back(-1);
      alpha[prev] = p;
      sigma.push_back(q);
      sigma.push_back(p);
      colour.push_back(shade);
      colour.push_back(shade);
      square.push_back(true);
      square.push_back(true);
      prev = q;
    }
    alpha[prev] = end;
    alpha[end] = prev;
  }
  ColouredMap out{RootedMap(std::move(alpha), std::move(sigma), m.root()), std::move(colour)};
  return SubdividedMap{std::move(out), std::move(square)};
}

ColouredMap ising_erase(const SubdividedMap& s) {
  const RootedMap& m = s.coloured.map;
  std::vector<int32_t> id(m.n_darts(), -1);
  int32_t next = 0;
  for (int32_t d = 0; d < m.n_darts(); ++d)
    if (!s.square[d]) id[d] = next++;
  if (m.is_atomic()) return s.coloured;
  if (s.square[m.root()]) throw DomainError("root at a square vertex");
  std::vector<int32_t> alpha(next), sigma(next);
  std::vector<int> colour(next);
  for (int32_t d = 0; d < m.n_darts(); ++d) {
    if (s.square[d]) continue;
    int32_t e = m.alpha(d);
    while (s.square[e]) e = m.alpha(m.sigma(e));
    if (s.square[m.sigma(d)]) throw DomainError("square vertex next to an original dart");
    alpha[id[d]] = id[e];
    sigma[id[d]] = id[m.sigma(d)];
    colour[id[d]] = s.coloured.colour[d];
  }
  return ColouredMap{RootedMap(std::move(alpha), std::move(sigma), id[m.root()]),
                     std::move(colour)};
}

}  // namespace tuttelab
