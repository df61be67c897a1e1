#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tuttelab {

// Root-preserving isomorphism invariant: equal iff the maps are equal as
// rooted maps.
struct CanonicalCode {
  std::vector<int32_t> code;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) { return a.code <=> b.code; }
};

struct CanonicalCodeHash {
  size_t operator()(const CanonicalCode& c) const noexcept;
};

// Rooted planar map as a rotation system. Darts are 0..n_darts-1, alpha pairs
// the two darts of an edge, sigma is the counterclockwise rotation around each
// vertex. Faces are the orbits of phi = sigma o alpha; the orbit of a dart d is
// the face lying to its right, so the root face is the phi-orbit of the root.
// Root vertex is the sigma-orbit of the root. The atomic map has no dart and
// root -1. Construction validates connectivity and genus 0.
class RootedMap {
 public:
  RootedMap() = default;  // atomic map
  RootedMap(std::vector<int32_t> alpha, std::vector<int32_t> sigma, int32_t root);

  static RootedMap atomic() { return {}; }
  static RootedMap single_loop();
  static RootedMap single_link();

  bool is_atomic() const { return alpha_.empty(); }
  int n_darts() const { return static_cast<int>(alpha_.size()); }
  int num_edges() const { return n_darts() / 2; }
  int num_vertices() const;
  int num_faces() const;
  int32_t root() const { return root_; }

  int32_t alpha(int32_t d) const { return alpha_[d]; }
  int32_t sigma(int32_t d) const { return sigma_[d]; }
  int32_t phi(int32_t d) const { return sigma_[alpha_[d]]; }
  int32_t sigma_inv(int32_t d) const;
  const std::vector<int32_t>& alpha() const { return alpha_; }
  const std::vector<int32_t>& sigma() const { return sigma_; }

  // Orbits listed from the smallest unvisited dart, except that the orbit
  // through the root comes first and starts at the root.
  std::vector<std::vector<int32_t>> vertices() const;
  std::vector<std::vector<int32_t>> faces() const;
  // Index into vertices() for each dart.
  std::vector<int32_t> vertex_of() const;
  std::vector<int32_t> face_of() const;

  int root_vertex_degree() const;
  int root_face_degree() const;
  std::vector<int> vertex_degrees() const;  // sorted
  std::vector<int> face_degrees() const;    // sorted

  CanonicalCode canonical_code() const;
  // Same map relabelled in breadth-first order from the root (root = 0).
  RootedMap canonical() const;
  // Dart relabelling used by canonical(): old dart -> new dart.
  std::vector<int32_t> canonical_labelling() const;
  RootedMap with_root(int32_t d) const;

  friend bool operator==(const RootedMap& a, const RootedMap& b) {
    return a.root_ == b.root_ && a.alpha_ == b.alpha_ && a.sigma_ == b.sigma_;
  }

 private:
  struct Unchecked {};
  RootedMap(std::vector<int32_t> alpha, std::vector<int32_t> sigma, int32_t root, Unchecked);
  friend RootedMap make_unchecked(std::vector<int32_t>, std::vector<int32_t>, int32_t);

  std::vector<int32_t> alpha_;
  std::vector<int32_t> sigma_;
  int32_t root_ = -1;
};

// Builds a map whose invariants the caller guarantees (used on hot paths of
// the generators; debug builds still validate).
RootedMap make_unchecked(std::vector<int32_t> alpha, std::vector<int32_t> sigma, int32_t root);

// Throws InvalidMap describing the first violated invariant.
void validate_rotation_system(const std::vector<int32_t>& alpha, const std::vector<int32_t>& sigma,
                              int32_t root);

}  // namespace tuttelab
