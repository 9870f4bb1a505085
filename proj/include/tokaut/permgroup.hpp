// Copyright 2026 The tokaut Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOKAUT_PERMGROUP_HPP_
#define TOKAUT_PERMGROUP_HPP_

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tokaut {

using BigInt = boost::multiprecision::cpp_int;

// Permutation of {0..N-1} stored as its image array.
//
// Composition convention: compose(p, q) applies q first, so
// compose(p, q)[i] == p[q[i]].
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int degree);
  // Throws InvalidArgument if images is not a bijection on 0..N-1.
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  int apply(int i) const { return images_[i]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;
  // Points moved, ascending.
  std::vector<int> support() const;

  // "[i0,i1,...]"
  std::string to_string() const;
  static Permutation parse(const std::string& text);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  // Skips the bijection check; callers guarantee it.
  static Permutation from_trusted(std::vector<int> images);

  std::vector<int> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
std::ostream& operator<<(std::ostream& out, const Permutation& p);
// Builds a permutation of the given degree from disjoint cycles.
Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

// Permutation group with a base and strong generating set computed by a
// deterministic Schreier-Sims. Immutable after construction; queries are
// safe to call concurrently.
class PermGroup {
 public:
  // Generators must share one degree; identities are dropped. An empty
  // generator list requires an explicit degree.
  explicit PermGroup(std::vector<Permutation> generators, int degree = -1);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::vector<int> base() const;
  // Union of the per-level strong generators, in discovery order.
  std::vector<Permutation> strong_generators() const;
  // Orbit sizes of the stabilizer chain along the base.
  std::vector<int> basic_orbit_sizes() const;

  BigInt order() const;
  bool contains(const Permutation& p) const;

  // Element assembled from uniformly random coset representatives.
  Permutation random_element(std::mt19937_64& rng) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<int> orbit_index;  // point -> index into orbit/reps, or -1
    std::vector<Permutation> reps;  // reps[j] maps base_point to orbit[j]
  };

  void rebuild_orbit(Level& level) const;
  // Sifts p through levels [from, end). Returns the residue and the level
  // where it dropped out (levels_.size() when it passed all of them).
  std::pair<Permutation, std::size_t> strip(Permutation p,
                                            std::size_t from) const;
  void schreier_sims();

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

// Every generator of h is a member of g.
bool is_subgroup(const PermGroup& h, const PermGroup& g);

}  // namespace tokaut

#endif  // TOKAUT_PERMGROUP_HPP_
