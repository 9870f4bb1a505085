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

#include "tokaut/permgroup.hpp"

#include <algorithm>
#include <sstream>

#include "tokaut/errors.hpp"

namespace tokaut {

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v]) {
      throw InvalidArgument("not a permutation: " + to_string());
    }
    seen[v] = 1;
  }
}

Permutation Permutation::from_trusted(std::vector<int> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<int> Permutation::support() const {
  std::vector<int> out;
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) out.push_back(i);
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ",";
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

Permutation Permutation::parse(const std::string& text) {
  const auto open = text.find('[');
  const auto close = text.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw InvalidArgument("permutation must look like [i0,i1,...]: " + text);
  }
  std::vector<int> images;
  std::string body = text.substr(open + 1, close - open - 1);
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream in(body);
  long long v = 0;
  while (in >> v) images.push_back(static_cast<int>(v));
  if (!in.eof()) throw InvalidArgument("bad permutation text: " + text);
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InvalidArgument("composing permutations of degree " +
                          std::to_string(p.degree()) + " and " +
                          std::to_string(q.degree()));
  }
  std::vector<int> images(p.degree());
  for (int i = 0; i < p.degree(); ++i) images[i] = p[q[i]];
  return Permutation::from_trusted(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(p.degree());
  for (int i = 0; i < p.degree(); ++i) images[p[i]] = i;
  return Permutation::from_trusted(std::move(images));
}

std::ostream& operator<<(std::ostream& out, const Permutation& p) {
  return out << p.to_string();
}

Permutation from_cycles(int degree,
                        const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const int from = cycle[j];
      if (from < 0 || from >= degree) {
        throw InvalidArgument("cycle point out of range");
      }
      images[from] = cycle[(j + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

PermGroup::PermGroup(std::vector<Permutation> generators, int degree) {
  if (generators.empty() && degree < 0) {
    throw InvalidArgument("empty generator list needs an explicit degree");
  }
  degree_ = generators.empty() ? degree : generators.front().degree();
  if (degree >= 0 && degree != degree_) {
    throw InvalidArgument("generator degree does not match group degree");
  }
  for (const auto& g : generators) {
    if (g.degree() != degree_) {
      throw InvalidArgument("generators have mixed degrees");
    }
    if (!g.is_identity()) generators_.push_back(g);
  }
  schreier_sims();
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.orbit_index.assign(degree_, -1);
  level.orbit_index[level.base_point] = 0;
  level.reps.assign(1, Permutation::identity(degree_));
  for (std::size_t j = 0; j < level.orbit.size(); ++j) {
    const int point = level.orbit[j];
    for (const auto& s : level.gens) {
      const int image = s[point];
      if (level.orbit_index[image] >= 0) continue;
      level.orbit_index[image] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(image);
      level.reps.push_back(compose(s, level.reps[j]));
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation p,
                                                     std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    const int idx = level.orbit_index[p[level.base_point]];
    if (idx < 0) return {std::move(p), l};
    if (idx > 0) p = compose(inverse(level.reps[idx]), p);
  }
  return {std::move(p), levels_.size()};
}

namespace {

int first_moved_point(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i) {
    if (p[i] != i) return i;
  }
  return -1;
}

}  // namespace

void PermGroup::schreier_sims() {
  levels_.clear();
  // Initial base: first moved points, so no generator fixes the whole base.
  for (const auto& g : generators_) {
    bool fixes_base = true;
    for (const auto& level : levels_) {
      if (g[level.base_point] != level.base_point) {
        fixes_base = false;
        break;
      }
    }
    if (fixes_base) {
      Level level;
      level.base_point = first_moved_point(g);
      levels_.push_back(std::move(level));
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : generators_) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (g[levels_[j].base_point] != levels_[j].base_point) {
          fixes_prefix = false;
          break;
        }
      }
      if (fixes_prefix) levels_[i].gens.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool changed = false;
    const Level& level = levels_[i];
    for (std::size_t j = 0; !changed && j < level.orbit.size(); ++j) {
      for (std::size_t s = 0; !changed && s < level.gens.size(); ++s) {
        const Permutation& gen = level.gens[s];
        const int image = gen[level.orbit[j]];
        // Schreier generator u_{s(b)}^-1 s u_b fixes the base point.
        Permutation schreier =
            compose(inverse(level.reps[level.orbit_index[image]]),
                    compose(gen, level.reps[j]));
        if (schreier.is_identity()) continue;
        auto [residue, drop] = strip(std::move(schreier), i + 1);
        if (drop == levels_.size() && residue.is_identity()) continue;
        if (drop == levels_.size()) {
          Level fresh;
          fresh.base_point = first_moved_point(residue);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = i + 1; l <= drop; ++l) {
          levels_[l].gens.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(drop);
        changed = true;
      }
    }
    if (!changed) --i;
  }
}

std::vector<int> PermGroup::base() const {
  std::vector<int> out;
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& level : levels_) {
    for (const auto& g : level.gens) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  return out;
}

std::vector<int> PermGroup::basic_orbit_sizes() const {
  std::vector<int> out;
  for (const auto& level : levels_) {
    out.push_back(static_cast<int>(level.orbit.size()));
  }
  return out;
}

BigInt PermGroup::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) {
    throw InvalidArgument("membership test with degree " +
                          std::to_string(p.degree()) + " in group of degree " +
                          std::to_string(degree_));
  }
  auto [residue, drop] = strip(p, 0);
  return drop == levels_.size() && residue.is_identity();
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation out = Permutation::identity(degree_);
  for (const auto& level : levels_) {
    std::uniform_int_distribution<std::size_t> pick(0, level.reps.size() - 1);
    out = compose(out, level.reps[pick(rng)]);
  }
  return out;
}

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) {
    throw InvalidArgument("subgroup test across different degrees");
  }
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& p) { return g.contains(p); });
}

}  // namespace tokaut
