// Copyright 2026 The meshsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "meshsim/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace meshsim {

Permutation Permutation::identity(std::size_t size) {
  std::vector<std::size_t> images(size);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<std::size_t> images) {
  std::vector<bool> hit(images.size(), false);
  for (std::size_t x = 0; x < images.size(); ++x) {
    const std::size_t y = images[x];
    if (y >= images.size() || hit[y]) {
      throw PermutationError("permutation: image list is not a bijection at label " +
                             std::to_string(x));
    }
    hit[y] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t size,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<std::size_t> images(size);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<bool> seen(size, false);
  for (const auto& cycle : cycles) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      const std::size_t x = cycle[t];
      if (x >= size || seen[x]) {
        throw PermutationError("permutation: cycles repeat or exceed label " + std::to_string(x));
      }
      seen[x] = true;
      images[x] = cycle[(t + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw PermutationError("compose: label sets differ (" + std::to_string(p.size()) + " vs " +
                           std::to_string(q.size()) + ")");
  }
  std::vector<std::size_t> images(p.size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = p(q(x));
  return Permutation::from_images(std::move(images));
}

Permutation power(const Permutation& p, std::uint64_t k) {
  Permutation result = Permutation::identity(p.size());
  Permutation base = p;
  while (k > 0) {
    if (k & 1U) result = compose(result, base);
    k >>= 1U;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

std::vector<std::size_t> CycleDecomposition::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) {
    throw std::overflow_error("permutation order exceeds 64 bits");
  }
  return out;
}

}  // namespace

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition d;
  std::vector<bool> seen(p.size(), false);
  // Scanning labels in ascending order makes each cycle start at its
  // minimum and leaves the cycles sorted by first label.
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    d.order = checked_lcm(d.order, cycle.size());
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

std::uint64_t permutation_order(const Permutation& p) { return cycle_decomposition(p).order; }

std::optional<std::uint64_t> order_by_iteration(const Permutation& p, std::uint64_t limit) {
  Permutation q = p;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (q.is_identity()) return k;
    q = compose(p, q);
  }
  return std::nullopt;
}

namespace {

std::vector<std::size_t> rotate_to_min(std::vector<std::size_t> cycle) {
  if (!cycle.empty()) {
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  }
  return cycle;
}

}  // namespace

bool same_cycles_up_to_rotation(std::vector<std::vector<std::size_t>> a,
                                std::vector<std::vector<std::size_t>> b) {
  for (auto& c : a) c = rotate_to_min(std::move(c));
  for (auto& c : b) c = rotate_to_min(std::move(c));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::size_t label_index(int n, GridPosition p) {
  require_position(n, p);
  return static_cast<std::size_t>(p.r - 1) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(p.c - 1);
}

GridPosition label_position(int n, std::size_t label) {
  require_dimension(n);
  const auto un = static_cast<std::size_t>(n);
  if (label >= un * un) throw DimensionError("label " + std::to_string(label) + " outside grid");
  return {static_cast<int>(label / un) + 1, static_cast<int>(label % un) + 1};
}

std::string format_label(int n, GridPosition p) {
  if (n <= 9) return std::to_string(p.r) + std::to_string(p.c);
  return "(" + std::to_string(p.r) + "," + std::to_string(p.c) + ")";
}

std::string format_cycles(int n, const CycleDecomposition& d) {
  std::ostringstream os;
  bool first_cycle = true;
  for (const auto& cycle : d.cycles) {
    if (!first_cycle) os << ' ';
    first_cycle = false;
    os << '(';
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      if (t > 0) os << ' ';
      os << format_label(n, label_position(n, cycle[t]));
    }
    os << ')';
  }
  return os.str();
}

std::vector<std::vector<std::size_t>> parse_cycles(int n, const std::string& text) {
  if (n > 9) throw std::invalid_argument("parse_cycles: two-digit labels need n <= 9");
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t>* open = nullptr;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch == '(') {
      if (open != nullptr) throw std::invalid_argument("parse_cycles: nested '('");
      open = &cycles.emplace_back();
    } else if (ch == ')') {
      if (open == nullptr || open->empty()) throw std::invalid_argument("parse_cycles: stray ')'");
      open = nullptr;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (open == nullptr || pos + 1 >= text.size() ||
          !std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
        throw std::invalid_argument("parse_cycles: malformed label near offset " +
                                    std::to_string(pos));
      }
      const GridPosition p{ch - '0', text[pos + 1] - '0'};
      open->push_back(label_index(n, p));
      ++pos;
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument(std::string("parse_cycles: unexpected '") + ch + "'");
    }
  }
  if (open != nullptr) throw std::invalid_argument("parse_cycles: unterminated cycle");
  return cycles;
}

}  // namespace meshsim
