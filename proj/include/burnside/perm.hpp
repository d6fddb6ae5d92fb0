#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

// ==== Permutation ====

/// A permutation of {0,...,degree-1} stored as its image array.
///
/// Serialized form is cycle notation with 1-based points, e.g. "(1,2)(3,4)";
/// everything internal is 0-based. Comparison is lexicographic on images,
/// which makes the identity the minimum among permutations of equal degree.
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (std::uint8_t p : images_) {
      if (p >= images_.size() || seen[p]) throw std::invalid_argument("Perm: images are not a bijection");
      seen[p] = 1;
    }
  }

  [[nodiscard]] static Perm identity(int degree) {
    std::vector<std::uint8_t> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), std::uint8_t{0});
    return Perm(std::move(im));
  }

  /// Parses cycle notation, 1-based points: "(1,2)(3,4)". "()" and "" both
  /// denote the identity. Whitespace between tokens is ignored.
  [[nodiscard]] static Perm from_cycles(const std::string& text, int degree) {
    Perm p = identity(degree);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') throw std::invalid_argument("Perm: expected '(' in cycle notation: " + text);
      ++i;
      std::vector<int> cycle;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw std::invalid_argument("Perm: expected point in cycle notation: " + text);
        int pt = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) pt = pt * 10 + (text[i++] - '0');
        if (pt < 1 || pt > degree) throw std::invalid_argument("Perm: point out of range: " + std::to_string(pt));
        cycle.push_back(pt - 1);
        skip_ws();
        if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
      }
      if (i >= text.size()) throw std::invalid_argument("Perm: unterminated cycle: " + text);
      ++i;  // ')'
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        int from = cycle[k], to = cycle[(k + 1) % cycle.size()];
        if (p.images_[from] != from) throw std::invalid_argument("Perm: point repeated across cycles: " + text);
        p.images_[from] = static_cast<std::uint8_t>(to);
      }
      skip_ws();
    }
    return Perm(std::move(p.images_));  // revalidates the bijection
  }

  [[nodiscard]] int degree() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] std::uint8_t operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const std::vector<std::uint8_t>& images() const { return images_; }

  /// Composition applying `other` first: (this*other)(x) = this(other(x)).
  [[nodiscard]] Perm compose(const Perm& other) const {
    assert(degree() == other.degree() && "compose: degree mismatch");
    std::vector<std::uint8_t> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[x] = images_[other.images_[x]];
    Perm r;
    r.images_ = std::move(im);  // bijection is preserved by composition
    return r;
  }

  [[nodiscard]] Perm inverse() const {
    std::vector<std::uint8_t> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[images_[x]] = static_cast<std::uint8_t>(x);
    Perm r;
    r.images_ = std::move(im);
    return r;
  }

  [[nodiscard]] int order() const {
    int ord = 1;
    for (int len : moved_cycle_lengths()) ord = std::lcm(ord, len);
    return ord;
  }

  /// Full cycle type as a partition of the degree, decreasing, fixed points
  /// included as parts of size 1. Indexes conjugacy classes of S_n.
  [[nodiscard]] std::vector<int> cycle_type() const {
    std::vector<int> parts = moved_cycle_lengths();
    int moved = std::accumulate(parts.begin(), parts.end(), 0);
    for (int k = moved; k < degree(); ++k) parts.push_back(1);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
  }

  /// Lengths (> 1) of the nontrivial cycles, decreasing. Degree-independent
  /// signature used for subgroup-class labeling.
  [[nodiscard]] std::vector<int> moved_cycle_lengths() const {
    std::vector<int> parts;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s]) continue;
      int len = 0;
      for (std::size_t x = s; !seen[x]; x = images_[x]) { seen[x] = 1; ++len; }
      if (len > 1) parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
  }

  [[nodiscard]] bool is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
      if (images_[x] != x) return false;
    return true;
  }

  /// Cycle notation, 1-based, cycles keyed by their minimal point, fixed
  /// points omitted; identity renders as "()".
  [[nodiscard]] std::string to_cycles() const {
    std::string out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s] || images_[s] == s) continue;
      out += '(';
      for (std::size_t x = s; !seen[x]; x = images_[x]) {
        seen[x] = 1;
        if (x != s) out += ',';
        out += std::to_string(x + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  [[nodiscard]] bool operator==(const Perm& o) const { return images_ == o.images_; }
  [[nodiscard]] bool operator!=(const Perm& o) const { return images_ != o.images_; }
  [[nodiscard]] bool operator<(const Perm& o) const { return images_ < o.images_; }

 private:
  std::vector<std::uint8_t> images_;
};

}  // namespace burnside
