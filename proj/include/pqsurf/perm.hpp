#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace pqsurf {

// Permutation of {0..n-1}, stored as the image sequence.
// Products compose left-to-right: (a * b)(x) = b(a(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint16_t> images);
  Perm(std::initializer_list<std::uint16_t> images)
      : Perm(std::vector<std::uint16_t>(images)) {}

  static Perm identity(int degree);
  // Cycle notation helper: cycles given as lists of points, fixed points implied.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(im_.size()); }
  std::uint16_t operator()(int i) const { return im_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint16_t>& images() const { return im_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  int order() const;

  bool operator==(const Perm& rhs) const { return im_ == rhs.im_; }
  bool operator<(const Perm& rhs) const { return im_ < rhs.im_; }  // lexicographic

  std::string to_cycle_string() const;

 private:
  std::vector<std::uint16_t> im_;
};

}  // namespace pqsurf
