#include "pqsurf/perm.hpp"

#include <algorithm>

namespace pqsurf {

Perm::Perm(std::vector<std::uint16_t> images) : im_(std::move(images)) {
  std::vector<bool> seen(im_.size(), false);
  for (auto v : im_) {
    if (v >= im_.size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<std::uint16_t> im(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
  return Perm(std::move(im));
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<std::uint16_t> im(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw std::invalid_argument("cycle point out of range");
      im[static_cast<std::size_t>(from)] = static_cast<std::uint16_t>(to);
    }
  }
  return Perm(std::move(im));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<std::uint16_t> im(im_.size());
  for (std::size_t i = 0; i < im_.size(); ++i) im[i] = rhs.im_[im_[i]];
  Perm p;
  p.im_ = std::move(im);
  return p;
}

Perm Perm::inverse() const {
  std::vector<std::uint16_t> im(im_.size());
  for (std::size_t i = 0; i < im_.size(); ++i) im[im_[i]] = static_cast<std::uint16_t>(i);
  Perm p;
  p.im_ = std::move(im);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < im_.size(); ++i)
    if (im_[i] != i) return false;
  return true;
}

int Perm::order() const {
  Perm p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++k;
    if (k > 1 << 20) throw std::logic_error("order overflow");
  }
  return k;
}

std::string Perm::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(im_.size(), false);
  for (std::size_t i = 0; i < im_.size(); ++i) {
    if (seen[i] || im_[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = im_[j];
    }
    out += ")";
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace pqsurf
