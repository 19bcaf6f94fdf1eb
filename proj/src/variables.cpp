#include "heatframe/variables.hpp"

#include <algorithm>

namespace heatframe {

VariableId VariableId::psi(std::vector<int> indices) {
  if (indices.empty()) throw std::invalid_argument("psi multi-index must be non-empty");
  if (indices.size() > 16) throw std::invalid_argument("psi multi-index too long");
  std::sort(indices.begin(), indices.end());
  uint64_t packed = 0;
  for (int k : indices) {
    if (k < 1 || k > 15 || k % 2 == 0) throw std::invalid_argument("psi indices must be odd in 1..15");
    packed = (packed << 4) | static_cast<uint64_t>(k);
  }
  return VariableId(VarKind::Psi, static_cast<int>(indices.size()), packed);
}

long long VariableId::weight() const {
  switch (kind_) {
    case VarKind::Z:
      return -a_;
    case VarKind::Lambda:
      return a_;
    case VarKind::Psi: {
      long long w = 0;
      uint64_t p = b_;
      for (int i = 0; i < a_; ++i) {
        w += static_cast<long long>(p & 0xf);
        p >>= 4;
      }
      return w;
    }
    case VarKind::AuxL:
      return a_;
    case VarKind::AuxLog:
      return 0;
  }
  return 0;
}

std::vector<int> VariableId::psi_indices() const {
  if (kind_ != VarKind::Psi) throw std::logic_error("psi_indices on non-psi variable");
  std::vector<int> r(static_cast<size_t>(a_));
  uint64_t p = b_;
  for (int i = a_ - 1; i >= 0; --i) {
    r[static_cast<size_t>(i)] = static_cast<int>(p & 0xf);
    p >>= 4;
  }
  return r;
}

VariableId VariableId::psi_extended(int k) const {
  std::vector<int> idx = psi_indices();
  idx.push_back(k);
  return psi(std::move(idx));
}

std::string VariableId::to_string() const {
  switch (kind_) {
    case VarKind::Z:
      return "z" + std::to_string(a_);
    case VarKind::Lambda:
      return "l" + std::to_string(a_);
    case VarKind::Psi: {
      std::string s = "psi[";
      auto idx = psi_indices();
      for (size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i]);
      }
      return s + "]";
    }
    case VarKind::AuxL:
      return "Llnphi[" + std::to_string(a_) + "]";
    case VarKind::AuxLog:
      return "lnphi";
  }
  return "?";
}

std::string VariableId::to_latex() const {
  switch (kind_) {
    case VarKind::Z:
      return "z_{" + std::to_string(a_) + "}";
    case VarKind::Lambda:
      return "\\lambda_{" + std::to_string(a_) + "}";
    case VarKind::Psi: {
      std::string s = "\\psi_{";
      for (int k : psi_indices()) s += std::to_string(k);
      return s + "}";
    }
    case VarKind::AuxL:
      return "L_{" + std::to_string(a_) + "}\\ln\\varphi";
    case VarKind::AuxLog:
      return "\\ln\\varphi";
  }
  return "?";
}

std::vector<int> GenusContext::z_indices() const {
  std::vector<int> r;
  for (int k = 1; k <= 2 * g_ - 1; k += 2) r.push_back(k);
  return r;
}

std::vector<int> GenusContext::lambda_indices() const {
  std::vector<int> r;
  for (int k = 4; k <= 4 * g_ + 2; k += 2) r.push_back(k);
  return r;
}

}  // namespace heatframe
