#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gasep {

/// Identifies one polynomial variable: either a coordinate function x[i,j]
/// of the j-th summand (summand j is 1-based, level i is 0-based) or one of
/// the two auxiliary variables y0, y1 used by transvectant computations.
///
/// The built-in order is x[0,1] < x[1,1] < ... < x[n_k,k] < y0 < y1, i.e.
/// main variables sorted by (summand, level) and below both auxiliaries.
class VarId {
 public:
  static VarId main(int level, int summand) {
    if (summand < 1 || summand > 0x7fff || level < 0 || level > 0xffff)
      throw std::invalid_argument("VarId: index out of range");
    return VarId((static_cast<uint32_t>(summand) << 16) | static_cast<uint32_t>(level));
  }

  static VarId aux(int index) {
    if (index != 0 && index != 1) throw std::invalid_argument("VarId: aux index must be 0 or 1");
    return VarId(kAuxBit | static_cast<uint32_t>(index));
  }

  bool is_aux() const { return (code_ & kAuxBit) != 0; }
  bool is_main() const { return !is_aux(); }

  int level() const { return static_cast<int>(code_ & 0xffffu); }
  int summand() const { return static_cast<int>((code_ & ~kAuxBit) >> 16); }
  int aux_index() const { return static_cast<int>(code_ & 1u); }

  std::string name() const {
    if (is_aux()) return aux_index() == 0 ? "y0" : "y1";
    return "x[" + std::to_string(level()) + "," + std::to_string(summand()) + "]";
  }

  uint32_t code() const { return code_; }

  friend auto operator<=>(VarId a, VarId b) { return a.code_ <=> b.code_; }
  friend bool operator==(VarId a, VarId b) { return a.code_ == b.code_; }

 private:
  static constexpr uint32_t kAuxBit = 0x80000000u;
  explicit VarId(uint32_t code) : code_(code) {}
  uint32_t code_;
};

inline VarId y0() { return VarId::aux(0); }
inline VarId y1() { return VarId::aux(1); }

}  // namespace gasep
