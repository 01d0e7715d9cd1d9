#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "genconn/errors.hpp"
#include "genconn/rng.hpp"

namespace genconn {

inline constexpr double kDefaultSu2Tolerance = 1e-6;

enum class GroupKind { cyclic, symmetric, su2 };

// Compact structure group: exactly enumerable finite kinds (cyclic Z_n,
// symmetric S_n with n <= 6) plus SU(2) realized as unit quaternions.
struct GroupDescriptor {
  GroupKind kind = GroupKind::cyclic;
  int n = 1;                               // order (cyclic) / degree (symmetric)
  double tolerance = kDefaultSu2Tolerance; // su2 comparisons only

  static GroupDescriptor cyclic(int n);
  static GroupDescriptor symmetric(int n);
  static GroupDescriptor su2(double tolerance = kDefaultSu2Tolerance);

  bool is_finite() const { return kind != GroupKind::su2; }
  // |G| for finite kinds; throws for su2.
  long long order() const;

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.kind == b.kind && (a.kind == GroupKind::su2 || a.n == b.n);
  }
};

struct Quaternion {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;
};

struct GroupElement {
  GroupDescriptor descriptor;
  // Active payload is selected by descriptor.kind.
  std::int64_t residue = 0;                // cyclic: value in [0, n)
  std::vector<std::uint8_t> permutation;   // symmetric: image array
  Quaternion quaternion;                   // su2: unit norm
};

GroupElement cyclic_element(const GroupDescriptor& d, std::int64_t value);
GroupElement permutation_element(const GroupDescriptor& d,
                                 std::vector<std::uint8_t> images);
GroupElement su2_element(const GroupDescriptor& d, double w, double x, double y,
                         double z);

GroupElement identity(const GroupDescriptor& d);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
bool equal(const GroupElement& a, const GroupElement& b);

// 0/1 for finite kinds, max-abs quaternion component difference for su2.
double distance(const GroupElement& a, const GroupElement& b);

// Natural class function: 2w for su2 (matrix trace), cos(2 pi k / n) for
// cyclic (real part of the defining character), fixed-point count for
// symmetric (character of the permutation representation).
double character(const GroupElement& a);

GroupElement haar_sample(const GroupDescriptor& d, RandomStream& rng);

// All elements of a finite group in a fixed deterministic order.
std::vector<GroupElement> enumerate_elements(const GroupDescriptor& d);

// Unit quaternion exp of the pure vector (vx, vy, vz).
Quaternion quaternion_exp_pure(double vx, double vy, double vz);

std::string to_string(const GroupDescriptor& d);
GroupDescriptor parse_descriptor(std::string_view text);

std::string to_string(const GroupElement& g);
GroupElement parse_element(const GroupDescriptor& d, std::string_view text);

}  // namespace genconn
