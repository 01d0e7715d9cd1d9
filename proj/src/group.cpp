#include "genconn/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>

namespace genconn {

namespace {

void require_same_descriptor(const GroupElement& a, const GroupElement& b) {
  if (!(a.descriptor == b.descriptor)) {
    fail(ErrorCode::incompatible_group,
         "elements of " + to_string(a.descriptor) + " and " +
             to_string(b.descriptor) + " cannot be combined");
  }
}

double quaternion_norm(const Quaternion& q) {
  return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}

Quaternion normalized(Quaternion q) {
  const double norm = quaternion_norm(q);
  if (norm <= 0.0 || !std::isfinite(norm)) {
    fail(ErrorCode::invalid_argument, "su2 payload has non-normalizable norm");
  }
  q.w /= norm;
  q.x /= norm;
  q.y /= norm;
  q.z /= norm;
  return q;
}

std::string format_real(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::vector<std::string> split_fields(std::string_view text) {
  std::vector<std::string> fields;
  std::istringstream in{std::string(text)};
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

std::int64_t parse_int(const std::string& field, const char* what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(field, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::parse_error, std::string("invalid ") + what + " '" + field + "'");
  }
  if (used != field.size()) {
    fail(ErrorCode::parse_error, std::string("invalid ") + what + " '" + field + "'");
  }
  return value;
}

double parse_real(const std::string& field, const char* what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(field, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::parse_error, std::string("invalid ") + what + " '" + field + "'");
  }
  if (used != field.size()) {
    fail(ErrorCode::parse_error, std::string("invalid ") + what + " '" + field + "'");
  }
  return value;
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::incompatible_group: return "incompatible-group";
    case ErrorCode::broken_path: return "broken-path";
    case ErrorCode::unknown_generator: return "unknown-generator";
    case ErrorCode::unknown_vertex: return "unknown-vertex";
    case ErrorCode::non_composable: return "non-composable";
    case ErrorCode::graph_mismatch: return "graph-mismatch";
    case ErrorCode::no_geometry: return "no-geometry";
    case ErrorCode::unsupported_group: return "unsupported-group";
    case ErrorCode::not_closed: return "not-closed";
    case ErrorCode::unsupported_exact: return "unsupported-exact";
    case ErrorCode::budget_exceeded: return "budget-exceeded";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::invalid_argument: return "invalid-argument";
  }
  return "unknown-error";
}

GroupDescriptor GroupDescriptor::cyclic(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "cyclic order must be positive");
  GroupDescriptor d;
  d.kind = GroupKind::cyclic;
  d.n = n;
  return d;
}

GroupDescriptor GroupDescriptor::symmetric(int n) {
  if (n < 1 || n > 6) {
    fail(ErrorCode::invalid_argument, "symmetric degree must be in [1, 6]");
  }
  GroupDescriptor d;
  d.kind = GroupKind::symmetric;
  d.n = n;
  return d;
}

GroupDescriptor GroupDescriptor::su2(double tolerance) {
  if (!(tolerance > 0.0) || tolerance > kDefaultSu2Tolerance) {
    fail(ErrorCode::invalid_argument,
         "su2 tolerance must lie in (0, 1e-6]");
  }
  GroupDescriptor d;
  d.kind = GroupKind::su2;
  d.n = 0;
  d.tolerance = tolerance;
  return d;
}

long long GroupDescriptor::order() const {
  switch (kind) {
    case GroupKind::cyclic:
      return n;
    case GroupKind::symmetric: {
      long long f = 1;
      for (int k = 2; k <= n; ++k) f *= k;
      return f;
    }
    case GroupKind::su2:
      fail(ErrorCode::unsupported_group, "su2 has no finite order");
  }
  return 0;
}

GroupElement cyclic_element(const GroupDescriptor& d, std::int64_t value) {
  if (d.kind != GroupKind::cyclic) {
    fail(ErrorCode::invalid_argument, "descriptor is not cyclic");
  }
  GroupElement g;
  g.descriptor = d;
  g.residue = ((value % d.n) + d.n) % d.n;
  return g;
}

GroupElement permutation_element(const GroupDescriptor& d,
                                 std::vector<std::uint8_t> images) {
  if (d.kind != GroupKind::symmetric) {
    fail(ErrorCode::invalid_argument, "descriptor is not symmetric");
  }
  if (static_cast<int>(images.size()) != d.n) {
    fail(ErrorCode::invalid_argument, "permutation size does not match degree");
  }
  std::vector<bool> seen(images.size(), false);
  for (const std::uint8_t image : images) {
    if (image >= images.size() || seen[image]) {
      fail(ErrorCode::invalid_argument, "permutation payload is not a bijection");
    }
    seen[image] = true;
  }
  GroupElement g;
  g.descriptor = d;
  g.permutation = std::move(images);
  return g;
}

GroupElement su2_element(const GroupDescriptor& d, double w, double x, double y,
                         double z) {
  if (d.kind != GroupKind::su2) {
    fail(ErrorCode::invalid_argument, "descriptor is not su2");
  }
  GroupElement g;
  g.descriptor = d;
  g.quaternion = normalized(Quaternion{w, x, y, z});
  return g;
}

GroupElement identity(const GroupDescriptor& d) {
  GroupElement g;
  g.descriptor = d;
  switch (d.kind) {
    case GroupKind::cyclic:
      g.residue = 0;
      break;
    case GroupKind::symmetric:
      g.permutation.resize(d.n);
      std::iota(g.permutation.begin(), g.permutation.end(), std::uint8_t{0});
      break;
    case GroupKind::su2:
      g.quaternion = Quaternion{1.0, 0.0, 0.0, 0.0};
      break;
  }
  return g;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  require_same_descriptor(a, b);
  GroupElement g;
  g.descriptor = a.descriptor;
  switch (a.descriptor.kind) {
    case GroupKind::cyclic:
      g.residue = (a.residue + b.residue) % a.descriptor.n;
      break;
    case GroupKind::symmetric: {
      g.permutation.resize(a.permutation.size());
      for (std::size_t i = 0; i < a.permutation.size(); ++i) {
        g.permutation[i] = a.permutation[b.permutation[i]];
      }
      break;
    }
    case GroupKind::su2: {
      const Quaternion& p = a.quaternion;
      const Quaternion& q = b.quaternion;
      Quaternion r;
      r.w = p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z;
      r.x = p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y;
      r.y = p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x;
      r.z = p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w;
      g.quaternion = normalized(r);
      break;
    }
  }
  return g;
}

GroupElement inverse(const GroupElement& a) {
  GroupElement g;
  g.descriptor = a.descriptor;
  switch (a.descriptor.kind) {
    case GroupKind::cyclic:
      g.residue = (a.descriptor.n - a.residue) % a.descriptor.n;
      break;
    case GroupKind::symmetric: {
      g.permutation.resize(a.permutation.size());
      for (std::size_t i = 0; i < a.permutation.size(); ++i) {
        g.permutation[a.permutation[i]] = static_cast<std::uint8_t>(i);
      }
      break;
    }
    case GroupKind::su2:
      g.quaternion = Quaternion{a.quaternion.w, -a.quaternion.x, -a.quaternion.y,
                                -a.quaternion.z};
      break;
  }
  return g;
}

bool equal(const GroupElement& a, const GroupElement& b) {
  require_same_descriptor(a, b);
  return distance(a, b) <= (a.descriptor.kind == GroupKind::su2
                                ? a.descriptor.tolerance
                                : 0.0);
}

double distance(const GroupElement& a, const GroupElement& b) {
  require_same_descriptor(a, b);
  switch (a.descriptor.kind) {
    case GroupKind::cyclic:
      return a.residue == b.residue ? 0.0 : 1.0;
    case GroupKind::symmetric:
      return a.permutation == b.permutation ? 0.0 : 1.0;
    case GroupKind::su2: {
      // q and -q are distinct elements of SU(2); no sign flip here.
      const double dw = std::fabs(a.quaternion.w - b.quaternion.w);
      const double dx = std::fabs(a.quaternion.x - b.quaternion.x);
      const double dy = std::fabs(a.quaternion.y - b.quaternion.y);
      const double dz = std::fabs(a.quaternion.z - b.quaternion.z);
      return std::max({dw, dx, dy, dz});
    }
  }
  return 0.0;
}

double character(const GroupElement& a) {
  switch (a.descriptor.kind) {
    case GroupKind::cyclic:
      return std::cos(2.0 * std::numbers::pi * static_cast<double>(a.residue) /
                      static_cast<double>(a.descriptor.n));
    case GroupKind::symmetric: {
      int fixed = 0;
      for (std::size_t i = 0; i < a.permutation.size(); ++i) {
        if (a.permutation[i] == i) ++fixed;
      }
      return static_cast<double>(fixed);
    }
    case GroupKind::su2:
      return 2.0 * a.quaternion.w;
  }
  return 0.0;
}

GroupElement haar_sample(const GroupDescriptor& d, RandomStream& rng) {
  GroupElement g;
  g.descriptor = d;
  switch (d.kind) {
    case GroupKind::cyclic:
      g.residue = static_cast<std::int64_t>(rng.uniform_below(d.n));
      break;
    case GroupKind::symmetric: {
      g.permutation.resize(d.n);
      std::iota(g.permutation.begin(), g.permutation.end(), std::uint8_t{0});
      // Fisher-Yates gives the uniform distribution on S_n.
      for (int i = d.n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng.uniform_below(i + 1));
        std::swap(g.permutation[i], g.permutation[j]);
      }
      break;
    }
    case GroupKind::su2: {
      // A normalized 4-vector of independent Gaussians is uniform on S^3.
      for (;;) {
        const Quaternion q{rng.gaussian(), rng.gaussian(), rng.gaussian(),
                           rng.gaussian()};
        const double norm = quaternion_norm(q);
        if (norm > 1e-8) {
          g.quaternion = Quaternion{q.w / norm, q.x / norm, q.y / norm,
                                    q.z / norm};
          break;
        }
      }
      break;
    }
  }
  return g;
}

std::vector<GroupElement> enumerate_elements(const GroupDescriptor& d) {
  if (!d.is_finite()) {
    fail(ErrorCode::unsupported_group, "su2 cannot be enumerated");
  }
  std::vector<GroupElement> elements;
  switch (d.kind) {
    case GroupKind::cyclic:
      elements.reserve(d.n);
      for (int k = 0; k < d.n; ++k) elements.push_back(cyclic_element(d, k));
      break;
    case GroupKind::symmetric: {
      std::vector<std::uint8_t> images(d.n);
      std::iota(images.begin(), images.end(), std::uint8_t{0});
      do {
        elements.push_back(permutation_element(d, images));
      } while (std::next_permutation(images.begin(), images.end()));
      break;
    }
    case GroupKind::su2:
      break;
  }
  return elements;
}

Quaternion quaternion_exp_pure(double vx, double vy, double vz) {
  const double theta = std::sqrt(vx * vx + vy * vy + vz * vz);
  if (theta < 1e-300) return Quaternion{1.0, 0.0, 0.0, 0.0};
  // sin(theta)/theta stays accurate through the small-angle regime.
  const double s = theta < 1e-4
                       ? 1.0 - theta * theta / 6.0 + theta * theta * theta * theta / 120.0
                       : std::sin(theta) / theta;
  return Quaternion{std::cos(theta), s * vx, s * vy, s * vz};
}

std::string to_string(const GroupDescriptor& d) {
  switch (d.kind) {
    case GroupKind::cyclic:
      return "cyclic:" + std::to_string(d.n);
    case GroupKind::symmetric:
      return "symmetric:" + std::to_string(d.n);
    case GroupKind::su2:
      if (d.tolerance == kDefaultSu2Tolerance) return "su2";
      return "su2:" + format_real(d.tolerance);
  }
  return "";
}

GroupDescriptor parse_descriptor(std::string_view text) {
  const auto colon = text.find(':');
  const std::string head{text.substr(0, colon)};
  const std::string tail{colon == std::string_view::npos
                             ? std::string_view{}
                             : text.substr(colon + 1)};
  try {
    if (head == "cyclic") {
      if (tail.empty()) fail(ErrorCode::parse_error, "cyclic needs an order");
      return GroupDescriptor::cyclic(
          static_cast<int>(parse_int(tail, "cyclic order")));
    }
    if (head == "symmetric") {
      if (tail.empty()) fail(ErrorCode::parse_error, "symmetric needs a degree");
      return GroupDescriptor::symmetric(
          static_cast<int>(parse_int(tail, "symmetric degree")));
    }
    if (head == "su2") {
      if (tail.empty()) return GroupDescriptor::su2();
      return GroupDescriptor::su2(parse_real(tail, "su2 tolerance"));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::invalid_argument) {
      fail(ErrorCode::parse_error, std::string("bad descriptor '") +
                                       std::string(text) + "': " + e.what());
    }
    throw;
  }
  fail(ErrorCode::parse_error,
       "unknown group descriptor '" + std::string(text) + "'");
}

std::string to_string(const GroupElement& g) {
  switch (g.descriptor.kind) {
    case GroupKind::cyclic:
      return std::to_string(g.residue);
    case GroupKind::symmetric: {
      std::string out;
      for (std::size_t i = 0; i < g.permutation.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(static_cast<int>(g.permutation[i]));
      }
      return out;
    }
    case GroupKind::su2: {
      const Quaternion& q = g.quaternion;
      return format_real(q.w) + " " + format_real(q.x) + " " + format_real(q.y) +
             " " + format_real(q.z);
    }
  }
  return "";
}

GroupElement parse_element(const GroupDescriptor& d, std::string_view text) {
  const std::vector<std::string> fields = split_fields(text);
  switch (d.kind) {
    case GroupKind::cyclic: {
      if (fields.size() != 1) {
        fail(ErrorCode::parse_error, "cyclic element needs one integer");
      }
      const std::int64_t value = parse_int(fields[0], "cyclic residue");
      if (value < 0 || value >= d.n) {
        fail(ErrorCode::parse_error,
             "cyclic residue " + fields[0] + " outside [0, " +
                 std::to_string(d.n) + ")");
      }
      return cyclic_element(d, value);
    }
    case GroupKind::symmetric: {
      if (static_cast<int>(fields.size()) != d.n) {
        fail(ErrorCode::parse_error,
             "symmetric element needs " + std::to_string(d.n) + " images");
      }
      std::vector<std::uint8_t> images;
      images.reserve(fields.size());
      for (const std::string& field : fields) {
        const std::int64_t image = parse_int(field, "permutation image");
        if (image < 0 || image >= d.n) {
          fail(ErrorCode::parse_error, "permutation image out of range");
        }
        images.push_back(static_cast<std::uint8_t>(image));
      }
      try {
        return permutation_element(d, std::move(images));
      } catch (const Error&) {
        fail(ErrorCode::parse_error, "permutation payload is not a bijection");
      }
    }
    case GroupKind::su2: {
      if (fields.size() != 4) {
        fail(ErrorCode::parse_error, "su2 element needs four reals");
      }
      const double w = parse_real(fields[0], "quaternion component");
      const double x = parse_real(fields[1], "quaternion component");
      const double y = parse_real(fields[2], "quaternion component");
      const double z = parse_real(fields[3], "quaternion component");
      const double norm = std::sqrt(w * w + x * x + y * y + z * z);
      if (std::fabs(norm - 1.0) > d.tolerance) {
        fail(ErrorCode::parse_error, "su2 payload norm deviates from 1 beyond tolerance");
      }
      return su2_element(d, w, x, y, z);
    }
  }
  fail(ErrorCode::parse_error, "unreachable descriptor kind");
}

}  // namespace genconn
