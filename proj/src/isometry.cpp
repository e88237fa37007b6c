#include "ideal24/isometry.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "ideal24/error.hpp"

namespace ideal24 {

int dot(const Vector4& a, const Vector4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Vector4 negate(const Vector4& v) { return {-v[0], -v[1], -v[2], -v[3]}; }

namespace {

constexpr char kAxisNames[4] = {'x', 'y', 'z', 'w'};

std::vector<Vector4> cell24_points() {
  std::vector<Vector4> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {-1, 1})
        for (int sj : {-1, 1}) {
          Vector4 v{0, 0, 0, 0};
          v[i] = si;
          v[j] = sj;
          out.push_back(v);
        }
  std::sort(out.begin(), out.end());
  return out;
}

long long det4(const std::array<long long, 16>& m) {
  // cofactor expansion along the first row
  auto det3 = [&](int c0, int c1, int c2) {
    auto at = [&](int r, int c) { return m[r * 4 + c]; };
    return at(1, c0) * (at(2, c1) * at(3, c2) - at(2, c2) * at(3, c1)) -
           at(1, c1) * (at(2, c0) * at(3, c2) - at(2, c2) * at(3, c0)) +
           at(1, c2) * (at(2, c0) * at(3, c1) - at(2, c1) * at(3, c0));
  };
  return m[0] * det3(1, 2, 3) - m[1] * det3(0, 2, 3) + m[2] * det3(0, 1, 3) - m[3] * det3(0, 1, 2);
}

}  // namespace

Isometry::Isometry() : twice_{} {
  for (int i = 0; i < 4; ++i) twice_[i * 4 + i] = 2;
}

Isometry Isometry::antipodal() { return signed_permutation({0, 1, 2, 3}, {-1, -1, -1, -1}); }

Isometry Isometry::signed_permutation(const std::array<int, 4>& source, const std::array<int, 4>& sign) {
  std::array<int, 16> t{};
  std::array<bool, 4> used{};
  for (int i = 0; i < 4; ++i) {
    if (source[i] < 0 || source[i] > 3 || used[source[i]] || (sign[i] != 1 && sign[i] != -1))
      throw EngineError(ErrorCode::InvalidIsometry, "not a signed permutation");
    used[source[i]] = true;
    t[i * 4 + source[i]] = 2 * sign[i];
  }
  Isometry m;
  m.twice_ = t;
  return m;
}

Isometry Isometry::from_twice_matrix(const std::array<int, 16>& twice) {
  // (2M)(2M)^T = 4I
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int s = 0;
      for (int k = 0; k < 4; ++k) s += twice[i * 4 + k] * twice[j * 4 + k];
      if (s != (i == j ? 4 : 0)) throw EngineError(ErrorCode::InvalidIsometry, "matrix is not orthogonal");
    }
  Isometry m;
  m.twice_ = twice;
  static const std::vector<Vector4> pts = cell24_points();
  for (const auto& p : pts) {
    Vector4 q{};
    for (int i = 0; i < 4; ++i) {
      int s = 0;
      for (int k = 0; k < 4; ++k) s += twice[i * 4 + k] * p[k];
      if (s % 2 != 0) throw EngineError(ErrorCode::InvalidIsometry, "map does not preserve the vertex lattice");
      q[i] = s / 2;
    }
    if (!std::binary_search(pts.begin(), pts.end(), q))
      throw EngineError(ErrorCode::InvalidIsometry, "map does not preserve the 24-cell");
  }
  return m;
}

Isometry Isometry::from_point_images(const std::vector<Vector4>& from, const std::vector<Vector4>& to) {
  if (from.size() != to.size()) throw EngineError(ErrorCode::InvalidArgument, "point lists differ in length");
  // first independent quadruple of source points
  auto try_quad = [&](const std::array<int, 4>& q, std::array<long long, 16>& v) {
    for (int c = 0; c < 4; ++c)
      for (int r = 0; r < 4; ++r) v[r * 4 + c] = from[q[c]][r];
    return det4(v) != 0;
  };
  std::array<long long, 16> vmat{};
  std::array<int, 4> quad{};
  bool found = false;
  const int n = static_cast<int>(from.size());
  for (int a = 0; a < n && !found; ++a)
    for (int b = a + 1; b < n && !found; ++b)
      for (int c = b + 1; c < n && !found; ++c)
        for (int d = c + 1; d < n && !found; ++d) {
          quad = {a, b, c, d};
          found = try_quad(quad, vmat);
        }
  if (!found) throw EngineError(ErrorCode::InvalidArgument, "points do not span 4-space");

  const long long det = det4(vmat);
  // adjugate of vmat
  std::array<long long, 16> adj{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      std::array<long long, 9> minor{};
      int idx = 0;
      for (int i = 0; i < 4; ++i) {
        if (i == r) continue;
        for (int j = 0; j < 4; ++j) {
          if (j == c) continue;
          minor[idx++] = vmat[i * 4 + j];
        }
      }
      long long m3 = minor[0] * (minor[4] * minor[8] - minor[5] * minor[7]) -
                     minor[1] * (minor[3] * minor[8] - minor[5] * minor[6]) +
                     minor[2] * (minor[3] * minor[7] - minor[4] * minor[6]);
      adj[c * 4 + r] = ((r + c) % 2 == 0 ? 1 : -1) * m3;
    }
  // 2M = 2 W adj(V) / det(V), with W the image columns
  std::array<int, 16> twice{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      long long s = 0;
      for (int k = 0; k < 4; ++k) s += static_cast<long long>(to[quad[k]][i]) * adj[k * 4 + j];
      s *= 2;
      if (s % det != 0) throw EngineError(ErrorCode::InvalidIsometry, "point images do not define a symmetry");
      twice[i * 4 + j] = static_cast<int>(s / det);
    }
  Isometry m = from_twice_matrix(twice);
  for (std::size_t k = 0; k < from.size(); ++k)
    if (m.apply(from[k]) != to[k])
      throw EngineError(ErrorCode::InvalidIsometry, "point images are not realized by a linear symmetry");
  return m;
}

Vector4 Isometry::apply(const Vector4& v) const {
  Vector4 out{};
  for (int i = 0; i < 4; ++i) {
    int s = 0;
    for (int k = 0; k < 4; ++k) s += twice_[i * 4 + k] * v[k];
    if (s % 2 != 0) throw EngineError(ErrorCode::InvalidArgument, "image is not an integer point");
    out[i] = s / 2;
  }
  return out;
}

Isometry Isometry::compose(const Isometry& rhs) const {
  Isometry out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int s = 0;
      for (int k = 0; k < 4; ++k) s += twice_[i * 4 + k] * rhs.twice_[k * 4 + j];
      out.twice_[i * 4 + j] = s / 2;
    }
  return out;
}

Isometry Isometry::inverse() const {
  Isometry out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.twice_[i * 4 + j] = twice_[j * 4 + i];
  return out;
}

int Isometry::determinant() const {
  std::array<long long, 16> m{};
  for (int i = 0; i < 16; ++i) m[i] = twice_[i];
  return static_cast<int>(det4(m) / 16);
}

bool Isometry::is_identity() const { return *this == Isometry(); }

bool Isometry::is_signed_permutation() const {
  return std::all_of(twice_.begin(), twice_.end(), [](int e) { return e == 0 || e == 2 || e == -2; });
}

std::string Isometry::mapspec() const {
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) {
    if (i) os << ',';
    if (is_signed_permutation()) {
      for (int k = 0; k < 4; ++k) {
        int e = twice_[i * 4 + k];
        if (e != 0) os << (e < 0 ? "-" : "") << kAxisNames[k];
      }
    } else {
      os << '(';
      bool first = true;
      for (int k = 0; k < 4; ++k) {
        int e = twice_[i * 4 + k];
        if (e == 0) continue;
        if (e < 0)
          os << '-';
        else if (!first)
          os << '+';
        os << kAxisNames[k];
        first = false;
      }
      os << ")/2";
    }
  }
  return os.str();
}

Isometry parse_mapspec(const std::string& text) {
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == ',') {
        parts.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur += ch;
      }
    }
    parts.push_back(cur);
  }
  if (parts.size() != 4)
    throw EngineError(ErrorCode::InvalidArgument, "mapspec needs four components, got " + std::to_string(parts.size()));
  std::array<int, 16> twice{};
  for (int i = 0; i < 4; ++i) {
    std::string p = parts[i];
    int scale = 2;
    if (!p.empty() && p.front() == '(') {
      if (p.size() < 5 || p.substr(p.size() - 3) != ")/2")
        throw EngineError(ErrorCode::InvalidArgument, "malformed half-integer component '" + parts[i] + "'");
      p = p.substr(1, p.size() - 4);
      scale = 1;
    }
    if (p.empty()) throw EngineError(ErrorCode::InvalidArgument, "empty mapspec component");
    std::size_t pos = 0;
    int terms = 0;
    while (pos < p.size()) {
      int sign = 1;
      if (p[pos] == '+' || p[pos] == '-') {
        sign = p[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (terms > 0) {
        throw EngineError(ErrorCode::InvalidArgument, "missing operator in component '" + parts[i] + "'");
      }
      if (pos >= p.size()) throw EngineError(ErrorCode::InvalidArgument, "dangling sign in '" + parts[i] + "'");
      const char* hit = std::find(std::begin(kAxisNames), std::end(kAxisNames), p[pos]);
      if (hit == std::end(kAxisNames))
        throw EngineError(ErrorCode::InvalidArgument,
                          std::string("unknown coordinate '") + p[pos] + "' in component '" + parts[i] + "'");
      const int axis = static_cast<int>(hit - std::begin(kAxisNames));
      if (twice[i * 4 + axis] != 0)
        throw EngineError(ErrorCode::InvalidArgument, "repeated coordinate in '" + parts[i] + "'");
      twice[i * 4 + axis] = sign * scale;
      ++pos;
      ++terms;
    }
  }
  try {
    return Isometry::from_twice_matrix(twice);
  } catch (const EngineError&) {
    throw EngineError(ErrorCode::InvalidArgument, "mapspec '" + text + "' is not a symmetry of the 24-cell");
  }
}

const std::vector<Isometry>& signed_perm_group() {
  static const std::vector<Isometry> group = [] {
    std::vector<Isometry> out;
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      for (int mask = 0; mask < 16; ++mask) {
        std::array<int, 4> sign{};
        for (int i = 0; i < 4; ++i) sign[i] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(Isometry::signed_permutation(perm, sign));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }();
  return group;
}

const std::vector<Isometry>& full_symmetry_group() {
  static const std::vector<Isometry> group = [] {
    // closure of the signed permutations and one colour-permuting element
    std::set<Isometry> seen(signed_perm_group().begin(), signed_perm_group().end());
    const Isometry tri = parse_mapspec("(x+y+z+w)/2,(x+y-z-w)/2,(x-y+z-w)/2,(x-y-z+w)/2");
    std::vector<Isometry> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
      std::vector<Isometry> next;
      for (const auto& g : frontier)
        for (const Isometry& h : {tri, Isometry::signed_permutation({1, 0, 2, 3}, {1, 1, 1, 1}),
                                  Isometry::signed_permutation({0, 2, 1, 3}, {1, 1, 1, 1}),
                                  Isometry::signed_permutation({0, 1, 3, 2}, {1, 1, 1, 1}),
                                  Isometry::signed_permutation({0, 1, 2, 3}, {-1, 1, 1, 1})}) {
          Isometry p = h.compose(g);
          if (seen.insert(p).second) next.push_back(p);
        }
      frontier = std::move(next);
    }
    return std::vector<Isometry>(seen.begin(), seen.end());
  }();
  return group;
}

Isometry map_h() { return Isometry::signed_permutation({0, 1, 2, 3}, {-1, -1, 1, 1}); }

std::size_t IsometryHash::operator()(const Isometry& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.twice_matrix()) h = (h ^ static_cast<std::size_t>(e + 3)) * 1099511628211ull;
  return h;
}

}  // namespace ideal24
