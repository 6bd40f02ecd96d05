#include "axtk/fixtures.hpp"

#include <algorithm>
#include <map>

namespace axtk {

namespace {

Perm from_cycles(size_t degree, const std::vector<std::vector<int>>& cycles) {
  Perm p = perm_identity(degree);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      p[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
  }
  return p;
}

PermGroup m11() {
  return PermGroup({from_cycles(11, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}),
                    from_cycles(11, {{2, 6, 10, 7}, {3, 9, 4, 5}})},
                   11);
}

// PSL(2, 11) on the projective line {0..10, infinity=11}: x -> x+1 and
// x -> -1/x.
PermGroup l2_11() {
  auto inv_mod = [](int x) {
    for (int y = 1; y < 11; ++y) {
      if (x * y % 11 == 1) return y;
    }
    throw FixtureError("no inverse");
  };
  Perm shift(12), turn(12);
  for (int x = 0; x < 11; ++x) shift[x] = (x + 1) % 11;
  shift[11] = 11;
  turn[0] = 11;
  turn[11] = 0;
  for (int x = 1; x < 11; ++x) turn[x] = (11 - inv_mod(x)) % 11;
  return PermGroup({shift, turn}, 12);
}

PermGroup s_n(size_t n) {
  std::vector<int> cyc(n);
  for (size_t i = 0; i < n; ++i) cyc[i] = int(i);
  return PermGroup({from_cycles(n, {cyc}), from_cycles(n, {{0, 1}})}, n);
}

// GL(2,3) on the 8 nonzero vectors of F3^2; vector (a, b) has index 3a+b-1.
PermGroup gl_2_3() {
  auto linear = [](int m00, int m01, int m10, int m11) {
    Perm p(8);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a == 0 && b == 0) continue;
        const int a2 = ((m00 * a + m01 * b) % 3 + 3) % 3;
        const int b2 = ((m10 * a + m11 * b) % 3 + 3) % 3;
        p[3 * a + b - 1] = 3 * a2 + b2 - 1;
      }
    }
    return p;
  };
  return PermGroup({linear(1, 1, 0, 1), linear(1, 0, 1, 1), linear(2, 0, 0, 1)}, 8);
}

// Affine maps of F9 = F3[t]/(t^2+1) on 9 points; x = a + b*t has index 3a+b.
Perm f9_map(int (*fa)(int, int), int (*fb)(int, int)) {
  Perm p(9);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const int a2 = ((fa(a, b)) % 3 + 3) % 3;
      const int b2 = ((fb(a, b)) % 3 + 3) % 3;
      p[3 * a + b] = 3 * a2 + b2;
    }
  }
  return p;
}

// AGammaL(1,9): x -> x+1, x -> (t+1)x, x -> x^3 (order 144).
PermGroup u3_2_2() {
  const Perm t1 = f9_map([](int a, int) { return a + 1; }, [](int, int b) { return b; });
  const Perm mul = f9_map([](int a, int b) { return a - b; },
                          [](int a, int b) { return a + b; });
  const Perm frob = f9_map([](int a, int) { return a; }, [](int, int b) { return -b; });
  return PermGroup({t1, mul, frob}, 9);
}

// Translations and the point reflections of AG(2,3) (order 18).
PermGroup three_sq_2() {
  const Perm t1 = f9_map([](int a, int) { return a + 1; }, [](int, int b) { return b; });
  const Perm t2 = f9_map([](int a, int) { return a; }, [](int, int b) { return b + 1; });
  const Perm neg = f9_map([](int a, int) { return -a; }, [](int, int b) { return -b; });
  return PermGroup({t1, t2, neg}, 9);
}

// AGL(2,3) on the 9 points of AG(2,3) (order 432).
PermGroup agl_2_3() {
  const Perm t1 = f9_map([](int a, int) { return a + 1; }, [](int, int b) { return b; });
  const Perm t2 = f9_map([](int a, int) { return a; }, [](int, int b) { return b + 1; });
  const Perm u = f9_map([](int a, int b) { return a + b; }, [](int, int b) { return b; });
  const Perm l = f9_map([](int a, int) { return a; }, [](int a, int b) { return a + b; });
  const Perm d = f9_map([](int a, int) { return 2 * a; }, [](int, int b) { return b; });
  return PermGroup({t1, t2, u, l, d}, 9);
}

// S3 wr S2 on {0,1,2} + {3,4,5} (order 72).
PermGroup s3_wr_2() {
  return PermGroup({from_cycles(6, {{0, 1, 2}}), from_cycles(6, {{0, 1}}),
                    from_cycles(6, {{3, 4, 5}}), from_cycles(6, {{3, 4}}),
                    from_cycles(6, {{0, 3}, {1, 4}, {2, 5}})},
                   6);
}

// Dihedral group of order 14 on 7 points; its reflections are a conjugation
// -closed involution class with pair products of order 7.
PermGroup d14() {
  Perm rot(7), refl(7);
  for (int x = 0; x < 7; ++x) {
    rot[x] = (x + 1) % 7;
    refl[x] = (7 - x) % 7;
  }
  return PermGroup({rot, refl}, 7);
}

}  // namespace

PermGroup fixture_group(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"L2(11)", "L2_11"}, {"2.S4", "2S4"},      {"U3(2):2", "U3_2_2"},
      {"3^2:2", "3_2_2"},  {"AGL(2,3)", "AGL_2_3"}};
  std::string key = name;
  if (auto it = aliases.find(key); it != aliases.end()) key = it->second;
  if (key == "M11") return m11();
  if (key == "M10") return m11().stabilizer(10);
  if (key == "L2_11") return l2_11();
  if (key == "S5") return s_n(5);
  if (key == "S3") return s_n(3);
  if (key == "2S4") return gl_2_3();
  if (key == "U3_2_2") return u3_2_2();
  if (key == "3_2_2") return three_sq_2();
  if (key == "AGL_2_3") return agl_2_3();
  if (key == "S3wr2") return s3_wr_2();
  if (key == "D14") return d14();
  std::string known;
  for (const std::string& n : fixture_names()) {
    if (!known.empty()) known += ", ";
    known += n;
  }
  throw FixtureError("unknown fixture '" + name + "' (known: " + known + ")");
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "M11", "M10",     "L2_11", "S5",    "S3",  "2S4",
      "U3_2_2", "3_2_2", "AGL_2_3", "S3wr2", "D14"};
  return names;
}

}  // namespace axtk
